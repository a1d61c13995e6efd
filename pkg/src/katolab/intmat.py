"""Exact dense integer matrices and integral lattice utilities.

Everything here is arbitrary-precision and deterministic: matrix products,
Bareiss determinants, Hermite normal forms with unimodular witnesses, left
fixed lattices, and lattice indices computed over the rationals.  Matrices are
immutable; sizes are small (a handful of rows), so clarity wins over
asymptotics throughout.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ._limits import guard_int

Row = tuple[int, ...]


def _as_rows(rows: Iterable[Iterable[int]]) -> tuple[Row, ...]:
    out: list[Row] = []
    width: int | None = None
    for raw in rows:
        row = tuple(int(operator.index(x)) for x in raw)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError("ragged rows: all rows must have the same length")
        out.append(row)
    if not out or width == 0:
        raise ValueError("matrix must have at least one row and one column")
    return tuple(out)


class IntMatrix:
    """Immutable row-major integer matrix.

    Rectangular shapes are allowed; operations that only make sense for
    square matrices (``det``, ``n``, powers, ...) raise ``ValueError`` on
    non-square input.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", _as_rows(rows))

    def __setattr__(self, name, value):  # immutability
        raise AttributeError("IntMatrix is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        if n < 1:
            raise ValueError("dimension must be >= 1")
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(cols).transpose()

    # -- shape and access --------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def n(self) -> int:
        """Square dimension; raises if the matrix is rectangular."""
        if self.nrows != self.ncols:
            raise ValueError("matrix is not square")
        return self.nrows

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> Row:
        return self.rows[i]

    def col(self, j: int) -> Row:
        return tuple(r[j] for r in self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def columns(self) -> tuple[Row, ...]:
        return tuple(self.col(j) for j in range(self.ncols))

    def to_rows(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    # -- predicates ---------------------------------------------------------

    def is_identity(self) -> bool:
        return self.is_square and all(
            x == int(i == j) for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def is_positive(self) -> bool:
        return all(x > 0 for r in self.rows for x in r)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._shape_match(other)
        return IntMatrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._shape_match(other)
        return IntMatrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self.rows])

    def __mul__(self, other: Union["IntMatrix", int]) -> "IntMatrix":
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise ValueError("inner dimensions do not match")
            cols = other.columns()
            return IntMatrix(
                [
                    [
                        guard_int(sum(x * y for x, y in zip(r, c)), "matrix entry")
                        for c in cols
                    ]
                    for r in self.rows
                ]
            )
        return IntMatrix([[x * other for x in r] for r in self.rows])

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntMatrix":
        n = self.n
        if e < 0:
            return self.inverse_unimodular() ** (-e)
        acc = IntMatrix.identity(n)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base if e > 1 else base
            e >>= 1
        return acc

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.columns())

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    # -- exact linear algebra ------------------------------------------------

    def det(self) -> int:
        """Determinant via the fraction-free Bareiss elimination."""
        n = self.n
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if piv is None:
                    return 0
                a[k], a[piv] = a[piv], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = guard_int(
                        (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev, "determinant minor"
                    )
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        """Rank over the rationals."""
        rows = [[Fraction(x) for x in r] for r in self.rows]
        rank = 0
        for col in range(self.ncols):
            piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = 1 / rows[rank][col]
            rows[rank] = [x * inv for x in rows[rank]]
            for i in range(len(rows)):
                if i != rank and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
            rank += 1
        return rank

    def inverse_unimodular(self) -> "IntMatrix":
        """Exact inverse of a matrix with determinant +-1."""
        n = self.n
        if self.det() not in (1, -1):
            raise ValueError("matrix is not unimodular")
        aug = [
            [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        for col in range(n):
            piv = next(i for i in range(col, n) if aug[i][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for i in range(n):
                if i != col and aug[i][col]:
                    f = aug[i][col]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
        out = [[aug[i][n + j] for j in range(n)] for i in range(n)]
        assert all(x.denominator == 1 for r in out for x in r)
        return IntMatrix([[int(x) for x in r] for r in out])

    # -- dunder plumbing -----------------------------------------------------

    def _shape_match(self, other: "IntMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r})"


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product (associative; guarded by the digit cap)."""
    return a * b


def vec_mat(v: Sequence[int], m: IntMatrix) -> Row:
    """Row vector times matrix, exactly."""
    if len(v) != m.nrows:
        raise ValueError("vector length does not match row count")
    return tuple(
        guard_int(sum(v[i] * m.rows[i][j] for i in range(m.nrows)), "vector entry")
        for j in range(m.ncols)
    )


def mat_vec(m: IntMatrix, v: Sequence[int]) -> Row:
    """Matrix times column vector, exactly."""
    if len(v) != m.ncols:
        raise ValueError("vector length does not match column count")
    return tuple(
        guard_int(sum(r[j] * v[j] for j in range(m.ncols)), "vector entry") for r in m.rows
    )


# -- Hermite normal form ------------------------------------------------------


def _row_addmul(rows: list[list[int]], dst: int, src: int, factor: int) -> None:
    if factor:
        rows[dst] = [x + factor * y for x, y in zip(rows[dst], rows[src])]


def hermite_normal_form(
    m: Union[IntMatrix, Iterable[Iterable[int]]],
) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form with unimodular witness.

    Returns ``(H, U)`` with ``U * m == H``, ``|det U| == 1``, pivots positive,
    entries above each pivot reduced into ``[0, pivot)``, and zero rows of
    ``H`` collected at the bottom.  ``m`` may be rectangular.
    """
    mat = m if isinstance(m, IntMatrix) else IntMatrix(m)
    nr, nc = mat.nrows, mat.ncols
    work = mat.to_rows()
    u = IntMatrix.identity(nr).to_rows()
    top = 0
    for col in range(nc):
        if top == nr:
            break
        # Euclid downward: shrink entries at/below `top` until one survives.
        while True:
            live = [i for i in range(top, nr) if work[i][col] != 0]
            if not live:
                break
            piv = min(live, key=lambda i: (abs(work[i][col]), i))
            if piv != top:
                work[top], work[piv] = work[piv], work[top]
                u[top], u[piv] = u[piv], u[top]
            clean = True
            for i in range(top + 1, nr):
                if work[i][col] != 0:
                    q = work[i][col] // work[top][col]
                    _row_addmul(work, i, top, -q)
                    _row_addmul(u, i, top, -q)
                    if work[i][col] != 0:
                        clean = False
            if clean:
                break
        if work[top][col] == 0:
            continue
        if work[top][col] < 0:
            work[top] = [-x for x in work[top]]
            u[top] = [-x for x in u[top]]
        for i in range(top):  # reduce the entries above the pivot into [0, p)
            q = work[i][col] // work[top][col]
            _row_addmul(work, i, top, -q)
            _row_addmul(u, i, top, -q)
        top += 1
    for row in work:
        for x in row:
            guard_int(x, "normal form entry")
    return IntMatrix(work), IntMatrix(u)


# -- lattices ------------------------------------------------------------------


@dataclass(frozen=True)
class LatticeBasis:
    """Canonical basis (Hermite-reduced rows) of a sublattice of Z^ambient_dim.

    ``rows`` may be empty (the zero lattice).  Two equal lattices always
    produce equal ``LatticeBasis`` values, so ``==`` is lattice equality.
    """

    ambient_dim: int
    rows: tuple[Row, ...]

    @classmethod
    def from_rows(cls, ambient_dim: int, rows: Iterable[Iterable[int]]) -> "LatticeBasis":
        raw = [tuple(int(operator.index(x)) for x in r) for r in rows]
        for r in raw:
            if len(r) != ambient_dim:
                raise ValueError("row length does not match ambient dimension")
        raw = [r for r in raw if any(r)]
        if not raw:
            return cls(ambient_dim, ())
        h, _ = hermite_normal_form(raw)
        return cls(ambient_dim, tuple(r for r in h.rows if any(r)))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "rows": [list(r) for r in self.rows]}


def left_kernel_lattice(m: IntMatrix) -> LatticeBasis:
    """Saturated lattice ``{v : v m = 0}`` as canonical rows.

    The rows of the unimodular witness opposite the zero rows of the Hermite
    form are an exact basis of the integer left kernel.
    """
    h, u = hermite_normal_form(m)
    kernel = [u.rows[i] for i in range(m.nrows) if not any(h.rows[i])]
    return LatticeBasis.from_rows(m.nrows, kernel)


def left_fixed_lattice(a: IntMatrix) -> LatticeBasis:
    """Lattice of integer row vectors ``v`` with ``v a == v``."""
    return left_kernel_lattice(a - IntMatrix.identity(a.n))


def _solve_in_span(basis: tuple[Row, ...], target: Row) -> list[Fraction] | None:
    """Solve ``x . basis == target`` over Q; None if target is outside the span.

    ``basis`` rows must be linearly independent (LatticeBasis guarantees it).
    """
    m = len(basis)
    n = len(target)
    aug = [
        [Fraction(basis[i][j]) for i in range(m)] + [Fraction(target[j])]
        for j in range(n)
    ]
    pivots: list[int] = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][m]:
            return None
    x = [Fraction(0)] * m
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][m]
    return x


def lattice_index(sub: LatticeBasis, sup: LatticeBasis) -> Union[int, float]:
    """Index ``[sup : sub]``: a positive integer, or ``math.inf`` if rank drops.

    Raises ``ValueError`` when ``sub`` is not contained in ``sup`` (either
    outside the rational span or with non-integer coordinates in it).
    """
    if sub.ambient_dim != sup.ambient_dim:
        raise ValueError("ambient dimensions differ")
    coeffs: list[list[Fraction]] = []
    for v in sub.rows:
        x = _solve_in_span(sup.rows, v)
        if x is None:
            raise ValueError("sub-lattice is not contained in the rational span")
        coeffs.append(x)
    if any(c.denominator != 1 for row in coeffs for c in row):
        raise ValueError("not a sublattice: non-integer coordinates over the big lattice")
    if sub.rank < sup.rank:
        return math.inf
    if sup.rank == 0:
        return 1
    x_mat = IntMatrix([[int(c) for c in row] for row in coeffs])
    return abs(x_mat.det())


# -- characteristic polynomial -------------------------------------------------


def characteristic_polynomial(a: IntMatrix) -> tuple[int, ...]:
    """Coefficients of ``det(t I - a)`` in ascending order (monic, exact).

    Uses the Faddeev-LeVerrier recurrence; every division is exact for
    integer input, which is asserted.
    """
    n = a.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = IntMatrix.identity(n)
    for k in range(1, n + 1):
        am = a * mk
        tr = am.trace()
        q, rem = divmod(-tr, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[n - k] = q
        if k < n:
            mk = am + IntMatrix.identity(n) * q
    return tuple(coeffs)

"""Sparse exact Gaussian elimination over the rationals.

The verification systems produce equations as dicts from hashable variable
keys to coefficients; all we ever need is the rank (hence nullity).  Rows are
reduced online against the pivots found so far, keyed by the smallest
variable index, which keeps the elimination deterministic for a fixed
variable order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

_F0 = Fraction(0)


def system_rank(
    variables: Sequence[Hashable],
    equations: Iterable[Mapping[Hashable, Fraction]],
) -> int:
    index = {v: i for i, v in enumerate(variables)}
    if len(index) != len(variables):
        raise ValueError("duplicate variables")
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for eq in equations:
        row: dict[int, Fraction] = {}
        for var, coeff in eq.items():
            c = Fraction(coeff)
            if not c:
                continue
            if var not in index:
                raise ValueError(f"equation mentions unknown variable {var!r}")
            row[index[var]] = row.get(index[var], _F0) + c
        row = {k: c for k, c in row.items() if c}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                f = row[lead]
                pivots[lead] = {k: c / f for k, c in row.items()}
                rank += 1
                break
            f = row.pop(lead)
            for k, c in piv.items():
                if k == lead:
                    continue
                nv = row.get(k, _F0) - f * c
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def system_nullity(
    variables: Sequence[Hashable],
    equations: Iterable[Mapping[Hashable, Fraction]],
) -> int:
    """Dimension of the solution space of the homogeneous system."""
    return len(variables) - system_rank(variables, equations)

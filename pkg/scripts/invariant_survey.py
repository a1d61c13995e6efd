#!/usr/bin/env python3
"""Survey closed-form invariants over a random corpus of factor words.

Draws random words, builds the full invariant report for each, and prints
histograms: type distribution, lattice indices, dimension kinds, and how
often the anticanonical count is available.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from katolab import FactorSeq, build_report, compose_factors


@dataclass
class SurveyConfig:
    samples: int = 200
    n_min: int = 2
    n_max: int = 5
    k_max: int = 8
    seed: int = 0


def random_word(rng: random.Random, cfg: SurveyConfig) -> FactorSeq:
    while True:
        n = rng.randint(cfg.n_min, cfg.n_max)
        k = rng.randint(1, cfg.k_max)
        indices = tuple(rng.randint(1, n) for _ in range(k))
        if any(j != n for j in indices):
            return FactorSeq(n, indices)


def run_survey(cfg: SurveyConfig) -> None:
    rng = random.Random(cfg.seed)
    type_hist: Counter = Counter()
    index_hist: Counter = Counter()
    dim_kind_hist: Counter = Counter()
    anticanonical = 0
    max_alpha = (0.0, None)
    for _ in range(cfg.samples):
        seq = random_word(rng, cfg)
        report = build_report(compose_factors(seq))
        type_hist[(report.n, report.l)] += 1
        index_hist[report.theta_index] += 1
        dim_kind_hist[report.alg_dim.kind] += 1
        if report.anticanonical_h0 is not None:
            anticanonical += 1
        if report.perron_alpha > max_alpha[0]:
            max_alpha = (report.perron_alpha, seq)

    print(f"surveyed {cfg.samples} words, seed={cfg.seed}")
    print("\n(n, type) histogram:")
    for key in sorted(type_hist):
        print(f"  n={key[0]} l={key[1]}: {type_hist[key]}")
    print("\nlattice index histogram:")
    for key in sorted(index_hist):
        print(f"  index {key}: {index_hist[key]}")
    print("\nalgebraic-dimension kinds:")
    for key in sorted(dim_kind_hist):
        print(f"  {key}: {dim_kind_hist[key]}")
    print(f"\nanticanonical count available: {anticanonical}/{cfg.samples}")
    alpha, seq = max_alpha
    print(f"largest dominant eigenvalue: {alpha:.6f} at {seq.n=} indices={seq.indices}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=SurveyConfig.samples)
    parser.add_argument("--n-min", type=int, default=SurveyConfig.n_min)
    parser.add_argument("--n-max", type=int, default=SurveyConfig.n_max)
    parser.add_argument("--k-max", type=int, default=SurveyConfig.k_max)
    parser.add_argument("--seed", type=int, default=SurveyConfig.seed)
    args = parser.parse_args()
    run_survey(
        SurveyConfig(
            samples=args.samples,
            n_min=args.n_min,
            n_max=args.n_max,
            k_max=args.k_max,
            seed=args.seed,
        )
    )


if __name__ == "__main__":
    main()

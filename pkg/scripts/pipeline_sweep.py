"""Compare the three discriminant-degree pipelines over split bundles on P^n.

Prints one line per bundle: the ramification-class sum, the closed form
(when the rank admits one) and the jet-bundle route.
"""

import argparse
from dataclasses import dataclass
from itertools import combinations_with_replacement

from chernkit import (
    closed_form_degree,
    direct_sum,
    expected_degree,
    jet_route_degree,
    line_bundle,
    projective_space,
)


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 4
    min_degree: int = 1
    max_degree: int = 2


def sweep(cfg: SweepConfig):
    for n in range(1, cfg.max_n + 1):
        X = projective_space(n)
        for e in range(1, n + 1):
            for degrees in combinations_with_replacement(range(cfg.min_degree, cfg.max_degree + 1), e):
                E = direct_sum(*(line_bundle(X, [a]) for a in degrees))
                closed = closed_form_degree(E) if e in (1, n - 1, n) else None
                yield n, degrees, expected_degree(E), closed, jet_route_degree(E)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--min-degree", type=int, default=SweepConfig.min_degree)
    ap.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.max_n, args.min_degree, args.max_degree)
    total = disagreements = 0
    for n, degrees, delta, closed, jet in sweep(cfg):
        total += 1
        ok = delta == jet and closed in (None, delta)
        disagreements += not ok
        shown = "-" if closed is None else closed
        print(f"P^{n} O{list(degrees)}: {delta} {shown} {jet}{'' if ok else '  DISAGREE'}")
    print(f"{total} bundles, {disagreements} disagreements")
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())

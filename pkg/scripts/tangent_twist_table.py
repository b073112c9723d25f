"""Tabulate δ(T_{P^n}(d)) and the Chern integrals of T_{P^n}(d).

    python3 scripts/tangent_twist_table.py --max-n 5 --max-d 4
"""

import argparse
from dataclasses import dataclass

from chernkit import expected_degree, projective_space, tangent, twist_by_line


@dataclass(frozen=True)
class TableConfig:
    max_n: int = 4
    max_d: int = 3


def rows(cfg: TableConfig):
    for n in range(1, cfg.max_n + 1):
        X = projective_space(n)
        h = X.gen("h")
        for d in range(cfg.max_d + 1):
            E = twist_by_line(tangent(X), d * h)
            integrals = [int(X.integrate(E.c(i) * h ** (n - i))) for i in range(1, n + 1)]
            yield n, d, expected_degree(E), n * (n + 1) * (d + 1) ** n, integrals


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--max-d", type=int, default=TableConfig.max_d)
    args = ap.parse_args(argv)
    cfg = TableConfig(args.max_n, args.max_d)
    print(f"{'n':>2} {'d':>2} {'delta':>10} {'n(n+1)(d+1)^n':>14}  integrals c_1..c_n")
    bad = 0
    for n, d, delta, closed, integrals in rows(cfg):
        flag = "" if delta == closed else "  MISMATCH"
        bad += bool(flag)
        print(f"{n:>2} {d:>2} {delta:>10} {closed:>14}  {integrals}{flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

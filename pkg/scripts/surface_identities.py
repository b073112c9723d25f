"""Print the rank-2 surface identities: branch classes for d = 1..N and the χ cubic."""

import argparse

from chernkit.bogomolov import (
    branch_divisor_class,
    branch_gamma,
    chi_sym_cubic,
    gamma_via_relative_jets,
    rank2_setup,
)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=6)
    args = ap.parse_args(argv)
    S = rank2_setup()
    for d in range(1, args.max_d + 1):
        same = gamma_via_relative_jets(S, d) == branch_gamma(S, d)
        print(f"d={d}: gamma = {branch_gamma(S, d)}")
        print(f"      pushforward = {branch_divisor_class(S, d)}   jet route agrees: {same}")
    cubic = chi_sym_cubic(S)
    for k, a in enumerate(cubic.coefficients):
        print(f"chi m^{k}: {a}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

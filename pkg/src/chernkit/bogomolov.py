"""Rank-2 bundles on a surface: branch classes, the χ cubic, instability.

Everything here runs on a free formal surface with no integration table, so
the identities produced are class-level and hold on every surface at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundle_calculus import (
    BundleClass,
    chern_character,
    direct_sum,
    line_bundle_from_class,
    sym_power,
    twist_by_line,
)
from .errors import BadMultiDegree, MissingGenerator
from .graded_ring import Generator, GradedClass, VarietyModel, make_variety
from .proj_bundle import ProjBundle, make_proj_bundle, relative_cotangent

SIGN_NOTE = (
    "pushforward of the branch cycle gives d(d-1)*D - 2(d-1)*A; the form "
    "d(d-1)*D + 2(d-1)*A differs only in the sign of the A term"
)


def formal_surface() -> VarietyModel:
    """Free surface ring: divisors D, A, H, K and degree-2 classes c2E, eX."""
    gens = [Generator("D", 1), Generator("A", 1), Generator("H", 1), Generator("K", 1),
            Generator("c2E", 2), Generator("eX", 2)]
    return make_variety(2, gens, label="S")


@dataclass(frozen=True)
class Rank2Setup:
    surface: VarietyModel
    E: BundleClass
    P: ProjBundle

    def cls(self, name: str) -> GradedClass:
        return self.surface.gen(name)


def rank2_setup(surface: VarietyModel | None = None) -> Rank2Setup:
    """E of rank 2 with c_1 = D, c_2 = c2E, and its projectivization."""
    S = formal_surface() if surface is None else surface
    E = BundleClass(2, S.one() + S.gen("D") + S.gen("c2E"))
    return Rank2Setup(S, E, make_proj_bundle(S, E))


def _check_d(d: int) -> None:
    if d < 1:
        raise BadMultiDegree(f"multisection degree must be >= 1, got {d}")


def branch_gamma(setup: Rank2Setup, d: int) -> GradedClass:
    """((d-2) xi + π*(D-A)) · (d xi - π*A) on P(E)."""
    _check_d(d)
    P = setup.P
    D, A = P.pullback(setup.cls("D")), P.pullback(setup.cls("A"))
    return ((d - 2) * P.xi + D - A) * (d * P.xi - A)


def branch_divisor_class(setup: Rank2Setup, d: int) -> GradedClass:
    return setup.P.pushforward(branch_gamma(setup, d))


@dataclass(frozen=True)
class BranchReport:
    degree: int
    derived: GradedClass
    stated_variant: GradedClass
    note: str = SIGN_NOTE


def branch_report(setup: Rank2Setup, d: int) -> BranchReport:
    D, A = setup.cls("D"), setup.cls("A")
    stated = d * (d - 1) * D + 2 * (d - 1) * A
    return BranchReport(d, branch_divisor_class(setup, d), stated)


def gamma_via_relative_jets(setup: Rank2Setup, d: int) -> GradedClass:
    """c_2 of the relative first jet bundle of O(d) ⊗ π*O(-A)."""
    _check_d(d)
    P = setup.P
    L = line_bundle_from_class(d * P.xi - P.pullback(setup.cls("A")))
    jet = direct_sum(twist_by_line(relative_cotangent(P), L), L)
    return jet.c(2)


@dataclass(frozen=True)
class ChiCubic:
    """χ(S, Sym^{2m}E ⊗ O(-mD)) = sum_k coefficients[k] m^k."""

    coefficients: tuple
    values: tuple  # χ at m = 0..4, the last one used only as a degree check

    def at(self, m) -> GradedClass:
        total = self.coefficients[0].model.zero()
        for k, a in enumerate(self.coefficients):
            total = total + a * Fraction(m) ** k
        return total


def sym_twist(setup: Rank2Setup, m: int) -> BundleClass:
    D = setup.cls("D")
    return twist_by_line(sym_power(setup.E, 2 * m), -m * D)


def todd_surface(S: VarietyModel) -> GradedClass:
    for name in ("K", "eX"):
        if name not in S.names:
            raise MissingGenerator(f"surface needs a generator named {name!r}")
    K, eX = S.gen("K"), S.gen("eX")
    return S.one() - K * Fraction(1, 2) + (K * K + eX) * Fraction(1, 12)


def _chi(setup: Rank2Setup, m: int) -> GradedClass:
    S = setup.surface
    ch = chern_character(sym_twist(setup, m)).terms
    return S.integrate(ch * todd_surface(S))


def _interpolate(values: list) -> list:
    """Coefficients of the polynomial through (m, values[m]), m = 0..len-1."""
    n = len(values)
    # Newton divided differences on integer nodes
    table = list(values)
    newton = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) * Fraction(1, level) for i in range(len(table) - 1)]
        newton.append(table[0])
    model = values[0].model
    coeffs = [model.zero() for _ in range(n)]
    basis = [Fraction(1)]  # coefficients of prod_{i<k} (m - i)
    for k in range(n):
        for p, b in enumerate(basis):
            if b:
                coeffs[p] = coeffs[p] + newton[k] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for p, b in enumerate(basis):
            nxt[p + 1] += b
            nxt[p] -= k * b
        basis = nxt
    return coeffs


def chi_sym_cubic(setup: Rank2Setup) -> ChiCubic:
    todd_surface(setup.surface)
    values = [_chi(setup, m) for m in range(4)]
    coeffs = _interpolate(values)
    extra = _chi(setup, 4)
    cubic = ChiCubic(tuple(coeffs), tuple(values) + (extra,))
    if cubic.at(4) != extra:
        raise ArithmeticError("χ(m) is not cubic in m")
    return cubic


@dataclass(frozen=True)
class InstabilityInput:
    D2: int
    A2: int
    AD: int
    AH: int
    DH: int
    c2: int
    lengthW: int = 0

    def __post_init__(self):
        if self.lengthW < 0:
            raise ValueError("length(W) must be nonnegative")


@dataclass(frozen=True)
class InstabilityReport:
    discriminant: int  # D^2 - 4 c_2
    bogomolov_inequality: bool
    destabilizer_valid: bool
    c2_consistent: bool


def instability_check(data: InstabilityInput) -> InstabilityReport:
    disc = data.D2 - 4 * data.c2
    square = 4 * data.A2 - 4 * data.AD + data.D2  # (2A - D)^2
    slope = 2 * data.AH - data.DH  # (2A - D).H
    return InstabilityReport(
        discriminant=disc,
        bogomolov_inequality=disc > 0,
        destabilizer_valid=square > 4 * data.lengthW and slope > 0,
        c2_consistent=data.c2 == data.lengthW + data.AD - data.A2,
    )

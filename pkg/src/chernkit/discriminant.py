"""Ramification classes and expected degrees of discriminant loci.

For a rank-e bundle E on an n-dimensional X, the ramification class of the
universal zero scheme lives on P(M*), where M is the kernel of the evaluation
map.  P(M*) is never built: the class is a polynomial in a free degree-1
symbol zeta over A(X), and the pushforward rule p_*(zeta^(r-e+i)) = c_i(E)
collapses the degree to

    delta(E) = sum_j  ∫_X rho_j · c_{e-1+j}(E),

where rho_j is the coefficient of zeta^j in the ramification class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundle_calculus import BundleClass, dual, jet1_line, segre_total, twist_by_line
from .catalog import cotangent
from .errors import ModeRankMismatch, RankOutOfRange
from .graded_ring import Generator, GradedClass, VarietyModel
from .proj_bundle import make_proj_bundle, tautological, total_cotangent

HYPOTHESES_NOTE = (
    "deg Δ(E) equals the expected degree only when E is very ample and 1-jet spanned "
    "(asserted by the caller, not checked); then Δ(E) is a hypersurface iff the "
    "expected degree is positive, i.e. defect(E) > 0 iff it vanishes. The multiplicity "
    "of the ramification locus is taken to be 1."
)

MODES = ("e1", "en", "en_minus_1")


@dataclass(frozen=True)
class RamificationProfile:
    base: VarietyModel
    bundle: BundleClass
    rhos: tuple  # rho_j on the base, of degree n - e + 1 - j

    @property
    def codimension(self) -> int:
        return self.base.dimension - self.bundle.rank + 1

    def __str__(self) -> str:
        parts = []
        for j, rho in enumerate(self.rhos):
            if rho:
                suffix = "" if j == 0 else "*zeta" if j == 1 else f"*zeta^{j}"
                parts.append(f"({rho}){suffix}")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class DiscriminantReport:
    expected_degree: int
    defect_positive: bool
    hypotheses_note: str = HYPOTHESES_NOTE


def _default_omega(E: BundleClass, omega: BundleClass | None) -> BundleClass:
    return cotangent(E.model) if omega is None else omega


def _check_rank(E: BundleClass) -> None:
    n, e = E.model.dimension, E.rank
    if not 1 <= e <= n:
        raise RankOutOfRange(f"need 1 <= rank <= dim, got rank {e} on a {n}-dimensional base")


def _zeta_ring(X: VarietyModel, codim: int) -> VarietyModel:
    name = "zeta"
    while name in X.names:
        name += "_"
    gens = X.generators + (Generator(name, 1),)
    bounds = X.bounds + ((tuple(range(X.ngens)), X.dimension),)
    # only the codimension-(n-e+1) part is ever read, so truncate there
    return VarietyModel(codim, gens, bounds=bounds, relations=X.relations, label=f"{X}[{name}]")


def ramification_profile(E: BundleClass, omega: BundleClass | None = None) -> RamificationProfile:
    """{c(p*Ω) s(p*E* ⊗ O(-1))}_{n-e+1}, split by powers of zeta."""
    _check_rank(E)
    omega = _default_omega(E, omega)
    X = E.model
    codim = X.dimension - E.rank + 1
    R = _zeta_ring(X, codim)
    zeta = R.gen(R.names[-1])
    lift = lambda b: BundleClass(b.rank, b.total_chern.embed(R))
    F = twist_by_line(lift(dual(E)), -zeta)
    ram = (lift(omega).total_chern * segre_total(F)).component(codim)
    rhos = [dict() for _ in range(codim + 1)]
    for exps, q in ram.terms.items():
        rhos[exps[-1]][exps[:-1]] = q
    return RamificationProfile(X, E, tuple(GradedClass(X, t, reduced=True) for t in rhos))


def _as_int(q) -> int:
    if not isinstance(q, Fraction) or q.denominator != 1:
        raise ValueError(f"expected an integer degree, got {q}")
    return int(q)


def degree_terms(profile: RamificationProfile) -> list:
    """The summands ∫ rho_j c_{e-1+j}(E), one per j."""
    X, E = profile.base, profile.bundle
    e = E.rank
    return [X.integrate(rho * E.c(e - 1 + j)) for j, rho in enumerate(profile.rhos)]


def expected_degree(E: BundleClass, omega: BundleClass | None = None) -> int:
    return _as_int(sum(degree_terms(ramification_profile(E, omega)), Fraction(0)))


def closed_form_degree(E: BundleClass, mode: str | None = None, omega: BundleClass | None = None) -> int:
    """Rank-specific closed forms; ``mode=None`` picks one from the rank."""
    _check_rank(E)
    omega = _default_omega(E, omega)
    X = E.model
    n, e = X.dimension, E.rank
    if mode is None:
        mode = "e1" if e == 1 else "en" if e == n else "en_minus_1" if e == n - 1 else None
        if mode is None:
            raise ModeRankMismatch(f"no closed form for rank {e} on a {n}-dimensional base")
    required = {"e1": 1, "en": n, "en_minus_1": n - 1}.get(mode)
    if required is None:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if e != required:
        raise ModeRankMismatch(f"mode {mode} needs rank {required}, got {e}")
    c1E = E.c(1)
    if mode == "e1":
        total = X.zero()
        for i in range(n + 1):
            total = total + (i + 1) * (omega.c(n - i) * c1E ** i)
    elif mode == "en":
        total = (omega.c(1) + c1E) * E.c(n - 1) + n * E.c(n)
    else:
        total = ((omega.c(2) + omega.c(1) * c1E + c1E ** 2 - E.c(2)) * E.c(n - 2)
                 + ((n - 1) * omega.c(1) + n * c1E) * E.c(n - 1))
    return _as_int(X.integrate(total))


def jet_route_degree(E: BundleClass, omega: BundleClass | None = None) -> int:
    """∫_{P(E)} c_top(J_1(O_{P(E)}(1))), with Ω_{P(E)} built from Ω_X."""
    _check_rank(E)
    omega = _default_omega(E, omega)
    P = make_proj_bundle(E.model, E)
    jet = jet1_line(tautological(P), total_cotangent(P, omega))
    return _as_int(P.model.integrate(jet.c(P.dimension)))


def classify(E: BundleClass, omega: BundleClass | None = None) -> DiscriminantReport:
    delta = expected_degree(E, omega)
    return DiscriminantReport(delta, delta == 0)

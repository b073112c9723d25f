"""Vector bundles as Chern-class data.

A bundle is nothing more than a rank and a total Chern class.  Operations that
are not linear in the Chern roots (tensor and symmetric powers) go through the
Chern character and Newton's identities; the results are checked to be
integral rather than rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import (
    InvalidBundle,
    ModelMismatch,
    NonIntegralResult,
    NotDegreeOne,
    NotLineBundle,
    RankMismatch,
    RankUnsupported,
)
from .graded_ring import GradedClass, VarietyModel, invert_unit


@dataclass(frozen=True)
class BundleClass:
    rank: int
    total_chern: GradedClass

    def __post_init__(self):
        c = self.total_chern
        if self.rank < 0:
            raise InvalidBundle("rank must be nonnegative")
        if c.constant_term() != 1 or c.component(0) != 1:
            raise InvalidBundle(f"total Chern class {c} does not start with 1")
        if any(d > self.rank for d in c.degrees()):
            raise InvalidBundle(f"Chern class {c} has components above rank {self.rank}")
        if not c.is_integral():
            raise InvalidBundle(f"Chern class {c} is not integral")

    @property
    def model(self) -> VarietyModel:
        return self.total_chern.model

    def c(self, i: int) -> GradedClass:
        return self.total_chern.component(i)

    def __str__(self) -> str:
        return f"Bundle(rank={self.rank}, c={self.total_chern})"


@dataclass(frozen=True)
class CharacterClass:
    """Chern character; the degree-0 coefficient is the rank."""

    terms: GradedClass

    @property
    def model(self) -> VarietyModel:
        return self.terms.model

    def __str__(self) -> str:
        return str(self.terms)


def trivial_bundle(model: VarietyModel, rank: int = 1) -> BundleClass:
    return BundleClass(rank, model.one())


def line_bundle_from_class(c1: GradedClass) -> BundleClass:
    if not c1.is_homogeneous(1):
        raise NotDegreeOne(f"{c1} is not a degree-1 class")
    return BundleClass(1, c1.model.one() + c1)


def _same_model(*bundles: BundleClass) -> None:
    if not bundles:
        raise ValueError("need at least one bundle")
    first = bundles[0].model
    for b in bundles[1:]:
        if b.model != first:
            raise ModelMismatch(f"bundles live on different models: {first} vs {b.model}")


def _signed(a: GradedClass) -> GradedClass:
    deg = a.model.degree_of
    return GradedClass(a.model, {m: (-c if deg(m) % 2 else c) for m, c in a.terms.items()},
                       reduced=True)


def dual(E: BundleClass) -> BundleClass:
    return BundleClass(E.rank, _signed(E.total_chern))


def direct_sum(*bundles: BundleClass) -> BundleClass:
    _same_model(*bundles)
    c = bundles[0].model.one()
    for b in bundles:
        c = c * b.total_chern
    return BundleClass(sum(b.rank for b in bundles), c)


def _as_divisor(L) -> GradedClass:
    if isinstance(L, BundleClass):
        if L.rank != 1:
            raise NotLineBundle(f"twisting needs a line bundle, got rank {L.rank}")
        return L.c(1)
    if not L.is_homogeneous(1):
        raise NotDegreeOne(f"{L} is not a degree-1 class")
    return L


def twist_by_line(E: BundleClass, L) -> BundleClass:
    """``E ⊗ L`` for a line bundle (or divisor class) ``L``.

    Uses c_i(E⊗L) = sum_j C(e-j, i-j) c_j(E) L^(i-j).
    """
    ell = _as_divisor(L)
    if ell.model != E.model:
        raise ModelMismatch("twist: bundle and line class live on different models")
    e = E.rank
    cs = [E.c(j) for j in range(e + 1)]
    powers = [ell ** k for k in range(e + 1)]
    total = E.model.zero()
    for i in range(e + 1):
        for j in range(i + 1):
            if cs[j]:
                total = total + comb(e - j, i - j) * (cs[j] * powers[i - j])
    return BundleClass(e, total)


def segre_total(E: BundleClass) -> GradedClass:
    return invert_unit(E.total_chern)


def difference_class(E: BundleClass, F: BundleClass) -> GradedClass:
    """c(E - F) = c(E) s(F)."""
    _same_model(E, F)
    return E.total_chern * segre_total(F)


def _power_sums(cs: list, top: int) -> list:
    """Newton: p_k from elementary symmetric functions e_k = cs[k]."""
    model = cs[0].model
    e = lambda k: cs[k] if k < len(cs) else model.zero()
    p = [None]
    for k in range(1, top + 1):
        acc = (-1) ** (k - 1) * k * e(k)
        for i in range(1, k):
            if e(i):
                acc = acc + (-1) ** (i - 1) * (e(i) * p[k - i])
        p.append(acc)
    return p


def _elementary_from_power_sums(p: list, top: int) -> list:
    model = p[1].model if len(p) > 1 else None
    e = [model.one()]
    for k in range(1, top + 1):
        acc = model.zero()
        for i in range(1, k + 1):
            acc = acc + (-1) ** (i - 1) * (e[k - i] * p[i])
        e.append(acc * Fraction(1, k))
    return e


def chern_character(E: BundleClass) -> CharacterClass:
    model = E.model
    top = model.dimension
    cs = [E.c(k) for k in range(min(E.rank, top) + 1)]
    p = _power_sums(cs, top)
    ch = model.constant(E.rank)
    for k in range(1, top + 1):
        ch = ch + p[k] * Fraction(1, factorial(k))
    return CharacterClass(ch)


def character_to_chern(ch: CharacterClass, rank: int) -> BundleClass:
    terms = ch.terms
    model = terms.model
    if terms.constant_term() != rank:
        raise RankMismatch(f"character has rank {terms.constant_term()}, expected {rank}")
    top = model.dimension
    if top == 0:
        return BundleClass(rank, model.one())
    p = [None] + [terms.component(k) * factorial(k) for k in range(1, top + 1)]
    e = _elementary_from_power_sums(p, top)
    total = model.zero()
    for part in e:
        total = total + part
    if not total.is_integral():
        raise NonIntegralResult(f"Chern class {total} recovered from a character is not integral")
    return BundleClass(rank, total)


def tensor(E: BundleClass, F: BundleClass) -> BundleClass:
    _same_model(E, F)
    ch = chern_character(E).terms * chern_character(F).terms
    return character_to_chern(CharacterClass(ch), E.rank * F.rank)


def _pair_power_sums(c1: GradedClass, c2: GradedClass, top: int) -> list:
    """q_j = a^j + b^j for the two Chern roots a, b."""
    model = c1.model
    q = [model.constant(2), c1]
    for j in range(2, top + 1):
        q.append(c1 * q[j - 1] - c2 * q[j - 2])
    return q


def sym_power(E: BundleClass, k: int) -> BundleClass:
    """Symmetric power of a bundle of rank 1 or 2."""
    if k < 0:
        raise ValueError("symmetric power index must be nonnegative")
    model = E.model
    if E.rank == 1:
        return line_bundle_from_class(E.c(1) * k) if k else trivial_bundle(model)
    if E.rank != 2:
        raise RankUnsupported(f"symmetric powers are implemented for rank <= 2, got {E.rank}")
    top = model.dimension
    c1, c2 = E.c(1), E.c(2)
    q = _pair_power_sums(c1, c2, top)
    c2_pows = [c2 ** s for s in range(top + 1)]
    ch = model.constant(k + 1)
    for m in range(1, top + 1):
        # roots of Sym^k are i*a + (k-i)*b; P_m = sum_{s+t=m} C(m,s) w(s,t) a^s b^t
        weight = lambda s, t: sum(i ** s * (k - i) ** t for i in range(k + 1))
        pm = model.zero()
        for s in range(m + 1):
            t = m - s
            if s > t:
                break
            coef = comb(m, s) * weight(s, t)
            if s == t:
                pm = pm + coef * c2_pows[s]
            else:
                pm = pm + coef * (c2_pows[s] * q[t - s])
        ch = ch + pm * Fraction(1, factorial(m))
    return character_to_chern(CharacterClass(ch), k + 1)


def jet1_line(L: BundleClass, omega: BundleClass) -> BundleClass:
    """First jet bundle of a line bundle: c(J1 L) = c(Ω⊗L) c(L)."""
    if L.rank != 1:
        raise NotLineBundle(f"jet1_line needs a line bundle, got rank {L.rank}")
    _same_model(L, omega)
    twisted = twist_by_line(omega, L)
    return BundleClass(omega.rank + 1, twisted.total_chern * L.total_chern)

"""Projective bundles P(E) of one-dimensional quotients.

The Chow ring is A(X)[xi] / (sum_i (-1)^i c_i(E) xi^(e-i)), where
xi = c_1(O_{P(E)}(1)).  The ring is exposed as an ordinary
:class:`~chernkit.graded_ring.VarietyModel` (base generators followed by
``xi``, with the relation installed as a rewrite rule), so every bundle
operation runs on P(E) unchanged.  Pushforward is extraction of the
coefficient of xi^(e-1) from the reduced form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundle_calculus import BundleClass, direct_sum, twist_by_line
from .errors import DuplicateGenerator, ModelMismatch, ZeroRank
from .graded_ring import Generator, GradedClass, Relation, VarietyModel


@dataclass(frozen=True)
class ProjBundle:
    base: VarietyModel
    bundle: BundleClass
    model: VarietyModel

    @property
    def rank(self) -> int:
        return self.bundle.rank

    @property
    def dimension(self) -> int:
        return self.model.dimension

    @property
    def xi(self) -> GradedClass:
        return self.model.gen(self.model.names[self.model.fiber])

    def pullback(self, alpha):
        """Pull back a base class or bundle."""
        if isinstance(alpha, BundleClass):
            return BundleClass(alpha.rank, self.pullback(alpha.total_chern))
        if alpha.model != self.base:
            raise ModelMismatch(f"{alpha} is not a class on {self.base}")
        return alpha.embed(self.model)

    def coefficients(self, c: GradedClass) -> list:
        """[a_0, ..., a_{e-1}] with c = sum a_j xi^j, a_j on the base."""
        self._check(c)
        f = self.model.fiber
        coeffs = [dict() for _ in range(self.rank)]
        for exps, q in c.terms.items():
            coeffs[exps[f]][exps[:f] + exps[f + 1:]] = q
        return [GradedClass(self.base, t, reduced=True) for t in coeffs]

    def from_coefficients(self, coeffs) -> GradedClass:
        total = self.model.zero()
        for j, a in enumerate(coeffs):
            total = total + self.pullback(a) * self.xi ** j
        return total

    def reduce(self, c: GradedClass) -> GradedClass:
        # classes on the model are kept reduced; re-normalizing is a no-op
        self._check(c)
        return GradedClass(self.model, c.terms)

    def pushforward(self, c: GradedClass) -> GradedClass:
        return self.coefficients(c)[self.rank - 1]

    def integrate_total(self, c: GradedClass):
        return self.base.integrate(self.pushforward(c))

    def render(self, c: GradedClass) -> str:
        return str(c)

    def _check(self, c: GradedClass) -> None:
        if c.model != self.model:
            raise ModelMismatch(f"{c} is not a class on {self.model}")

    def __str__(self) -> str:
        return self.model.label


def make_proj_bundle(base: VarietyModel, E: BundleClass, xi_name: str = "xi") -> ProjBundle:
    if E.rank < 1:
        raise ZeroRank("cannot projectivize a rank-0 bundle")
    if E.model != base:
        raise ModelMismatch(f"bundle lives on {E.model}, not {base}")
    if xi_name in base.names:
        raise DuplicateGenerator(f"base already has a generator named {xi_name!r}")
    e = E.rank
    nb = base.ngens
    gens = base.generators + (Generator(xi_name, 1),)
    dim = base.dimension + e - 1
    bounds = base.bounds + ((tuple(range(nb)), base.dimension),)
    # xi^e = sum_{i>=1} (-1)^(i+1) c_i(E) xi^(e-i)
    replacement = {}
    for i in range(1, e + 1):
        sign = 1 if i % 2 else -1
        for exps, q in E.c(i).terms.items():
            key = exps + (e - i,)
            replacement[key] = replacement.get(key, 0) + sign * q
    relation = Relation(nb, e, tuple(sorted(replacement.items())))
    table = None
    if base._table is not None:
        table = tuple(sorted((exps + (e - 1,), v) for exps, v in base._table.items()))
    label = f"P({E}) over {base}"
    model = VarietyModel(dim, gens, table, bounds, base.relations + (relation,), fiber=nb, label=label)
    return ProjBundle(base, E, model)


def relative_cotangent(P: ProjBundle) -> BundleClass:
    """Ω_{P(E)/X}, from 0 → Ω(1) → π*E → O(1) → 0; rank e - 1."""
    pulled = P.pullback(P.bundle)
    twisted = twist_by_line(pulled, -P.xi)
    return BundleClass(P.rank - 1, twisted.total_chern)


def relative_canonical_class(P: ProjBundle) -> GradedClass:
    """K_{P(E)/X} = -e xi + π*c_1(E)."""
    return -P.rank * P.xi + P.pullback(P.bundle.c(1))


def total_cotangent(P: ProjBundle, omega: BundleClass) -> BundleClass:
    """Ω_{P(E)} given Ω_X, via 0 → π*Ω_X → Ω_{P(E)} → Ω_{P(E)/X} → 0."""
    return direct_sum(P.pullback(omega), relative_cotangent(P))


def tautological(P: ProjBundle) -> BundleClass:
    """O_{P(E)}(1)."""
    return BundleClass(1, P.model.one() + P.xi)

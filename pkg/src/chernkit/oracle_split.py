"""Splitting-principle oracle for bundles on P^n.

A split bundle is a multiset of line-bundle degrees; its Chern class is the
product of (1 + a h) expanded directly.  Only the ring layer is shared with
:mod:`chernkit.bundle_calculus`, so agreement between the two is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModelMismatch, OutOfTable
from .graded_ring import GradedClass, VarietyModel


@dataclass(frozen=True)
class SplitBundle:
    model: VarietyModel
    degrees: tuple

    def __post_init__(self):
        if self.model.ngens != 1:
            raise ValueError("split bundles are defined over P^n (one generator)")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def chern(self) -> GradedClass:
        h = self.model.gen(self.model.names[0])
        c = self.model.one()
        for a in self.degrees:
            c = c * (1 + a * h)
        return c


def _check(S: SplitBundle, T: SplitBundle) -> None:
    if S.model != T.model:
        raise ModelMismatch("split bundles live on different models")


def oracle_tensor(S: SplitBundle, T: SplitBundle) -> SplitBundle:
    _check(S, T)
    return SplitBundle(S.model, tuple(a + b for a in S.degrees for b in T.degrees))


def oracle_sym(S: SplitBundle, k: int) -> SplitBundle:
    if S.rank == 1:
        return SplitBundle(S.model, (k * S.degrees[0],))
    if S.rank != 2:
        raise ValueError("oracle_sym handles rank <= 2")
    a, b = S.degrees
    return SplitBundle(S.model, tuple(i * a + (k - i) * b for i in range(k + 1)))


def oracle_twist(S: SplitBundle, b: int) -> SplitBundle:
    return SplitBundle(S.model, tuple(a + b for a in S.degrees))


def oracle_dual(S: SplitBundle) -> SplitBundle:
    return SplitBundle(S.model, tuple(-a for a in S.degrees))


def oracle_sum(S: SplitBundle, T: SplitBundle) -> SplitBundle:
    _check(S, T)
    return SplitBundle(S.model, S.degrees + T.degrees)


# Degrees of the classical discriminant of degree-d forms in n+1 variables.
# Binary forms: 2(d-1); ternary quadrics: det of a symmetric 3x3 matrix;
# in general (n+1)(d-1)^n.
CLASSICAL_DISCRIMINANT_DEGREES = {
    (1, 1): 0, (1, 2): 2, (1, 3): 4, (1, 4): 6, (1, 5): 8, (1, 6): 10,
    (2, 1): 0, (2, 2): 3, (2, 3): 12, (2, 4): 27,
    (3, 1): 0, (3, 2): 4, (3, 3): 32, (3, 4): 108,
    (4, 2): 5, (4, 3): 80,
}


def oracle_disc_small(n: int, d: int) -> int:
    try:
        return CLASSICAL_DISCRIMINANT_DEGREES[(n, d)]
    except KeyError:
        raise OutOfTable(f"no classical discriminant degree recorded for n={n}, d={d}") from None

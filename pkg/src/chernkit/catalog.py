"""Standard varieties and bundles: projective spaces and their products."""

from __future__ import annotations

from .bundle_calculus import BundleClass, dual
from .errors import ArityMismatch, ChernError
from .graded_ring import Generator, GradedClass, VarietyModel, make_variety


def projective_space(n: int) -> VarietyModel:
    """P^n with hyperplane class ``h`` and ∫h^n = 1."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return make_variety(n, [Generator("h", 1)], {"h^%d" % n if n else "1": 1}, label=f"P({n})")


def multi_projective(*dims: int) -> VarietyModel:
    if not dims:
        raise ValueError("need at least one factor")
    if len(dims) == 1:
        return projective_space(dims[0])
    if any(n < 1 for n in dims):
        raise ValueError("factor dimensions must be positive")
    gens = [Generator(f"h{i + 1}", 1, n + 1) for i, n in enumerate(dims)]
    top = tuple(dims)
    label = "x".join(f"P({n})" for n in dims)
    return make_variety(sum(dims), gens, {top: 1}, label=label)


def factor_dimensions(X: VarietyModel) -> tuple:
    """Recover (n_1, ..., n_k) from a model built by this module."""
    gens = X.generators
    if len(gens) == 1 and gens[0].degree == 1 and gens[0].power_cap is None and X._table is not None:
        return (X.dimension,)
    if gens and all(g.degree == 1 and g.power_cap for g in gens):
        dims = tuple(g.power_cap - 1 for g in gens)
        if sum(dims) == X.dimension and X._table is not None:
            return dims
    raise ChernError(f"{X} is not a (product of) projective space(s)")


def hyperplane(X: VarietyModel, i: int = 0) -> GradedClass:
    return X.gen(X.names[i])


def line_bundle(X: VarietyModel, degrees) -> BundleClass:
    """O(d_1, ..., d_k): c_1 = sum d_i h_i."""
    degrees = list(degrees)
    if len(degrees) != X.ngens:
        raise ArityMismatch(f"{X} has {X.ngens} generator(s), got {len(degrees)} degree(s)")
    c1 = X.zero()
    for name, d in zip(X.names, degrees):
        c1 = c1 + d * X.gen(name)
    return BundleClass(1, X.one() + c1)


def tangent(X: VarietyModel) -> BundleClass:
    """Euler sequence: c(T) = prod (1 + h_i)^(n_i + 1)."""
    dims = factor_dimensions(X)
    c = X.one()
    for name, n in zip(X.names, dims):
        c = c * (X.one() + X.gen(name)) ** (n + 1)
    return BundleClass(sum(dims), c)


def cotangent(X: VarietyModel) -> BundleClass:
    return dual(tangent(X))

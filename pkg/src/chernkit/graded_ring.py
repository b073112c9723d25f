"""Truncated graded polynomial rings over the rationals.

A :class:`VarietyModel` is a polynomial ring in named generators of positive
degree, modulo

* total degree above ``dimension``,
* per-generator power caps (``g**cap == 0``),
* optional partial-degree bounds (the sum of degrees over a subset of
  generators may not exceed a bound),
* optional monic rewrite rules ``g**k -> replacement`` applied procedurally.

Caps and degree truncation cover projective spaces, their products and free
formal surfaces.  Bounds and rewrite rules exist so that a projective bundle
can present its own ring as a ``VarietyModel`` (see :mod:`chernkit.proj_bundle`).

Coefficients are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Union

from .errors import (
    BadTableEntry,
    DuplicateGenerator,
    MissingTableEntry,
    ModelMismatch,
    NonUnitSeries,
)

Exps = tuple  # tuple[int, ...], one exponent per generator
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int = 1
    power_cap: int | None = None

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"generator name {self.name!r} is not an identifier")
        if self.degree < 1:
            raise ValueError(f"generator {self.name} must have degree >= 1")
        if self.power_cap is not None and self.power_cap < 1:
            raise ValueError(f"generator {self.name} has power cap < 1")


@dataclass(frozen=True)
class Relation:
    """Rewrite ``generators[index] ** power`` as ``replacement``.

    Every monomial of the replacement must have a strictly smaller exponent on
    ``index`` so that repeated rewriting terminates.
    """

    index: int
    power: int
    replacement: tuple  # tuple[tuple[Exps, Fraction], ...]


@dataclass(frozen=True)
class VarietyModel:
    dimension: int
    generators: tuple
    integration_table: tuple | None = None
    bounds: tuple = ()
    relations: tuple = ()
    fiber: int | None = None
    label: str = field(default="", compare=False)

    @cached_property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    @cached_property
    def _degrees(self) -> tuple:
        return tuple(g.degree for g in self.generators)

    @cached_property
    def _caps(self) -> tuple:
        return tuple((i, g.power_cap) for i, g in enumerate(self.generators)
                     if g.power_cap is not None)

    @cached_property
    def _table(self) -> dict | None:
        if self.integration_table is None:
            return None
        return dict(self.integration_table)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def degree_of(self, exps: Exps) -> int:
        return sum(e * d for e, d in zip(exps, self._degrees))

    def alive(self, exps: Exps) -> bool:
        """False when the monomial is zero by truncation, caps or bounds."""
        if self.degree_of(exps) > self.dimension:
            return False
        for i, cap in self._caps:
            if exps[i] >= cap:
                return False
        for indices, bound in self.bounds:
            if sum(exps[i] * self._degrees[i] for i in indices) > bound:
                return False
        return True

    def is_reduced(self, exps: Exps) -> bool:
        return self.alive(exps) and all(exps[r.index] < r.power for r in self.relations)

    def normalize(self, terms: Mapping) -> dict:
        out: dict = {}
        stack = list(terms.items())
        while stack:
            exps, c = stack.pop()
            if not c or not self.alive(exps):
                continue
            for rel in self.relations:
                if exps[rel.index] >= rel.power:
                    rest = list(exps)
                    rest[rel.index] -= rel.power
                    for rexps, rc in rel.replacement:
                        stack.append((tuple(a + b for a, b in zip(rest, rexps)), c * rc))
                    break
            else:
                out[exps] = out.get(exps, 0) + c
        return {m: Fraction(c) for m, c in out.items() if c}

    # constructors -------------------------------------------------------

    def zero(self) -> "GradedClass":
        return GradedClass(self, {})

    def one(self) -> "GradedClass":
        return self.constant(1)

    def constant(self, q: Scalar) -> "GradedClass":
        return GradedClass(self, {(0,) * self.ngens: Fraction(q)})

    def gen(self, name: str) -> "GradedClass":
        exps = [0] * self.ngens
        exps[self.index(name)] = 1
        return GradedClass(self, {tuple(exps): Fraction(1)})

    def monomial(self, term: str | Exps) -> Exps:
        """Parse ``"h1^2*h2"`` (or pass through an exponent tuple)."""
        if isinstance(term, tuple):
            if len(term) != self.ngens:
                raise ValueError(f"exponent tuple {term} has wrong length")
            return term
        exps = [0] * self.ngens
        term = term.strip()
        if term in ("", "1"):
            return tuple(exps)
        for factor in term.split("*"):
            m = re.fullmatch(r"\s*([A-Za-z_]\w*)\s*(?:\^\s*(\d+))?\s*", factor)
            if m is None:
                raise ValueError(f"cannot parse monomial {term!r}")
            exps[self.index(m.group(1))] += int(m.group(2) or 1)
        return tuple(exps)

    def integrate(self, a: "GradedClass"):
        return integrate(self, a)

    def __str__(self) -> str:
        return self.label or f"Variety(dim={self.dimension}; {', '.join(self.names)})"


def make_variety(dimension: int, generators: Iterable, integration_table: Mapping | None = None,
                 *, label: str = "") -> VarietyModel:
    """Build a frozen ring model.

    ``generators`` items are :class:`Generator` instances or tuples
    ``(name, degree[, cap])``.  Table keys are monomial strings or exponent
    tuples; values are anything :class:`~fractions.Fraction` accepts.
    """
    if dimension < 0:
        raise ValueError("dimension must be nonnegative")
    gens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in generators)
    seen = set()
    for g in gens:
        if g.name in seen:
            raise DuplicateGenerator(f"generator {g.name!r} declared twice")
        seen.add(g.name)
    model = VarietyModel(dimension, gens, label=label)
    if integration_table is None:
        return model
    table = {}
    for key, value in integration_table.items():
        exps = model.monomial(key)
        if model.degree_of(exps) != dimension or not model.is_reduced(exps):
            raise BadTableEntry(f"table entry {key!r} is not a surviving degree-{dimension} monomial")
        table[exps] = Fraction(value)
    return VarietyModel(dimension, gens, tuple(sorted(table.items())), label=label)


class GradedClass:
    """An element of a :class:`VarietyModel`; immutable."""

    __slots__ = ("model", "terms", "_hash")

    def __init__(self, model: VarietyModel, terms: Mapping | None = None, *, reduced: bool = False):
        self.model = model
        self.terms = dict(terms or {}) if reduced else model.normalize(terms or {})
        self._hash = None

    # coercion -------------------------------------------------------------

    def _coerce(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            if other.model is not self.model and other.model != self.model:
                raise ModelMismatch(f"classes live on different models: {self.model} vs {other.model}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.model.constant(other)
        return NotImplemented

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return GradedClass(self.model, {m: c for m, c in terms.items() if c}, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.model, {m: -c for m, c in self.terms.items()}, reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.model.zero()
            return GradedClass(self.model, {m: c * other for m, c in self.terms.items()}, reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        model = self.model
        raw: dict = {}
        for m1, c1 in self.terms.items():
            d1 = model.degree_of(m1)
            for m2, c2 in other.terms.items():
                if d1 + model.degree_of(m2) > model.dimension:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                raw[m] = raw.get(m, 0) + c1 * c2
        return GradedClass(model, raw)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.model.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # structure ------------------------------------------------------------

    def component(self, k: int) -> "GradedClass":
        deg = self.model.degree_of
        return GradedClass(self.model, {m: c for m, c in self.terms.items() if deg(m) == k},
                           reduced=True)

    def components(self) -> list:
        """Homogeneous parts in degrees ``0..dimension``."""
        return [self.component(k) for k in range(self.model.dimension + 1)]

    def degrees(self) -> set:
        return {self.model.degree_of(m) for m in self.terms}

    def is_homogeneous(self, k: int) -> bool:
        return self.degrees() <= {k}

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.model.ngens, Fraction(0))

    def coefficient(self, monomial) -> Fraction:
        return self.terms.get(self.model.monomial(monomial), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def map_coefficients(self, fn) -> "GradedClass":
        return GradedClass(self.model, {m: fn(m, c) for m, c in self.terms.items()})

    def embed(self, target: VarietyModel) -> "GradedClass":
        """Image under the inclusion into a model whose generators extend ours."""
        n = self.model.ngens
        if target.generators[:n] != self.model.generators:
            raise ModelMismatch(f"{target} does not extend {self.model}")
        pad = (0,) * (target.ngens - n)
        return GradedClass(target, {m + pad: c for m, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.model.constant(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.model == other.model and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.model, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list:
        deg = self.model.degree_of
        return sorted(self.terms.items(), key=lambda t: (deg(t[0]), tuple(-e for e in t[0])))

    def __str__(self) -> str:
        if self.model.fiber is not None:
            return _render_fibered(self)
        return _render(self.model, self.sorted_terms())

    def __repr__(self) -> str:
        return f"GradedClass({self})"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_monomial(names, exps, skip=None) -> str:
    parts = []
    for i, (name, e) in enumerate(zip(names, exps)):
        if e == 0 or i == skip:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _render(model: VarietyModel, items, skip=None) -> str:
    if not items:
        return "0"
    out = []
    for exps, c in items:
        mono = _fmt_monomial(model.names, exps, skip)
        mag = abs(c)
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def _render_fibered(a: GradedClass) -> str:
    model, f = a.model, a.model.fiber
    if not a.terms:
        return "0"
    by_power: dict = {}
    for exps, c in a.sorted_terms():
        by_power.setdefault(exps[f], []).append((exps, c))
    name = model.names[f]
    pieces = []
    for j in sorted(by_power):
        inner = _render(model, by_power[j], skip=f)
        suffix = "" if j == 0 else f"*{name}" if j == 1 else f"*{name}^{j}"
        pieces.append(f"({inner}){suffix}")
    return " + ".join(pieces)


def class_mul(a: GradedClass, b: GradedClass) -> GradedClass:
    if not isinstance(b, GradedClass) or (a.model is not b.model and a.model != b.model):
        raise ModelMismatch("class_mul needs two classes on the same model")
    return a * b


def component(a: GradedClass, k: int) -> GradedClass:
    return a.component(k)


def invert_unit(a: GradedClass) -> GradedClass:
    """Inverse of a class with constant term 1, by degree-wise recursion."""
    if a.constant_term() != 1:
        raise NonUnitSeries(f"constant term of {a} is not 1")
    parts = a.components()
    inv = [a.model.one()]
    for k in range(1, a.model.dimension + 1):
        acc = a.model.zero()
        for i in range(1, k + 1):
            if parts[i]:
                acc = acc - parts[i] * inv[k - i]
        inv.append(acc)
    result = a.model.zero()
    for part in inv:
        result = result + part
    return result


def integrate(model: VarietyModel, a: GradedClass):
    """Numeric integral if the model has a table, else the top-degree part."""
    if a.model != model:
        raise ModelMismatch(f"cannot integrate a class on {a.model} over {model}")
    top = a.component(model.dimension)
    table = model._table
    if table is None:
        return top
    total = Fraction(0)
    for exps, c in top.terms.items():
        if exps not in table:
            raise MissingTableEntry(
                f"no integral recorded for {_fmt_monomial(model.names, exps) or '1'} on {model}")
        total += c * table[exps]
    return total

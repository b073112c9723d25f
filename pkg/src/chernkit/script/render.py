"""Text and JSON renderings of script values.  Both are byte-stable."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from ..bogomolov import ChiCubic
from ..bundle_calculus import BundleClass
from ..discriminant import RamificationProfile
from ..graded_ring import GradedClass, VarietyModel, _fmt_coeff
from ..proj_bundle import ProjBundle


def type_tag(value) -> str:
    if isinstance(value, bool):
        return "bool"
    if isinstance(value, (int, Fraction)):
        return "number"
    if isinstance(value, GradedClass):
        return "class"
    if isinstance(value, BundleClass):
        return "bundle"
    if isinstance(value, VarietyModel):
        return "variety"
    if isinstance(value, ProjBundle):
        return "projbundle"
    if isinstance(value, list):
        return "list"
    if dataclasses.is_dataclass(value):
        return "report"
    raise TypeError(f"cannot render {type(value).__name__}")


def report_fields(value) -> list:
    if isinstance(value, ChiCubic):
        return [(f"m^{k}", a) for k, a in enumerate(value.coefficients)]
    if isinstance(value, RamificationProfile):
        return [("codimension", value.codimension)] + [
            (f"rho_{j}", rho) for j, rho in enumerate(value.rhos)]
    return [(f.name, getattr(value, f.name)) for f in dataclasses.fields(value)]


def text(value) -> str:
    if isinstance(value, str):
        return value
    tag = type_tag(value)
    if tag == "bool":
        return "true" if value else "false"
    if tag == "number":
        return _fmt_coeff(Fraction(value))
    if tag == "list":
        return "[" + ", ".join(str(v) for v in value) + "]"
    if tag == "report":
        lines = [type(value).__name__]
        for key, v in report_fields(value):
            lines.append(f"  {key}: {text(v)}")
        return "\n".join(lines)
    return str(value)


def _class_value(c: GradedClass) -> dict:
    names = c.model.names
    terms = []
    for exps, q in c.sorted_terms():
        terms.append([_fmt_coeff(q), {n: e for n, e in zip(names, exps) if e}])
    return {"model": str(c.model), "terms": terms}


def structured(value):
    tag = type_tag(value)
    if tag == "bool":
        return value
    if tag == "number":
        return _fmt_coeff(Fraction(value))
    if tag == "list":
        return list(value)
    if tag == "class":
        return _class_value(value)
    if tag == "bundle":
        return {"rank": value.rank, "chern": _class_value(value.total_chern)}
    if tag == "variety":
        return {"label": str(value), "dimension": value.dimension,
                "generators": [[g.name, g.degree, g.power_cap] for g in value.generators]}
    if tag == "projbundle":
        return {"base": str(value.base), "rank": value.rank, "dimension": value.dimension}
    out = {"kind": type(value).__name__}
    for key, v in report_fields(value):
        out[key] = v if isinstance(v, str) else structured(v)
    return out


def render(value, fmt: str = "text") -> str:
    if fmt == "text":
        return text(value)
    if fmt == "json":
        doc = {"type": type_tag(value), "text": text(value), "value": structured(value)}
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=True)
    raise ValueError(f"unknown format {fmt!r}")

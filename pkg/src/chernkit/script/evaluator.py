"""Tree-walking evaluator and the builtin function table."""

from __future__ import annotations

from fractions import Fraction

from .. import bogomolov as bog
from .. import bundle_calculus as bc
from .. import catalog, discriminant
from ..errors import ChernError
from ..graded_ring import GradedClass, VarietyModel
from ..proj_bundle import ProjBundle, make_proj_bundle, relative_canonical_class, relative_cotangent
from .parser import Assert, BinOp, Call, Ident, IntLit, Let, ListLit, Neg, Node, Paren, Script, check
from .render import render, text, type_tag


class EvalError(Exception):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class AssertionFailure(EvalError):
    pass


class ArgError(Exception):
    """Bad builtin arguments; the evaluator attaches the call position."""


# argument coercions ---------------------------------------------------------

def _int(v, what="argument") -> int:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    raise ArgError(f"{what} must be an integer, got {type_tag(v)}")


def _of(v, cls, what):
    if not isinstance(v, cls):
        raise ArgError(f"{what} must be a {_NAMES[cls]}, got {type_tag(v)}")
    return v


_NAMES = {VarietyModel: "variety", bc.BundleClass: "bundle", GradedClass: "class",
          ProjBundle: "projbundle", list: "list"}


def _arity(args, lo, hi=None):
    hi = lo if hi is None else hi
    if not lo <= len(args) <= hi:
        want = str(lo) if lo == hi else f"{lo} to {hi}"
        raise ArgError(f"expected {want} argument(s), got {len(args)}")


def _omega(args, i):
    return _of(args[i], bc.BundleClass, "cotangent bundle") if len(args) > i else None


def _line_like(E, L):
    if isinstance(L, Fraction):
        model = E.model
        if model.ngens != 1:
            raise ArgError("an integer twist needs a variety with a single generator")
        return _int(L, "twist degree") * model.gen(model.names[0])
    if isinstance(L, (bc.BundleClass, GradedClass)):
        return L
    raise ArgError(f"cannot twist by a {type_tag(L)}")


_SETUP = None


def _setup():
    global _SETUP
    if _SETUP is None:
        _SETUP = bog.rank2_setup()
    return _SETUP


# builtins ---------------------------------------------------------------------

def b_P(args):
    _arity(args, 1)
    return catalog.projective_space(_int(args[0], "dimension"))


def b_multiP(args):
    if not args:
        raise ArgError("multiP needs at least one factor")
    return catalog.multi_projective(*(_int(a, "factor dimension") for a in args))


def b_surface(args):
    _arity(args, 0)
    return _setup().surface


def b_gen(args):
    _arity(args, 2)
    X = _of(args[0], VarietyModel, "first argument")
    i = _int(args[1], "generator index")
    if not 1 <= i <= X.ngens:
        raise ArgError(f"generator index must be between 1 and {X.ngens}")
    return X.gen(X.names[i - 1])


def b_line(args):
    _arity(args, 2)
    X = _of(args[0], VarietyModel, "first argument")
    return catalog.line_bundle(X, _of(args[1], list, "degrees"))


def b_tangent(args):
    _arity(args, 1)
    return catalog.tangent(_of(args[0], VarietyModel, "argument"))


def b_cotangent(args):
    _arity(args, 1)
    return catalog.cotangent(_of(args[0], VarietyModel, "argument"))


def b_dual(args):
    _arity(args, 1)
    return bc.dual(_of(args[0], bc.BundleClass, "argument"))


def b_dsum(args):
    if not args:
        raise ArgError("dsum needs at least one bundle")
    return bc.direct_sum(*(_of(a, bc.BundleClass, "argument") for a in args))


def b_twist(args):
    _arity(args, 2)
    E = _of(args[0], bc.BundleClass, "first argument")
    return bc.twist_by_line(E, _line_like(E, args[1]))


def b_tensor(args):
    _arity(args, 2)
    return bc.tensor(_of(args[0], bc.BundleClass, "first argument"),
                     _of(args[1], bc.BundleClass, "second argument"))


def b_sym(args):
    _arity(args, 2)
    return bc.sym_power(_of(args[0], bc.BundleClass, "first argument"), _int(args[1], "power"))


def b_segre(args):
    _arity(args, 1)
    return bc.segre_total(_of(args[0], bc.BundleClass, "argument"))


def b_c(args):
    _arity(args, 2)
    return _of(args[0], bc.BundleClass, "first argument").c(_int(args[1], "index"))


def b_ctotal(args):
    _arity(args, 1)
    return _of(args[0], bc.BundleClass, "argument").total_chern


def b_ch(args):
    _arity(args, 1)
    return bc.chern_character(_of(args[0], bc.BundleClass, "argument")).terms


def b_jet1(args):
    _arity(args, 1, 2)
    L = _of(args[0], bc.BundleClass, "first argument")
    omega = _omega(args, 1) or catalog.cotangent(L.model)
    return bc.jet1_line(L, omega)


def b_projb(args):
    _arity(args, 1, 2)
    E = _of(args[-1], bc.BundleClass, "bundle argument")
    base = _of(args[0], VarietyModel, "base") if len(args) == 2 else E.model
    return make_proj_bundle(base, E)


def b_xi(args):
    _arity(args, 1)
    return _of(args[0], ProjBundle, "argument").xi


def b_relcot(args):
    _arity(args, 1)
    return relative_cotangent(_of(args[0], ProjBundle, "argument"))


def b_relcanon(args):
    _arity(args, 1)
    return relative_canonical_class(_of(args[0], ProjBundle, "argument"))


def b_pullback(args):
    _arity(args, 2)
    P = _of(args[0], ProjBundle, "first argument")
    if not isinstance(args[1], (GradedClass, bc.BundleClass)):
        raise ArgError("can only pull back classes and bundles")
    return P.pullback(args[1])


def b_pushforward(args):
    _arity(args, 2)
    P = _of(args[0], ProjBundle, "first argument")
    return P.pushforward(_of(args[1], GradedClass, "second argument"))


def b_integral(args):
    _arity(args, 2)
    space, c = args
    c = _of(c, GradedClass, "second argument")
    if isinstance(space, ProjBundle):
        return space.integrate_total(c)
    return _of(space, VarietyModel, "first argument").integrate(c)


def _bundle_fn(fn):
    def call(args):
        _arity(args, 1, 2)
        return fn(_of(args[0], bc.BundleClass, "first argument"), _omega(args, 1))
    return call


def _number(fn):
    def call(args):
        return Fraction(fn(args))
    return call


def b_disc_degree_closed(args):
    _arity(args, 1, 2)
    return discriminant.closed_form_degree(_of(args[0], bc.BundleClass, "first argument"),
                                           omega=_omega(args, 1))


def b_bog_gamma(args):
    _arity(args, 1)
    return bog.branch_gamma(_setup(), _int(args[0], "multisection degree"))


def b_bog_branch(args):
    _arity(args, 1)
    return bog.branch_divisor_class(_setup(), _int(args[0], "multisection degree"))


def b_bog_branch_report(args):
    _arity(args, 1)
    return bog.branch_report(_setup(), _int(args[0], "multisection degree"))


def b_bog_gamma_jet(args):
    _arity(args, 1)
    return bog.gamma_via_relative_jets(_setup(), _int(args[0], "multisection degree"))


def b_bog_chi(args):
    _arity(args, 0)
    return bog.chi_sym_cubic(_setup())


def b_bog_check(args):
    _arity(args, 6, 7)
    names = ("D2", "A2", "AD", "AH", "DH", "c2", "lengthW")
    values = {n: _int(a, n) for n, a in zip(names, args)}
    return bog.instability_check(bog.InstabilityInput(**values))


BUILTINS = {
    "P": b_P,
    "multiP": b_multiP,
    "surface": b_surface,
    "gen": b_gen,
    "line": b_line,
    "tangent": b_tangent,
    "cotangent": b_cotangent,
    "dual": b_dual,
    "dsum": b_dsum,
    "twist": b_twist,
    "tensor": b_tensor,
    "sym": b_sym,
    "segre": b_segre,
    "c": b_c,
    "ctotal": b_ctotal,
    "ch": b_ch,
    "jet1": b_jet1,
    "projb": b_projb,
    "xi": b_xi,
    "relcot": b_relcot,
    "relcanon": b_relcanon,
    "pullback": b_pullback,
    "pushforward": b_pushforward,
    "integral": b_integral,
    "ram_profile": _bundle_fn(discriminant.ramification_profile),
    "disc_degree": _number(_bundle_fn(discriminant.expected_degree)),
    "disc_degree_closed": _number(b_disc_degree_closed),
    "disc_degree_jet": _number(_bundle_fn(discriminant.jet_route_degree)),
    "classify": _bundle_fn(discriminant.classify),
    "bog_gamma": b_bog_gamma,
    "bog_gamma_jet": b_bog_gamma_jet,
    "bog_branch": b_bog_branch,
    "bog_branch_report": b_bog_branch_report,
    "bog_chi": b_bog_chi,
    "bog_check": b_bog_check,
}


# evaluation -------------------------------------------------------------------

def _arith(op, a, b, node):
    ok = (Fraction, GradedClass)
    if op == "^":
        if not isinstance(a, ok):
            raise EvalError(f"cannot raise a {type_tag(a)} to a power", node.line, node.column)
        return a ** int(b)
    if not (isinstance(a, ok) and isinstance(b, ok)):
        raise EvalError(f"cannot apply '{op}' to {type_tag(a)} and {type_tag(b)}",
                        node.line, node.column)
    try:
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        return a * b
    except ChernError as exc:
        raise EvalError(str(exc), node.line, node.column) from None


def values_equal(a, b) -> bool:
    if isinstance(a, Fraction) and isinstance(b, GradedClass):
        a, b = b, a
    if isinstance(a, GradedClass) and isinstance(b, (Fraction, GradedClass)):
        if isinstance(b, GradedClass) and b.model != a.model:
            raise ChernError("cannot compare classes on different models")
        return a == b
    if type_tag(a) != type_tag(b):
        return False
    return a == b


class Evaluator:
    def __init__(self, fmt: str = "text"):
        self.fmt = fmt
        self.env: dict = {}
        self.outputs: list = []

    def run(self, script: Script, emit=None) -> list:
        check(script, BUILTINS)
        for stmt in script.statements:
            if isinstance(stmt, Let):
                self.env[stmt.name] = self.eval(stmt.expr)
            elif isinstance(stmt, Assert):
                left, right = self.eval(stmt.left), self.eval(stmt.right)
                try:
                    equal = values_equal(left, right)
                except ChernError as exc:
                    raise EvalError(str(exc), stmt.line, stmt.column) from None
                if equal != (stmt.op == "=="):
                    raise AssertionFailure(
                        f"assertion failed: {text(left)} {'!=' if equal is False else '=='} {text(right)}",
                        stmt.line, stmt.column)
            else:
                out = render(self.eval(stmt.expr), self.fmt)
                self.outputs.append(out)
                if emit is not None:
                    emit(out)
        return self.outputs

    def eval(self, node: Node):
        if isinstance(node, IntLit):
            return Fraction(node.value)
        if isinstance(node, ListLit):
            return list(node.items)
        if isinstance(node, Ident):
            return self.env[node.name]
        if isinstance(node, Paren):
            return self.eval(node.inner)
        if isinstance(node, Neg):
            v = self.eval(node.operand)
            if not isinstance(v, (Fraction, GradedClass)):
                raise EvalError(f"cannot negate a {type_tag(v)}", node.line, node.column)
            return -v
        if isinstance(node, BinOp):
            left = self.eval(node.left)
            right = node.right.value if node.op == "^" else self.eval(node.right)
            return _arith(node.op, left, right, node)
        if isinstance(node, Call):
            args = [self.eval(a) for a in node.args]
            try:
                return BUILTINS[node.name](args)
            except ArgError as exc:
                raise EvalError(f"{node.name}: {exc}", node.line, node.column) from None
            except (ChernError, ValueError, KeyError) as exc:
                raise EvalError(f"{node.name}: {exc}", node.line, node.column) from None
        raise TypeError(f"unknown node {node!r}")


def evaluate(script: Script, fmt: str = "text") -> list:
    return Evaluator(fmt).run(script)

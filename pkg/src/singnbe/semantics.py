"""The semantic domain and evaluation.

Values are immutable dataclasses.  Semantic functions (the bodies of
``LamV`` and the codomains of ``FunV``/``SumV``) are plain Python callables
from Value to Value; only application is observable, and values are never
compared directly, only through readback.

Environments are values too: ``Top`` is the empty environment and
``PairV(env, d)`` extends ``env`` with ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import config
from .errors import (BranchCountMismatch, EnvironmentShapeError,
                     NotAFunctionValue, NotANatural, NotAnEnumValue)
from .syntax import (App, Box, Case, Comp, Const, Empty, Enum, Ext, Fst, Fun,
                     Id, Lam, Nat, Natrec, P, Pair, Prf, Q, Sigma, Sing, Snd,
                     Star, Sub, Suc, U, Where, Zero)


class Value:
    __slots__ = ()


SemFun = Callable[[Value], Value]


@dataclass(frozen=True)
class Top(Value):
    pass


@dataclass(frozen=True)
class UV(Value):
    pass


@dataclass(frozen=True)
class VarV(Value):
    level: int


@dataclass(frozen=True, eq=False)
class LamV(Value):
    f: SemFun


@dataclass(frozen=True, eq=False)
class FunV(Value):
    dom: Value
    cod: SemFun


@dataclass(frozen=True)
class SingV(Value):
    elem: Value
    tag: Value


@dataclass(frozen=True)
class NeApp(Value):
    fn: Value
    arg: Value


@dataclass(frozen=True, eq=False)
class SumV(Value):
    dom: Value
    cod: SemFun


@dataclass(frozen=True)
class PairV(Value):
    fst: Value
    snd: Value


@dataclass(frozen=True)
class NeFst(Value):
    tm: Value


@dataclass(frozen=True)
class NeSnd(Value):
    tm: Value


@dataclass(frozen=True)
class NatV(Value):
    pass


@dataclass(frozen=True)
class ZeroV(Value):
    pass


@dataclass(frozen=True)
class SucV(Value):
    tm: Value


@dataclass(frozen=True, eq=False)
class NeNatrec(Value):
    motive: SemFun
    base: Value
    step: Value
    scrut: Value


@dataclass(frozen=True)
class PrfV(Value):
    tm: Value


@dataclass(frozen=True)
class StarV(Value):
    pass


@dataclass(frozen=True)
class EnumV(Value):
    n: int


@dataclass(frozen=True)
class ConstV(Value):
    n: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i < self.n:
            raise ValueError(f"constant index {self.i} out of range for Enum {self.n}")


@dataclass(frozen=True, eq=False)
class NeCase(Value):
    n: int
    motive: SemFun
    branches: tuple
    scrut: Value


NEUTRAL_HEADS = (VarV, NeApp, NeFst, NeSnd, NeNatrec, NeCase)


def is_neutral_value(d: Value) -> bool:
    return isinstance(d, NEUTRAL_HEADS)


# -- eliminators -----------------------------------------------------------


def apply_v(f: Value, d: Value) -> Value:
    match f:
        case LamV(g):
            return g(d)
        case StarV():
            return f
    raise NotAFunctionValue(f"cannot apply {type(f).__name__}")


def fst_v(d: Value) -> Value:
    match d:
        case PairV(a, _):
            return a
        case StarV():
            return d
    return NeFst(d)


def snd_v(d: Value) -> Value:
    match d:
        case PairV(_, b):
            return b
        case StarV():
            return d
    return NeSnd(d)


def natrec_v(motive: SemFun, z: Value, s: Value, d: Value) -> Value:
    # Peel successors iteratively so large numerals do not exhaust the stack.
    preds = []
    while isinstance(d, SucV):
        preds.append(d.tm)
        d = d.tm
    acc = _natrec_base(motive, z, s, d)
    for e in reversed(preds):
        acc = apply_v(apply_v(s, e), acc)
    return acc


def _natrec_base(motive, z, s, d):
    from .nbe import down, down_t, up

    match d:
        case StarV():
            return d
        case ZeroV():
            return z
    if not is_neutral_value(d):
        raise NotANatural(f"natrec on {type(d).__name__}")
    step_ty = FunV(NatV(), lambda n: FunV(motive(n), lambda _: motive(SucV(n))))
    return up(motive(d), NeNatrec(lambda e: down_t(motive(e)),
                                  down(motive(ZeroV()), z),
                                  down(step_ty, s),
                                  d))


def case_v(n: int, motive: SemFun, branches, d: Value) -> Value:
    from .nbe import down, down_t, up

    branches = tuple(branches)
    if len(branches) != n:
        raise BranchCountMismatch(f"case{{{n}}} needs {n} branches, got {len(branches)}")
    match d:
        case StarV():
            return d
        case ConstV(m, i) if m == n:
            return branches[i]
    if not is_neutral_value(d):
        raise NotAnEnumValue(f"case{{{n}}} on {type(d).__name__}")
    if all(b == ConstV(n, i) for i, b in enumerate(branches)):
        return d
    return up(motive(d), NeCase(n, lambda e: down_t(motive(e)),
                                tuple(down(motive(ConstV(n, i)), b)
                                      for i, b in enumerate(branches)),
                                d))


# -- evaluation ------------------------------------------------------------


def _env_fst(env: Value) -> Value:
    if isinstance(env, PairV):
        return env.fst
    raise EnvironmentShapeError(f"expected an environment pair, got {type(env).__name__}")


def _env_snd(env: Value) -> Value:
    if isinstance(env, PairV):
        return env.snd
    raise EnvironmentShapeError(f"expected an environment pair, got {type(env).__name__}")


def eval_subst(s, env: Value) -> Value:
    match s:
        case Empty():
            return Top()
        case Id():
            return env
        case Ext(rest, last):
            return PairV(eval_subst(rest, env), eval_term(last, env))
        case P():
            return _env_fst(env)
        case Comp(outer, inner):
            return eval_subst(outer, eval_subst(inner, env))
    raise TypeError(f"not a substitution: {s!r}")


def eval_term(t, env: Value) -> Value:
    relevant = config.current().proof_relevant
    match t:
        case U():
            return UV()
        case Fun(a, b):
            return FunV(eval_term(a, env), lambda e: eval_term(b, PairV(env, e)))
        case Sing(a, x):
            return SingV(eval_term(a, env), eval_term(x, env))
        case Lam(b):
            return LamV(lambda e: eval_term(b, PairV(env, e)))
        case App(f, a):
            return apply_v(eval_term(f, env), eval_term(a, env))
        case Q():
            return _env_snd(env)
        case Sub(a, s):
            return eval_term(a, eval_subst(s, env))
        case Sigma(a, b):
            return SumV(eval_term(a, env), lambda e: eval_term(b, PairV(env, e)))
        case Pair(a, b):
            return PairV(eval_term(a, env), eval_term(b, env))
        case Fst(a):
            return fst_v(eval_term(a, env))
        case Snd(a):
            return snd_v(eval_term(a, env))
        case Nat():
            return NatV()
        case Zero():
            return ZeroV()
        case Suc(a):
            return SucV(eval_term(a, env))
        case Natrec(m, z, s, k):
            return natrec_v(lambda e: eval_term(m, PairV(env, e)),
                            eval_term(z, env), eval_term(s, env), eval_term(k, env))
        case Enum(n):
            return EnumV(n)
        case Const(n, i):
            return ConstV(n, i)
        case Case(n, m, bs, k):
            return case_v(n, lambda e: eval_term(m, PairV(env, e)),
                          [eval_term(b, env) for b in bs], eval_term(k, env))
        case Prf(a):
            return PrfV(eval_term(a, env))
        case Box(a):
            return eval_term(a, env) if relevant else StarV()
        case Star():
            return StarV()
        case Where(_, b, k):
            proof = eval_term(k, env) if relevant else StarV()
            return eval_term(b, PairV(env, proof))
    raise TypeError(f"not a term: {t!r}")

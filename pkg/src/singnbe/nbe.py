"""Reflection, reification, readback and the normalisation functions.

``up(X, k)`` turns a neutral ``k`` of semantic type ``X`` into an η-long
value, ``down(X, d)`` prepares a value of type ``X`` for readback, and
``down_t`` does the same for types.  ``readback(j, d)`` converts a value
whose free variables are levels below ``j`` into a de Bruijn term.
"""

from __future__ import annotations

import logging

from . import config
from .errors import InternalValueError
from .semantics import (ConstV, EnumV, FunV, LamV, NatV, NeApp, NeCase, NeFst,
                        NeNatrec, NeSnd, PairV, PrfV, SingV, StarV, SucV, SumV,
                        Top, UV, Value, VarV, ZeroV, apply_v, eval_term, fst_v,
                        snd_v)
from .syntax import (App, Case, Const, Enum, Fst, Fun, Lam, Nat, Natrec, Pair,
                     Prf, Sigma, Sing, Snd, Star, Suc, Term, U, Zero, mk_var)

log = logging.getLogger(__name__)


def up(x: Value, k: Value) -> Value:
    relevant = config.current().proof_relevant
    match x:
        case FunV(a, f):
            return LamV(lambda d: up(f(d), NeApp(k, down(a, d))))
        case SingV(d, _):
            return d
        case SumV(a, f):
            first = up(a, NeFst(k))
            return PairV(first, up(f(first), NeSnd(k)))
        case PrfV(inner):
            return up(inner, k) if relevant else StarV()
        case EnumV(0) if not relevant:
            return StarV()
        case EnumV(1) if not relevant:
            return ConstV(1, 0)
    return k


def down(x: Value, d: Value) -> Value:
    relevant = config.current().proof_relevant
    match x:
        case FunV(a, f):
            return LamV(lambda e: down(f(up(a, e)), apply_v(d, up(a, e))))
        case SingV(a, inner):
            return down(inner, a)
        case UV():
            return down_t(d)
        case SumV(a, f):
            first = fst_v(d)
            return PairV(down(a, first), down(f(first), snd_v(d)))
        case PrfV(_):
            return StarV()
        case EnumV(0) if not relevant:
            return StarV()
        case EnumV(1) if not relevant:
            return ConstV(1, 0)
    return d


def down_t(x: Value) -> Value:
    match x:
        case FunV(a, f):
            return FunV(down_t(a), lambda d: down_t(f(up(a, d))))
        case SumV(a, f):
            return SumV(down_t(a), lambda d: down_t(f(up(a, d))))
        case SingV(d, inner):
            return SingV(down(inner, d), down_t(inner))
        case PrfV(inner):
            return PrfV(down_t(inner))
    return x


def readback(j: int, d: Value) -> Term:
    match d:
        case UV():
            return U()
        case FunV(x, f):
            return Fun(readback(j, x), readback(j + 1, f(VarV(j))))
        case SingV(a, x):
            return Sing(readback(j, a), readback(j, x))
        case LamV(f):
            return Lam(readback(j + 1, f(VarV(j))))
        case VarV(i):
            if j < i + 1:
                log.debug("readback of level %d at depth %d clamped to index 0", i, j)
                return mk_var(0)
            return mk_var(j - (i + 1))
        case NeApp(k, a):
            return App(readback(j, k), readback(j, a))
        case SumV(x, f):
            return Sigma(readback(j, x), readback(j + 1, f(VarV(j))))
        case PairV(a, b):
            return Pair(readback(j, a), readback(j, b))
        case NeFst(k):
            return Fst(readback(j, k))
        case NeSnd(k):
            return Snd(readback(j, k))
        case NatV():
            return Nat()
        case ZeroV():
            return Zero()
        case SucV(_):
            # Iterate so that long numerals read back without deep recursion.
            n = 0
            while isinstance(d, SucV):
                n += 1
                d = d.tm
            t = readback(j, d)
            for _ in range(n):
                t = Suc(t)
            return t
        case NeNatrec(m, z, s, k):
            return Natrec(readback(j + 1, m(VarV(j))), readback(j, z),
                          readback(j, s), readback(j, k))
        case PrfV(x):
            return Prf(readback(j, x))
        case StarV():
            return Star()
        case EnumV(n):
            return Enum(n)
        case ConstV(n, i):
            return Const(n, i)
        case NeCase(n, m, bs, k):
            return Case(n, readback(j + 1, m(VarV(j))),
                        tuple(readback(j, b) for b in bs), readback(j, k))
    raise InternalValueError(f"cannot read back {type(d).__name__}")


def canonical_env(g) -> Value:
    """The environment reflecting every variable of ``g`` at its own level.

    ``g`` is innermost-first, so it is walked from the end.
    """
    env: Value = Top()
    for level, a in enumerate(reversed(tuple(g))):
        env = PairV(env, up(eval_term(a, env), VarV(level)))
    return env


def nbe_type(g, a: Term) -> Term:
    return readback(len(g), down_t(eval_term(a, canonical_env(g))))


def nbe_term(g, a: Term, t: Term) -> Term:
    env = canonical_env(g)
    return readback(len(g), down(eval_term(a, env), eval_term(t, env)))

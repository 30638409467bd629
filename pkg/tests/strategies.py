"""Hypothesis strategies for core terms."""

from hypothesis import strategies as st

from singnbe.syntax import (App, Box, Case, Const, Enum, Fst, Fun, Lam, Nat,
                            Natrec, Pair, Prf, Sigma, Sing, Snd, Suc, U, Where,
                            Zero, mk_var)

LEAVES = ("U", "Nat", "zero", "enum", "const")
NODES = ("fun", "sigma", "sing", "lam", "pair", "suc", "prf", "box", "ne")


@st.composite
def _leaf(draw, d):
    choices = list(LEAVES) + (["var"] if d else [])
    match draw(st.sampled_from(choices)):
        case "U":
            return U()
        case "Nat":
            return Nat()
        case "zero":
            return Zero()
        case "enum":
            return Enum(draw(st.integers(0, 4)))
        case "const":
            n = draw(st.integers(1, 4))
            return Const(n, draw(st.integers(0, n - 1)))
        case "var":
            return mk_var(draw(st.integers(0, d - 1)))


@st.composite
def _neutral(draw, d, size):
    if size <= 0:
        return mk_var(draw(st.integers(0, d - 1)))
    nf = lambda dd=d: _normal(dd, size // 2)
    ne = _neutral(d, size // 2)
    match draw(st.sampled_from(("var", "app", "fst", "snd", "natrec", "case", "where"))):
        case "var":
            return mk_var(draw(st.integers(0, d - 1)))
        case "app":
            return App(draw(ne), draw(nf()))
        case "fst":
            return Fst(draw(ne))
        case "snd":
            return Snd(draw(ne))
        case "natrec":
            return Natrec(draw(nf(d + 1)), draw(nf()), draw(nf()), draw(ne))
        case "case":
            n = draw(st.integers(0, 3))
            return Case(n, draw(nf(d + 1)), [draw(nf()) for _ in range(n)], draw(ne))
        case "where":
            return Where(draw(nf()), draw(nf(d + 1)), draw(ne))


@st.composite
def _normal(draw, d, size):
    if size <= 0:
        return draw(_leaf(d))
    kinds = [k for k in NODES if k != "ne" or d > 0]
    sub = size // 2
    match draw(st.sampled_from(kinds)):
        case "fun":
            return Fun(draw(_normal(d, sub)), draw(_normal(d + 1, sub)))
        case "sigma":
            return Sigma(draw(_normal(d, sub)), draw(_normal(d + 1, sub)))
        case "sing":
            return Sing(draw(_normal(d, sub)), draw(_normal(d, sub)))
        case "lam":
            return Lam(draw(_normal(d + 1, sub)))
        case "pair":
            return Pair(draw(_normal(d, sub)), draw(_normal(d, sub)))
        case "suc":
            return Suc(draw(_normal(d, sub)))
        case "prf":
            return Prf(draw(_normal(d, sub)))
        case "box":
            return Box(draw(_normal(d, sub)))
        case "ne":
            return draw(_neutral(d, sub))


def normal_terms(depth=None, size=8):
    """Syntactically normal (not necessarily well-typed) terms.

    With ``depth`` None the scope depth is drawn too; the term is returned
    alone and its free indices stay below that depth only when it is given.
    """
    if depth is None:
        return st.integers(0, 3).flatmap(lambda d: _normal(d, size))
    return _normal(depth, size)


def scoped_normal_terms(size=8):
    """Pairs ``(depth, term)`` with every free index below ``depth``."""
    return st.integers(0, 3).flatmap(lambda d: st.tuples(st.just(d), _normal(d, size)))


# -- closed arithmetic with a Python oracle ---------------------------------


@st.composite
def numerals(draw, hi=6):
    n = draw(st.integers(0, hi))
    t = Zero()
    for _ in range(n):
        t = Suc(t)
    return n, t

"""Core syntax: de Bruijn terms with explicit substitutions.

Terms double as types.  Variables are written ``q`` (the innermost one) and
``q p^i`` for the others, so an index is never a separate constructor; see
:func:`mk_var` and :func:`var_index`.

Contexts are plain tuples of types with position 0 the most recently bound
entry, so ``extend(g, a)`` is ``(a,) + g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


class Term:
    __slots__ = ()


class Subst:
    __slots__ = ()


# -- substitutions ---------------------------------------------------------


@dataclass(frozen=True)
class Empty(Subst):
    pass


@dataclass(frozen=True)
class Id(Subst):
    pass


@dataclass(frozen=True)
class Ext(Subst):
    rest: Subst
    last: Term


@dataclass(frozen=True)
class P(Subst):
    pass


@dataclass(frozen=True)
class Comp(Subst):
    outer: Subst
    inner: Subst


# -- terms -----------------------------------------------------------------


@dataclass(frozen=True)
class U(Term):
    pass


@dataclass(frozen=True)
class Fun(Term):
    dom: Term
    cod: Term  # under one binder


@dataclass(frozen=True)
class Sing(Term):
    body: Term
    tag: Term


@dataclass(frozen=True)
class Lam(Term):
    body: Term  # under one binder


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True)
class Q(Term):
    pass


@dataclass(frozen=True)
class Sub(Term):
    tm: Term
    subst: Subst


@dataclass(frozen=True)
class Sigma(Term):
    dom: Term
    cod: Term  # under one binder


@dataclass(frozen=True)
class Pair(Term):
    fst: Term
    snd: Term


@dataclass(frozen=True)
class Fst(Term):
    tm: Term


@dataclass(frozen=True)
class Snd(Term):
    tm: Term


@dataclass(frozen=True)
class Nat(Term):
    pass


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Suc(Term):
    tm: Term


@dataclass(frozen=True)
class Natrec(Term):
    motive: Term  # under one binder
    base: Term
    step: Term
    scrut: Term


@dataclass(frozen=True)
class Enum(Term):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Enum size must be non-negative, got {self.n}")


@dataclass(frozen=True)
class Const(Term):
    n: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i < self.n:
            raise ValueError(f"constant index {self.i} out of range for Enum {self.n}")


@dataclass(frozen=True)
class Case(Term):
    n: int
    motive: Term  # under one binder
    branches: tuple
    scrut: Term

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        if len(self.branches) != self.n:
            from .errors import BranchCountMismatch
            raise BranchCountMismatch(
                f"case{{{self.n}}} needs {self.n} branches, got {len(self.branches)}")


@dataclass(frozen=True)
class Prf(Term):
    tm: Term


@dataclass(frozen=True)
class Box(Term):
    tm: Term


@dataclass(frozen=True)
class Star(Term):
    pass


@dataclass(frozen=True)
class Where(Term):
    motive: Term  # not under a binder
    body: Term  # under one binder (the proof content)
    scrut: Term


# -- indices and weakening -------------------------------------------------


def subs_chain(k: int) -> Subst:
    """``p^(k+1)`` associated to the right: ``Comp(P, Comp(P, ... P))``."""
    s: Subst = P()
    for _ in range(k):
        s = Comp(P(), s)
    return s


def mk_var(i: int) -> Term:
    if i < 0:
        raise ValueError("de Bruijn index must be a natural number")
    if i == 0:
        return Q()
    return Sub(Q(), subs_chain(i - 1))


def lift(i: int, t: Term) -> Term:
    """Weaken ``t`` by ``i`` binders."""
    if i < 0:
        raise ValueError("weakening amount must be a natural number")
    if i == 0:
        return t
    return Sub(t, subs_chain(i - 1))


def weakening_depth(s: Subst) -> Optional[int]:
    """Return ``k`` when ``s`` is exactly ``subs_chain(k - 1)``, else None."""
    k = 0
    while True:
        match s:
            case P():
                return k + 1
            case Comp(P(), rest):
                k += 1
                s = rest
            case _:
                return None


def var_index(t: Term) -> Optional[int]:
    match t:
        case Q():
            return 0
        case Sub(Q(), s):
            return weakening_depth(s)
    return None


def extend(g: tuple, a: Term) -> tuple:
    return (a,) + tuple(g)


# -- normal forms ----------------------------------------------------------


def is_neutral(t: Term) -> bool:
    if var_index(t) is not None:
        return True
    match t:
        case Star():
            return True
        case App(k, v):
            return is_neutral(k) and is_normal(v)
        case Fst(k) | Snd(k):
            return is_neutral(k)
        case Natrec(m, z, s, k):
            return is_normal(m) and is_normal(z) and is_normal(s) and is_neutral(k)
        case Case(_, m, bs, k):
            return is_normal(m) and all(is_normal(b) for b in bs) and is_neutral(k)
        case Where(m, b, k):
            return is_normal(m) and is_normal(b) and is_neutral(k)
    return False


def is_normal(t: Term) -> bool:
    match t:
        case U() | Nat() | Zero() | Enum() | Const():
            return True
        case Fun(a, b) | Sigma(a, b) | Sing(a, b) | Pair(a, b):
            return is_normal(a) and is_normal(b)
        case Lam(b) | Suc(b) | Prf(b) | Box(b):
            return is_normal(b)
    return is_neutral(t)


def contains_star(t) -> bool:
    """True if ``Star`` occurs anywhere in a term or substitution."""
    match t:
        case Star():
            return True
        case Term() | Subst():
            return any(contains_star(c) for c in _children(t))
    raise TypeError(f"not a term or substitution: {t!r}")


def _children(t):
    match t:
        case Fun(a, b) | Sigma(a, b) | Sing(a, b) | Pair(a, b) | App(a, b):
            return (a, b)
        case Lam(b) | Suc(b) | Prf(b) | Box(b) | Fst(b) | Snd(b):
            return (b,)
        case Sub(a, s):
            return (a, s)
        case Natrec(m, z, s, k):
            return (m, z, s, k)
        case Case(_, m, bs, k):
            return (m, *bs, k)
        case Where(m, b, k):
            return (m, b, k)
        case Ext(s, a) | Comp(s, a):
            return (s, a)
    return ()


def occurs(i: int, t: Term) -> bool:
    """Whether index ``i`` may occur free in ``t``.

    Exact on terms whose only ``Sub`` nodes are variables or weakenings;
    conservatively True under any other substitution.
    """
    k = var_index(t)
    if k is not None:
        return k == i
    match t:
        case Sub(a, s):
            w = weakening_depth(s)
            if w is None:
                return True
            return i >= w and occurs(i - w, a)
        case Fun(a, b) | Sigma(a, b):
            return occurs(i, a) or occurs(i + 1, b)
        case Lam(b):
            return occurs(i + 1, b)
        case Natrec(m, z, s, k):
            return occurs(i + 1, m) or occurs(i, z) or occurs(i, s) or occurs(i, k)
        case Case(_, m, bs, k):
            return occurs(i + 1, m) or any(occurs(i, b) for b in bs) or occurs(i, k)
        case Where(m, b, k):
            return occurs(i, m) or occurs(i + 1, b) or occurs(i, k)
    return any(occurs(i, c) for c in _children(t))

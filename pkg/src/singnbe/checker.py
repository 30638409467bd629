"""Bidirectional type checking of normal forms.

Types are checked with :meth:`Checker.check_type`, normal terms against a
type in long normal form with :meth:`Checker.check_term`, and neutral terms
synthesise their principal type with :meth:`Checker.infer_type`.  Definitional
equality is syntactic equality of NbE outputs.

Every failure is reported by raising :class:`~singnbe.errors.TypeCheckError`.
The module-level functions wrap a default :class:`Checker`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import DepthExceeded, DiagKind, TypeCheckError
from .nbe import nbe_term, nbe_type
from .syntax import (App, Box, Case, Comp, Const, Enum, Ext, Fst, Fun, Id, Lam,
                     Nat, Natrec, P, Pair, Prf, Q, Sigma, Sing, Snd, Star, Sub,
                     Suc, Term, U, Where, Zero, contains_star, extend,
                     is_neutral, is_normal, lift, var_index)


def erase_tag(v: Term) -> Term:
    """Strip the singleton layers of a normal type."""
    while isinstance(v, Sing):
        v = v.tag
    return v


def eq_type(g, a: Term, b: Term) -> bool:
    return nbe_type(g, a) == nbe_type(g, b)


def eq_term(g, a: Term, t: Term, u: Term) -> bool:
    return nbe_term(g, a, t) == nbe_term(g, a, u)


def infer_ctx(g, s):
    """The context that a weakening spine ``p`` / ``p . s`` maps into."""
    g = tuple(g)
    while True:
        match s:
            case P() if g:
                return g[1:]
            case Comp(P(), rest) if g:
                g, s = g[1:], rest
            case P() | Comp(P(), _):
                raise TypeCheckError(DiagKind.UNBOUND_INDEX, "weakening past the empty context")
            case _:
                raise TypeCheckError(DiagKind.NOT_INFERABLE,
                                     f"not a weakening substitution: {s!r}")


def _guarded(method):
    @functools.wraps(method)
    def wrapper(*args, **kwargs):
        try:
            return method(*args, **kwargs)
        except RecursionError as exc:
            raise DepthExceeded("recursion depth exceeded while checking") from exc
    return wrapper


@dataclass(frozen=True)
class Checker:
    allow_star: bool = False

    # -- public entry points (with input pregate) --------------------------

    @_guarded
    def check_type(self, g, v: Term) -> None:
        g = tuple(g)
        self._pregate(g, v)
        self._type(g, v)

    @_guarded
    def check_term(self, g, ty: Term, v: Term) -> None:
        g = tuple(g)
        self._pregate(g, v)
        self._check(g, ty, v)

    @_guarded
    def infer_type(self, g, k: Term) -> Term:
        g = tuple(g)
        self._pregate(g, k)
        return self._infer(g, k)

    @_guarded
    def check_ctx(self, types) -> tuple:
        """Validate a declaration-order list of types; return it innermost-first."""
        g: tuple = ()
        for pos, a in enumerate(types):
            try:
                self.check_type(g, a)
            except TypeCheckError as err:
                err.message = f"context entry {pos}: {err.message}"
                raise
            g = extend(g, a)
        return g

    # -- internals ---------------------------------------------------------

    def _pregate(self, g, v):
        if not self.allow_star and contains_star(v):
            raise TypeCheckError(DiagKind.STAR_IN_USER_SYNTAX,
                                 "* is not allowed in user terms", subject=v, depth=len(g))
        if not is_normal(v):
            raise TypeCheckError(DiagKind.NOT_NORMAL_INPUT,
                                 "input must be in normal form", subject=v, depth=len(g))

    def _fail(self, kind, msg, g, v, **kw):
        raise TypeCheckError(kind, msg, subject=v, depth=len(g), **kw)

    def _mismatch(self, g, ty, v, got=None, msg=None):
        erased = erase_tag(ty)
        self._fail(DiagKind.TYPE_MISMATCH, msg or f"term does not have the expected type",
                   g, v, expected=ty, got=got, erased_expected=erased)

    def _type(self, g, v):
        match v:
            case U() | Nat() | Enum():
                return
            case Fun(a, b) | Sigma(a, b):
                self._type(g, a)
                self._type(extend(g, a), b)
            case Sing(a, x):
                self._type(g, x)
                self._check(g, nbe_type(g, x), a)
            case Prf(a):
                self._type(g, a)
            case _ if is_neutral(v):
                self._check(g, U(), v)
            case _:
                self._fail(DiagKind.NOT_A_TYPE, "not a type", g, v)

    def _check(self, g, ty, v):
        if isinstance(ty, Sing):
            self._check(g, ty.tag, v)
            if not eq_term(g, ty.tag, ty.body, v):
                self._mismatch(g, ty, v, got=nbe_term(g, ty.tag, v),
                               msg="term is not equal to the singleton's element")
            return
        match v:
            case Fun(a, b) | Sigma(a, b) if ty == U():
                self._check(g, U(), a)
                self._check(extend(g, a), U(), b)
            case Sing(a, x) if ty == U():
                self._check(g, U(), x)
                self._check(g, nbe_type(g, x), a)
            case Nat() | Enum() if ty == U():
                return
            case Prf(a) if ty == U():
                self._check(g, U(), a)
            case Lam(b):
                if not isinstance(ty, Fun):
                    self._fail(DiagKind.EXPECTED_FUNCTION, "a lambda needs a function type",
                               g, v, expected=ty)
                self._check(extend(g, ty.dom), ty.cod, b)
            case Pair(a, b):
                if not isinstance(ty, Sigma):
                    self._fail(DiagKind.EXPECTED_SIGMA, "a pair needs a sigma type",
                               g, v, expected=ty)
                self._check(g, ty.dom, a)
                self._check(g, nbe_type(g, Sub(ty.cod, Ext(Id(), a))), b)
            case Zero() | Suc():
                if ty != Nat():
                    self._fail(DiagKind.EXPECTED_NAT, "a numeral needs Nat", g, v, expected=ty)
                if isinstance(v, Suc):
                    self._check(g, Nat(), v.tm)
            case Const(m, _):
                if not isinstance(ty, Enum):
                    self._fail(DiagKind.EXPECTED_ENUM, "a constant needs an Enum type",
                               g, v, expected=ty, n=m)
                if ty.n != m:
                    self._mismatch(g, ty, v, got=Enum(m))
            case Box(a):
                if not isinstance(ty, Prf):
                    self._fail(DiagKind.EXPECTED_PRF, "box needs a Prf type", g, v, expected=ty)
                self._check(g, ty.tm, a)
            case Star():
                if not self.allow_star:
                    self._fail(DiagKind.STAR_IN_USER_SYNTAX,
                               "* is not allowed in user terms", g, v)
                if not (isinstance(ty, Prf) or ty == Enum(0)):
                    self._mismatch(g, ty, v, msg="* only inhabits Prf types and Enum 0")
            case _ if is_neutral(v):
                got = self._infer(g, v)
                if not eq_type(g, erase_tag(got), ty):
                    self._mismatch(g, ty, v, got=got)
            case _:
                self._mismatch(g, ty, v)

    def _infer(self, g, k):
        i = var_index(k)
        if i is not None:
            if i >= len(g):
                self._fail(DiagKind.UNBOUND_INDEX,
                           f"index {i} in a context of length {len(g)}", g, k)
            return nbe_type(g, lift(i + 1, g[i]))
        match k:
            case App(f, a):
                fty = erase_tag(self._infer(g, f))
                if not isinstance(fty, Fun):
                    self._fail(DiagKind.EXPECTED_FUNCTION, "applying a non-function",
                               g, k, got=fty)
                self._check(g, fty.dom, a)
                return nbe_type(g, Sub(fty.cod, Ext(Id(), a)))
            case Fst(p) | Snd(p):
                pty = erase_tag(self._infer(g, p))
                if not isinstance(pty, Sigma):
                    self._fail(DiagKind.EXPECTED_SIGMA, "projecting from a non-pair",
                               g, k, got=pty)
                if isinstance(k, Fst):
                    return pty.dom
                return nbe_type(g, Sub(pty.cod, Ext(Id(), Fst(p))))
            case Natrec(m, z, s, n):
                nty = erase_tag(self._infer(g, n))
                if nty != Nat():
                    self._fail(DiagKind.EXPECTED_NAT, "natrec on a non-natural", g, k, got=nty)
                self._type(extend(g, Nat()), m)
                self._check(g, nbe_type(g, Sub(m, Ext(Id(), Zero()))), z)
                step = Fun(Nat(), Fun(m, Sub(m, Ext(Comp(P(), P()), Suc(Sub(Q(), P()))))))
                self._check(g, nbe_type(g, step), s)
                return nbe_type(g, Sub(m, Ext(Id(), n)))
            case Case(n, m, bs, e):
                if len(bs) != n:
                    self._fail(DiagKind.BRANCH_COUNT_MISMATCH,
                               f"case{{{n}}} has {len(bs)} branches", g, k)
                ety = erase_tag(self._infer(g, e))
                if ety != Enum(n):
                    self._fail(DiagKind.EXPECTED_ENUM, f"case{{{n}}} needs a scrutinee of Enum {n}",
                               g, k, got=ety, n=n)
                self._type(extend(g, Enum(n)), m)
                for i, b in enumerate(bs):
                    self._check(g, nbe_type(g, Sub(m, Ext(Id(), Const(n, i)))), b)
                return nbe_type(g, Sub(m, Ext(Id(), e)))
            case Where(w, b, p):
                self._type(g, w)
                pty = erase_tag(self._infer(g, p))
                if not isinstance(pty, Prf):
                    self._fail(DiagKind.EXPECTED_PRF, "where needs a proof", g, k, got=pty)
                inner = pty.tm
                g1 = extend(g, inner)
                self._check(g1, nbe_type(g1, Sub(w, P())), b)
                # The body must not distinguish two proofs of the same proposition.
                g2 = extend(g1, Sub(inner, P()))
                w2 = Sub(w, Comp(P(), P()))
                lhs = nbe_term(g2, w2, Sub(b, Ext(Comp(P(), P()), Q())))
                rhs = nbe_term(g2, w2, Sub(b, P()))
                if lhs != rhs:
                    self._fail(DiagKind.IRRELEVANCE_VIOLATION,
                               "the body depends on the content of its proof", g, k,
                               expected=lhs, got=rhs)
                return nbe_type(g, w)
            case Star():
                self._fail(DiagKind.NOT_INFERABLE, "cannot infer a type for *", g, k)
        self._fail(DiagKind.NOT_INFERABLE, "cannot infer a type for a non-neutral term", g, k)


DEFAULT = Checker()


def check_type(g, v: Term, *, allow_star: bool = False) -> None:
    Checker(allow_star).check_type(g, v)


def check_term(g, ty: Term, v: Term, *, allow_star: bool = False) -> None:
    Checker(allow_star).check_term(g, ty, v)


def infer_type(g, k: Term, *, allow_star: bool = False) -> Term:
    return Checker(allow_star).infer_type(g, k)


def check_ctx(types, *, allow_star: bool = False) -> tuple:
    return Checker(allow_star).check_ctx(types)

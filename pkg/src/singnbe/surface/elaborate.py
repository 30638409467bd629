"""Translation of named surface terms into de Bruijn core terms."""

from __future__ import annotations

from ..errors import DiagKind, TypeCheckError
from ..syntax import (App, Box, Case, Const, Enum, Fst, Fun, Lam, Nat, Natrec,
                      Pair, Prf, Sigma, Sing, Snd, Star, Suc, U, Where, Zero,
                      mk_var)
from .ast import (SApp, SBox, SCase, SConst, SEnum, SFst, SFun, SLam, SNat,
                  SNatrec, SPair, SPrf, SSigma, SSing, SSnd, SStar, SSuc, SU,
                  SVar, SWhere, SZero)


def elaborate(s, scope=(), *, allow_star: bool = False):
    """Elaborate ``s`` with ``scope`` listing bound names innermost-first.

    ``_`` binds a name that cannot be referenced.
    """
    return _Elab(allow_star).go(s, tuple(scope))


class _Elab:
    def __init__(self, allow_star):
        self.allow_star = allow_star

    def go(self, s, scope):
        go = self.go
        match s:
            case SVar(name):
                if name != "_":
                    for i, bound in enumerate(scope):
                        if bound == name:
                            return mk_var(i)
                where = f" at {s.span}" if s.span else ""
                raise TypeCheckError(DiagKind.UNBOUND_NAME, f"unbound name {name!r}{where}",
                                     depth=len(scope))
            case SU():
                return U()
            case SFun(x, a, b):
                return Fun(go(a, scope), go(b, (x,) + scope))
            case SSing(a, x):
                return Sing(go(a, scope), go(x, scope))
            case SLam(x, b):
                return Lam(go(b, (x,) + scope))
            case SApp(f, a):
                return App(go(f, scope), go(a, scope))
            case SSigma(x, a, b):
                return Sigma(go(a, scope), go(b, (x,) + scope))
            case SPair(a, b):
                return Pair(go(a, scope), go(b, scope))
            case SFst(a):
                return Fst(go(a, scope))
            case SSnd(a):
                return Snd(go(a, scope))
            case SNat():
                return Nat()
            case SZero():
                return Zero()
            case SSuc(a):
                return Suc(go(a, scope))
            case SNatrec(x, m, z, st, k):
                return Natrec(go(m, (x,) + scope), go(z, scope), go(st, scope), go(k, scope))
            case SEnum(n):
                return Enum(n)
            case SConst(n, i):
                return Const(n, i)
            case SCase(n, x, m, bs, k):
                return Case(n, go(m, (x,) + scope), tuple(go(b, scope) for b in bs),
                            go(k, scope))
            case SPrf(a):
                return Prf(go(a, scope))
            case SBox(a):
                return Box(go(a, scope))
            case SStar():
                if not self.allow_star:
                    where = f" at {s.span}" if s.span else ""
                    raise TypeCheckError(DiagKind.STAR_IN_USER_SYNTAX,
                                         f"* is not allowed in user terms{where}",
                                         depth=len(scope))
                return Star()
            case SWhere(m, y, p, b):
                return Where(go(m, scope), go(b, (y,) + scope), go(p, scope))
        raise TypeError(f"not a surface term: {s!r}")

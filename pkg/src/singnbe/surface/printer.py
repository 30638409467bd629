"""Pretty-printing core terms as surface syntax.

Binders introduced at depth ``d`` are displayed as ``x{d}``.  On normal forms
the output parses and elaborates back to the same term.
"""

from __future__ import annotations

from ..syntax import (App, Box, Case, Comp, Const, Empty, Enum, Ext, Fst, Fun,
                      Id, Lam, Nat, Natrec, P, Pair, Prf, Q, Sigma, Sing, Snd,
                      Star, Sub, Suc, U, Where, Zero, occurs, var_index,
                      weakening_depth)

# precedence levels
TERM, APP, ATOM = 0, 1, 2


def print_term(t, depth: int = 0, ctx_names=None) -> str:
    """Render ``t`` under ``depth`` enclosing binders.

    ``ctx_names`` (innermost-first) names the free variables; by default the
    variable at index ``i`` is ``x{depth - 1 - i}``.
    """
    if ctx_names is None:
        names = tuple(f"x{depth - 1 - i}" for i in range(depth))
    else:
        names = tuple(ctx_names)
        depth = len(names)
    return _Printer(set(names)).go(t, depth, names, TERM)


def _paren(s, need):
    return f"({s})" if need else s


class _Printer:
    def __init__(self, reserved):
        self.reserved = reserved

    def fresh(self, depth, names):
        x = f"x{depth}"
        taken = self.reserved | set(names)
        while x in taken:
            x += "'"
        return x

    def go(self, t, d, names, prec):
        go = self.go
        i = var_index(t)
        if i is not None:
            return names[i] if i < len(names) else f"?{i}"
        match t:
            case U():
                return "U"
            case Nat():
                return "Nat"
            case Zero():
                return "zero"
            case Star():
                return "*"
            case Const(n, k):
                return f"c{{{n},{k}}}"
            case Enum(n):
                return _paren(f"Enum {n}", prec > APP)
            case Fun(a, b) if not occurs(0, b):
                s = f"{go(a, d, names, APP)} -> {go(b, d + 1, ('_',) + names, TERM)}"
                return _paren(s, prec > TERM)
            case Fun(a, b):
                x = self.fresh(d, names)
                s = f"({x} : {go(a, d, names, TERM)}) -> {go(b, d + 1, (x,) + names, TERM)}"
                return _paren(s, prec > TERM)
            case Sigma(a, b):
                x = self.fresh(d, names)
                s = f"Sig ({x} : {go(a, d, names, TERM)}). {go(b, d + 1, (x,) + names, TERM)}"
                return _paren(s, prec > TERM)
            case Lam(b):
                x = self.fresh(d, names)
                return _paren(f"\\{x}. {go(b, d + 1, (x,) + names, TERM)}", prec > TERM)
            case Sing(a, x):
                return f"{{{go(a, d, names, TERM)} : {go(x, d, names, TERM)}}}"
            case Pair(a, b):
                return f"({go(a, d, names, TERM)}, {go(b, d, names, TERM)})"
            case App(f, a):
                return _paren(f"{go(f, d, names, APP)} {go(a, d, names, ATOM)}", prec > APP)
            case Fst(a) | Snd(a) | Suc(a) | Prf(a) | Box(a):
                kw = {Fst: "fst", Snd: "snd", Suc: "suc", Prf: "Prf", Box: "box"}[type(t)]
                return _paren(f"{kw} {go(a, d, names, ATOM)}", prec > APP)
            case Natrec(m, z, s, k):
                x = self.fresh(d, names)
                body = (f"natrec [{x}. {go(m, d + 1, (x,) + names, TERM)}] "
                        f"{go(z, d, names, ATOM)} {go(s, d, names, ATOM)} {go(k, d, names, ATOM)}")
                return _paren(body, prec > APP)
            case Case(n, m, bs, k):
                x = self.fresh(d, names)
                branches = " | ".join(go(b, d, names, TERM) for b in bs)
                body = (f"case{{{n}}} [{x}. {go(m, d + 1, (x,) + names, TERM)}] "
                        f"({branches}) {go(k, d, names, ATOM)}")
                return _paren(body, prec > APP)
            case Where(m, b, k):
                y = self.fresh(d, names)
                body = (f"where [{go(m, d, names, TERM)}] ([{y}] = {go(k, d, names, TERM)}) "
                        f"{go(b, d + 1, (y,) + names, ATOM)}")
                return _paren(body, prec > APP)
            case Sub(a, s):
                w = weakening_depth(s)
                if w is not None and w <= len(names):
                    return go(a, d - w, names[w:], prec)
                return f"{go(a, d, names, ATOM)}[{self.subst(s, d, names)}]"
        raise TypeError(f"not a term: {t!r}")

    def subst(self, s, d, names):
        match s:
            case Empty():
                return "<>"
            case Id():
                return "id"
            case P():
                return "p"
            case Ext(rest, last):
                return f"{self.subst(rest, d, names)}, {self.go(last, d, names, TERM)}"
            case Comp(a, b):
                return f"{self.subst(a, d, names)} . {self.subst(b, d, names)}"
        raise TypeError(f"not a substitution: {s!r}")

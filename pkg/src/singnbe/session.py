"""A growing typing context driven by surface declarations.

``Session`` is what the command-line front end uses to process a file, and
it is a convenient way to script the kernel from Python::

    s = Session()
    s.assume("v", "{zero : Nat}")
    s.normalize("v", "Nat")   # -> 'zero'

Definitions are added to the context as variables of singleton type,
``x : {t : A}``, so every later use of ``x`` is definitionally ``t`` and
normal forms never mention ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checker import Checker
from .nbe import nbe_term, nbe_type
from .surface.ast import Assume, Check, Define, Infer, Normalize
from .surface.elaborate import elaborate
from .surface.parser import parse_term
from .surface.printer import print_term
from .syntax import Sing, extend


@dataclass(frozen=True)
class Judgement:
    """An accepted ``ctx |- term : ty`` (core syntax, context innermost-first)."""
    ctx: tuple
    names: tuple
    ty: object
    term: object


@dataclass
class Session:
    allow_star: bool = False
    ctx: tuple = ()  # core types, innermost-first
    names: tuple = ()  # surface names, innermost-first
    kinds: dict = field(default_factory=dict)  # name -> "assume" | "define"
    judgements: list = field(default_factory=list)  # accepted (ctx, type, term)

    @property
    def checker(self) -> Checker:
        return Checker(self.allow_star)

    def elab(self, s):
        if isinstance(s, str):
            s = parse_term(s)
        return elaborate(s, self.names, allow_star=self.allow_star)

    def show(self, t) -> str:
        return print_term(t, ctx_names=self.names)

    def _bind(self, name, ty, kind):
        self.ctx = extend(self.ctx, ty)
        self.names = (name,) + self.names
        self.kinds[name] = kind

    # -- declarations ------------------------------------------------------

    def assume(self, name, ty):
        a = self.elab(ty)
        self.checker.check_type(self.ctx, a)
        self._bind(name, a, "assume")
        return a

    def define(self, name, ty, body):
        a = self.elab(ty)
        t = self.elab(body)
        self.checker.check_type(self.ctx, a)
        self.checker.check_term(self.ctx, nbe_type(self.ctx, a), t)
        self.judgements.append(Judgement(self.ctx, self.names, a, t))
        self._bind(name, Sing(t, a), "define")
        return t

    def check(self, term, ty):
        """Check ``term : ty``; return the core pair ``(t, A)``."""
        a = self.elab(ty)
        t = self.elab(term)
        self.checker.check_type(self.ctx, a)
        self.checker.check_term(self.ctx, nbe_type(self.ctx, a), t)
        self.judgements.append(Judgement(self.ctx, self.names, a, t))
        return t, a

    def normal_form(self, term, ty):
        t, a = self.check(term, ty)
        return nbe_term(self.ctx, a, t)

    def normalize(self, term, ty) -> str:
        return self.show(self.normal_form(term, ty))

    def infer_core(self, term):
        return self.checker.infer_type(self.ctx, self.elab(term))

    def infer(self, term) -> str:
        return self.show(self.infer_core(term))

    def run_decl(self, d):
        """Process one parsed declaration; return its printed payload."""
        match d:
            case Assume(name, ty):
                self.assume(name, ty)
                return ""
            case Define(name, ty, body):
                self.define(name, ty, body)
                return ""
            case Check(term, ty):
                self.check(term, ty)
                return ""
            case Normalize(term, ty):
                return self.normalize(term, ty)
            case Infer(term):
                return self.infer(term)
        raise TypeError(f"not a declaration: {d!r}")

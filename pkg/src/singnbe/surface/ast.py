"""Named-binder surface syntax and declaration files."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Span:
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


class STerm:
    __slots__ = ()


def _span():
    return field(default=None, compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class SVar(STerm):
    name: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SU(STerm):
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SFun(STerm):
    x: str
    dom: STerm
    cod: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SSing(STerm):
    body: STerm
    tag: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SLam(STerm):
    x: str
    body: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SApp(STerm):
    fn: STerm
    arg: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SSigma(STerm):
    x: str
    dom: STerm
    cod: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SPair(STerm):
    fst: STerm
    snd: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SFst(STerm):
    tm: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SSnd(STerm):
    tm: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SNat(STerm):
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SZero(STerm):
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SSuc(STerm):
    tm: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SNatrec(STerm):
    x: str
    motive: STerm
    base: STerm
    step: STerm
    scrut: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SEnum(STerm):
    n: int
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SConst(STerm):
    n: int
    i: int
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SCase(STerm):
    n: int
    x: str
    motive: STerm
    branches: tuple
    scrut: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SPrf(STerm):
    tm: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SBox(STerm):
    tm: STerm
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SStar(STerm):
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class SWhere(STerm):
    motive: STerm
    y: str
    proof: STerm
    body: STerm
    span: Optional[Span] = _span()


# -- declarations ----------------------------------------------------------


class Decl:
    __slots__ = ()
    verb = ""


@dataclass(frozen=True)
class Assume(Decl):
    name: str
    ty: STerm
    span: Optional[Span] = _span()
    verb = "assume"


@dataclass(frozen=True)
class Define(Decl):
    name: str
    ty: STerm
    body: STerm
    span: Optional[Span] = _span()
    verb = "define"


@dataclass(frozen=True)
class Check(Decl):
    term: STerm
    ty: STerm
    span: Optional[Span] = _span()
    verb = "check"


@dataclass(frozen=True)
class Normalize(Decl):
    term: STerm
    ty: STerm
    span: Optional[Span] = _span()
    verb = "normalize"


@dataclass(frozen=True)
class Infer(Decl):
    term: STerm
    span: Optional[Span] = _span()
    verb = "infer"


@dataclass(frozen=True)
class DeclFile:
    decls: tuple

"""Tokenizer and recursive-descent parser for declaration files.

Grammar (``atom`` marks positions that need parentheses around compound
terms)::

    term  ::= \\x y ... . term | (x : term) -> term | Sig (x : term). term
            | app [-> term]
    app   ::= head atom*
    head  ::= suc atom | fst atom | snd atom | box atom | Prf atom | Enum NUM
            | natrec [x. term] atom atom atom
            | case{n} [x. term] (term | ... | term) atom
            | where [term] ([y] = term) atom
            | atom
    atom  ::= name | U | Nat | zero | * | c{n,i} | (term) | (term, term, ...)
            | {term : term}

Declarations are ``assume x : A``, ``define x : A = t``, ``check t : A``,
``normalize t : A`` and ``infer t``.  ``#`` starts a line comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ast import (Assume, Check, DeclFile, Define, Infer, Normalize, SApp, SBox,
                  SCase, SConst, SEnum, SFst, SFun, SLam, SNat, SNatrec, SPair,
                  SPrf, SSigma, SSing, SSnd, SStar, SSuc, SU, SVar, SWhere,
                  SZero, Span)

KEYWORDS = frozenset({
    "U", "Nat", "zero", "suc", "fst", "snd", "natrec", "Enum", "case", "Prf",
    "box", "where", "Sig", "assume", "define", "check", "normalize", "infer",
})
DECL_KEYWORDS = ("assume", "define", "check", "normalize", "infer")
HEAD_KEYWORDS = frozenset({"suc", "fst", "snd", "box", "Prf", "Enum", "natrec", "case",
                           "where", "Sig"})


class ParseError(Exception):
    def __init__(self, message, span=None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self):
        where = f"{self.span}: " if self.span else ""
        return f"{where}{self.message}"


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, NUM, CONST, CASE, SYM, EOF
    text: str
    span: Span
    value: object = None


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<const>c\{\s*(?P<cn>\d+)\s*,\s*(?P<ci>\d+)\s*\})
  | (?P<case>case\{\s*(?P<kn>\d+)\s*\})
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>->|[\\.():\[\]{},|=*])
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        span = Span(line, pos - line_start + 1)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", span)
        kind = m.lastgroup
        chunk = m.group(0)
        if m.group("const"):
            n, i = int(m.group("cn")), int(m.group("ci"))
            if i >= n:
                raise ParseError(f"constant c{{{n},{i}}} out of range: index must be below {n}", span)
            toks.append(Token("CONST", chunk, span, (n, i)))
        elif m.group("case"):
            toks.append(Token("CASE", chunk, span, int(m.group("kn"))))
        elif m.group("num"):
            toks.append(Token("NUM", chunk, span, int(chunk)))
        elif m.group("name"):
            toks.append(Token("NAME", chunk, span))
        elif m.group("sym"):
            toks.append(Token("SYM", chunk, span))
        elif kind not in ("ws", "comment"):  # pragma: no cover
            raise ParseError(f"unexpected token {chunk!r}", span)
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    toks.append(Token("EOF", "", Span(line, pos - line_start + 1)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.pos = 0

    # -- token helpers -----------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def at(self, text, tok=None) -> bool:
        tok = tok or self.tok
        return tok.kind in ("SYM", "NAME") and tok.text == text

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def expect(self, text) -> Token:
        if not self.at(text):
            raise ParseError(f"expected {text!r}, found {self.describe(self.tok)}", self.tok.span)
        return self.advance()

    def describe(self, tok):
        return "end of input" if tok.kind == "EOF" else repr(tok.text)

    def binder(self) -> str:
        tok = self.tok
        if tok.kind != "NAME" or tok.text in KEYWORDS:
            raise ParseError(f"expected a variable name, found {self.describe(tok)}", tok.span)
        return self.advance().text

    def number(self) -> int:
        tok = self.tok
        if tok.kind != "NUM":
            raise ParseError(f"expected a number, found {self.describe(tok)}", tok.span)
        return self.advance().value

    # -- declarations ------------------------------------------------------

    def decl_file(self) -> DeclFile:
        decls = []
        while self.tok.kind != "EOF":
            decls.append(self.decl())
        return DeclFile(tuple(decls))

    def decl(self):
        tok = self.tok
        if tok.kind != "NAME" or tok.text not in DECL_KEYWORDS:
            raise ParseError(f"expected a declaration ({', '.join(DECL_KEYWORDS)}), "
                             f"found {self.describe(tok)}", tok.span)
        self.advance()
        span = tok.span
        match tok.text:
            case "assume":
                name = self.binder()
                self.expect(":")
                return Assume(name, self.term(), span=span)
            case "define":
                name = self.binder()
                self.expect(":")
                ty = self.term()
                self.expect("=")
                return Define(name, ty, self.term(), span=span)
            case "check" | "normalize":
                t = self.term()
                self.expect(":")
                cls = Check if tok.text == "check" else Normalize
                return cls(t, self.term(), span=span)
            case "infer":
                return Infer(self.term(), span=span)

    # -- terms -------------------------------------------------------------

    def term(self):
        tok = self.tok
        span = tok.span
        if self.at("\\"):
            self.advance()
            names = [self.binder()]
            while not self.at("."):
                names.append(self.binder())
            self.advance()
            body = self.term()
            for x in reversed(names):
                body = SLam(x, body, span=span)
            return body
        if self.at("(") and self.peek().kind == "NAME" and self.at(":", self.peek(2)):
            self.advance()
            x = self.binder()
            self.expect(":")
            dom = self.term()
            self.expect(")")
            self.expect("->")
            return SFun(x, dom, self.term(), span=span)
        if self.at("Sig"):
            self.advance()
            self.expect("(")
            x = self.binder()
            self.expect(":")
            dom = self.term()
            self.expect(")")
            self.expect(".")
            return SSigma(x, dom, self.term(), span=span)
        t = self.app()
        if self.at("->"):
            self.advance()
            return SFun("_", t, self.term(), span=span)
        return t

    def app(self):
        t = self.head()
        while self.starts_atom():
            arg = self.atom()
            t = SApp(t, arg, span=t.span)
        tok = self.tok
        if tok.kind == "CASE" or (tok.kind == "NAME" and tok.text in HEAD_KEYWORDS):
            raise ParseError(f"{tok.text!r} cannot be an argument; parenthesise it", tok.span)
        return t

    def head(self):
        tok = self.tok
        span = tok.span
        if tok.kind == "CASE":
            self.advance()
            n = tok.value
            x, motive = self.motive()
            self.expect("(")
            branches = []
            if not self.at(")"):
                branches.append(self.term())
                while self.at("|"):
                    self.advance()
                    branches.append(self.term())
            self.expect(")")
            if len(branches) != n:
                raise ParseError(f"case{{{n}}} needs {n} branches, found {len(branches)}", span)
            return SCase(n, x, motive, tuple(branches), self.atom(), span=span)
        if tok.kind != "NAME":
            return self.atom()
        match tok.text:
            case "suc" | "fst" | "snd" | "box" | "Prf":
                self.advance()
                cls = {"suc": SSuc, "fst": SFst, "snd": SSnd, "box": SBox, "Prf": SPrf}[tok.text]
                return cls(self.atom(), span=span)
            case "Enum":
                self.advance()
                return SEnum(self.number(), span=span)
            case "natrec":
                self.advance()
                x, motive = self.motive()
                z = self.atom()
                s = self.atom()
                return SNatrec(x, motive, z, s, self.atom(), span=span)
            case "case":
                raise ParseError("case needs its arity, as in case{2}", span)
            case "where":
                self.advance()
                self.expect("[")
                motive = self.term()
                self.expect("]")
                self.expect("(")
                self.expect("[")
                y = self.binder()
                self.expect("]")
                self.expect("=")
                proof = self.term()
                self.expect(")")
                return SWhere(motive, y, proof, self.atom(), span=span)
        return self.atom()

    def motive(self):
        self.expect("[")
        x = self.binder()
        self.expect(".")
        body = self.term()
        self.expect("]")
        return x, body

    def starts_atom(self) -> bool:
        tok = self.tok
        if tok.kind == "CONST":
            return True
        if tok.kind == "NAME":
            return tok.text not in KEYWORDS or tok.text in ("U", "Nat", "zero")
        return tok.kind == "SYM" and tok.text in ("(", "{", "*")

    def atom(self):
        tok = self.tok
        span = tok.span
        if tok.kind == "CONST":
            self.advance()
            return SConst(*tok.value, span=span)
        if tok.kind == "NAME":
            if tok.text == "U":
                self.advance()
                return SU(span=span)
            if tok.text == "Nat":
                self.advance()
                return SNat(span=span)
            if tok.text == "zero":
                self.advance()
                return SZero(span=span)
            if tok.text in KEYWORDS:
                raise ParseError(f"keyword {tok.text!r} cannot be used here; "
                                 f"parenthesise it", span)
            self.advance()
            return SVar(tok.text, span=span)
        if self.at("*"):
            self.advance()
            return SStar(span=span)
        if self.at("("):
            self.advance()
            items = [self.term()]
            while self.at(","):
                self.advance()
                items.append(self.term())
            self.expect(")")
            t = items[-1]
            for a in reversed(items[:-1]):
                t = SPair(a, t, span=span)
            return t
        if self.at("{"):
            self.advance()
            body = self.term()
            self.expect(":")
            tag = self.term()
            self.expect("}")
            return SSing(body, tag, span=span)
        raise ParseError(f"expected a term, found {self.describe(tok)}", span)


def parse(text: str) -> DeclFile:
    """Parse a declaration file."""
    return _Parser(text).decl_file()


def parse_term(text: str):
    """Parse a single surface term (used by tests and the printer round trip)."""
    p = _Parser(text)
    t = p.term()
    if p.tok.kind != "EOF":
        raise ParseError(f"unexpected {p.describe(p.tok)} after term", p.tok.span)
    return t

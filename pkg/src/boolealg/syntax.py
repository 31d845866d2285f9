"""Text syntax: terms, basic formulas, categorical sentences and argument files.

Term grammar, loosest binding first::

    union   := inter (('|' | '∪') inter)*
    inter   := postfix (('&' | '*' | '∩') postfix)*
    postfix := atom ("'" | '′')*
    atom    := '0' | '1' | IDENT | '(' union ')'

Formulas are ``p = q``, ``p != q``, ``p <= q``, ``p >= q`` or one of the
ordinary-language forms in :data:`SENTENCES`.  An argument file holds one
formula per line, then a line ``|-`` and the conclusion; ``#`` starts a
comment.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable

from .constituents import constituent_set
from .errors import ParseError, UnknownToken
from .terms import (
    ONE, ZERO, Argument, BasicFormula, Complement, Intersection, One, Polarity,
    Term, Union, Var, Zero, free_vars, infer_context,
)

__all__ = [
    "parse_term", "parse_formula", "print_term", "print_formula",
    "parse_document", "Document", "SENTENCES", "to_sentence", "translate",
]

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<const>[01](?![A-Za-z0-9_]))
  | (?P<rel>!=|<=|>=|≠|⊆|⊇|=)
  | (?P<op>[|&*'()∪∩′])
""", re.VERBOSE)

_CANON_OP = {"∪": "|", "∩": "&", "*": "&", "′": "'"}
_CANON_REL = {"≠": "!=", "⊆": "<=", "⊇": ">="}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(src: str, line: int = 1) -> list[_Tok]:
    toks, pos = [], 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise UnknownToken(f"unexpected character {src[pos]!r}", line, pos + 1, src)
        kind = m.lastgroup
        if kind != "ws":
            text = m.group()
            if kind == "op":
                text = _CANON_OP.get(text, text)
            elif kind == "rel":
                text = _CANON_REL.get(text, text)
            toks.append(_Tok(kind, text, pos + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", len(src) + 1))
    return toks


class _Parser:
    def __init__(self, src: str, line: int = 1):
        self.src = src
        self.line = line
        self.toks = _tokenize(src, line)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return ParseError(msg, self.line, tok.col, self.src)

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("op", "rel") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def union(self) -> Term:
        t = self.inter()
        while self.accept("|"):
            t = Union(t, self.inter())
        return t

    def inter(self) -> Term:
        t = self.postfix()
        while self.accept("&"):
            t = Intersection(t, self.postfix())
        return t

    def postfix(self) -> Term:
        t = self.atom()
        while self.accept("'"):
            t = Complement(t)
        return t

    def atom(self) -> Term:
        tok = self.tok
        if tok.kind == "ident":
            self.i += 1
            return Var(tok.text)
        if tok.kind == "const":
            self.i += 1
            return ONE if tok.text == "1" else ZERO
        if self.accept("("):
            t = self.union()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return t
        if tok.kind == "eof":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")

    def expect_eof(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")


def parse_term(src: str, line: int = 1) -> Term:
    p = _Parser(src, line)
    t = p.union()
    p.expect_eof()
    return t


# -- ordinary-language forms ---------------------------------------------

_ID = r"([A-Za-z_][A-Za-z0-9_]*)"


@dataclass(frozen=True)
class _Sentence:
    name: str
    pattern: re.Pattern
    template: str
    build: Callable[..., BasicFormula]

    @property
    def arity(self) -> int:
        return self.pattern.groups


def _s(name, regex, template, build):
    return _Sentence(name, re.compile(regex.replace("ID", _ID) + r"\Z", re.I), template, build)


def _v(n):
    return Var(n)


SENTENCES: tuple[_Sentence, ...] = (
    _s("A", r"all ID (?:is|are) ID", "All {0} is {1}",
       lambda a, b: BasicFormula(Intersection(_v(a), Complement(_v(b))), Polarity.EQ)),
    _s("E", r"no ID (?:is|are) ID", "No {0} is {1}",
       lambda a, b: BasicFormula(Intersection(_v(a), _v(b)), Polarity.EQ)),
    _s("O", r"some ID (?:is|are) not ID", "Some {0} is not {1}",
       lambda a, b: BasicFormula(Intersection(_v(a), Complement(_v(b))), Polarity.NEQ)),
    _s("I", r"some ID (?:is|are) ID", "Some {0} is {1}",
       lambda a, b: BasicFormula(Intersection(_v(a), _v(b)), Polarity.NEQ)),
    _s("empty", r"ID is empty", "{0} is empty",
       lambda a: BasicFormula(_v(a), Polarity.EQ)),
    _s("nonempty", r"ID is not empty", "{0} is not empty",
       lambda a: BasicFormula(_v(a), Polarity.NEQ)),
    _s("both-empty", r"ID and ID are empty", "{0} and {1} are empty",
       lambda a, b: BasicFormula(Union(_v(a), _v(b)), Polarity.EQ)),
    _s("disjoint", r"ID and ID are disjoint", "{0} and {1} are disjoint",
       lambda a, b: BasicFormula(Intersection(_v(a), _v(b)), Polarity.EQ)),
    _s("empty-universe", r"ID is empty and ID is the universe",
       "{0} is empty and {1} is the universe",
       lambda a, b: BasicFormula(Union(_v(a), Complement(_v(b))), Polarity.EQ)),
    _s("either-nonempty", r"ID or ID is not empty", "{0} or {1} is not empty",
       lambda a, b: BasicFormula(Union(_v(a), _v(b)), Polarity.NEQ)),
)


def _parse_sentence(src: str) -> BasicFormula | None:
    text = " ".join(src.split())
    for s in SENTENCES:
        m = s.pattern.match(text)
        if m:
            return s.build(*m.groups())
    return None


def parse_formula(src: str, line: int = 1) -> BasicFormula:
    f = _parse_sentence(src)
    if f is not None:
        return f
    p = _Parser(src, line)
    lhs = p.union()
    tok = p.tok
    if tok.kind != "rel":
        raise p.error("expected one of =, !=, <=, >=")
    p.i += 1
    rhs = p.union()
    p.expect_eof()
    if tok.text == "=":
        return BasicFormula.eq(lhs, rhs)
    if tok.text == "!=":
        return BasicFormula.neq(lhs, rhs)
    if tok.text == "<=":
        return BasicFormula.subset(lhs, rhs)
    return BasicFormula.subset(rhs, lhs)


def to_sentence(f: BasicFormula) -> str | None:
    """Ordinary-language reading of ``f`` if it matches a table row up to equivalence."""
    names = sorted(free_vars(f.lhs), key=list(infer_context(f.lhs)).index)
    if not names or len(names) > 2:
        return None
    ctx = infer_context(f.lhs)
    target = constituent_set(f.lhs, ctx)
    for s in SENTENCES:
        for combo in itertools.permutations(names, s.arity):
            g = s.build(*combo)
            if g.polarity is f.polarity and constituent_set(g.lhs, ctx) == target:
                return s.template.format(*combo)
    return None


def translate(text: str) -> tuple[str, str]:
    """Translate in whichever direction applies.

    Returns ``(direction, result)`` where direction is ``"to-formula"`` or
    ``"to-sentence"``.  A formula with no matching sentence comes back as itself.
    """
    f = _parse_sentence(text)
    if f is not None:
        return "to-formula", print_formula(f)
    f = parse_formula(text)
    s = to_sentence(f)
    return "to-sentence", s if s is not None else print_formula(f)


# -- printing ------------------------------------------------------------

_STYLES = {
    "ascii": {"union": " | ", "inter": " & ", "comp": "'"},
    "unicode": {"union": " ∪ ", "inter": " ∩ ", "comp": "′"},
}


def print_term(t: Term, style: str = "ascii") -> str:
    sym = _STYLES[style]

    def go(u: Term, prec: int) -> str:
        # prec: 1 union, 2 intersection, 3 postfix operand
        if isinstance(u, Zero):
            return "0"
        if isinstance(u, One):
            return "1"
        if isinstance(u, Var):
            return u.name
        if isinstance(u, Complement):
            return go(u.arg, 3) + sym["comp"]
        if isinstance(u, Union):
            s = go(u.left, 1) + sym["union"] + go(u.right, 2)
            return f"({s})" if prec > 1 else s
        if isinstance(u, Intersection):
            s = go(u.left, 2) + sym["inter"] + go(u.right, 3)
            return f"({s})" if prec > 2 else s
        raise TypeError(f"not a term: {u!r}")

    return go(t, 1)


def print_formula(f: BasicFormula, style: str = "ascii") -> str:
    rel = "=" if f.is_eq else ("!=" if style == "ascii" else "≠")
    return f"{print_term(f.lhs, style)} {rel} 0"


# -- argument files ------------------------------------------------------

@dataclass
class Document:
    premisses: list[BasicFormula] = field(default_factory=list)
    conclusion: BasicFormula | None = None
    terms: list[Term] = field(default_factory=list)

    @property
    def formulas(self) -> list[BasicFormula]:
        return self.premisses + ([self.conclusion] if self.conclusion else [])

    def argument(self) -> Argument:
        if self.conclusion is None:
            raise ParseError("no conclusion: expected a '|-' line followed by a formula", 1, 1)
        return Argument(self.premisses, self.conclusion)


_TURNSTILE = {"|-", "⊢", "∴", "therefore"}


def parse_document(text: str) -> Document:
    """Parse an argument file.  Lines without a relation are kept as bare terms."""
    doc = Document()
    after = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.lower() in _TURNSTILE:
            if after:
                raise ParseError("second '|-' line", lineno, 1, raw)
            after = True
            continue
        if _parse_sentence(body) is None and not _has_relation(body, lineno):
            if after:
                raise ParseError("the conclusion must be a formula", lineno, 1, raw)
            doc.terms.append(parse_term(body, lineno))
            continue
        f = parse_formula(body, lineno)
        if after:
            if doc.conclusion is not None:
                raise ParseError("only one conclusion is allowed", lineno, 1, raw)
            doc.conclusion = f
        else:
            doc.premisses.append(f)
    if after and doc.conclusion is None:
        raise ParseError("missing conclusion after '|-'", len(text.splitlines()) or 1, 1)
    return doc


def _has_relation(src: str, line: int) -> bool:
    return any(t.kind == "rel" for t in _tokenize(src, line))

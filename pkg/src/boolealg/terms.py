"""Terms and basic formulas of the power-set algebra language.

Terms are immutable trees over ``0``, ``1``, variables, complement, union and
intersection.  Basic formulas are always kept in standard form, ``p = 0`` or
``p != 0``; an equation ``p = q`` is stored as the symmetric difference of the
two sides set to zero.

The inclusion ``p <= q`` has two textbook readings, ``p = p & q`` and
``p & q' = 0``.  This module always builds the second one.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ContextTooLarge

__all__ = [
    "Term", "Zero", "One", "Var", "Complement", "Union", "Intersection",
    "ZERO", "ONE", "var", "variables",
    "Polarity", "BasicFormula", "Argument", "VarContext",
    "standardize", "free_vars", "substitute", "simplify", "fold_constants",
    "union_of", "intersection_of", "sym_diff", "depth", "size",
    "infer_context", "fresh_name", "LAWS", "MAX_VARS",
]

MAX_VARS = 24
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Term:
    """Base class of the term AST.  Supports ``|``, ``&`` and ``~`` as sugar."""

    __slots__ = ()

    def __or__(self, other: Term) -> Term:
        return Union(self, other)

    def __and__(self, other: Term) -> Term:
        return Intersection(self, other)

    def __invert__(self) -> Term:
        return Complement(self)

    def __str__(self) -> str:
        from .syntax import print_term
        return print_term(self)


@dataclass(frozen=True, slots=True, repr=False)
class Zero(Term):
    def __repr__(self):
        return "ZERO"


@dataclass(frozen=True, slots=True, repr=False)
class One(Term):
    def __repr__(self):
        return "ONE"


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME_RE.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")


@dataclass(frozen=True, slots=True)
class Complement(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Union(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Intersection(Term):
    left: Term
    right: Term


ZERO = Zero()
ONE = One()


def var(name: str) -> Var:
    return Var(name)


def variables(names: str) -> tuple[Var, ...]:
    """``variables("x y z")`` -> ``(Var('x'), Var('y'), Var('z'))``."""
    return tuple(Var(n) for n in names.replace(",", " ").split())


class Polarity(enum.Enum):
    EQ = "="
    NEQ = "!="

    def negate(self) -> Polarity:
        return Polarity.NEQ if self is Polarity.EQ else Polarity.EQ


@dataclass(frozen=True, slots=True)
class BasicFormula:
    """``lhs = 0`` (polarity EQ) or ``lhs != 0`` (polarity NEQ)."""

    lhs: Term
    polarity: Polarity = Polarity.EQ

    @classmethod
    def eq(cls, p: Term, q: Term = ZERO) -> BasicFormula:
        return cls(p if isinstance(q, Zero) else standardize(p, q), Polarity.EQ)

    @classmethod
    def neq(cls, p: Term, q: Term = ZERO) -> BasicFormula:
        return cls(p if isinstance(q, Zero) else standardize(p, q), Polarity.NEQ)

    @classmethod
    def subset(cls, p: Term, q: Term) -> BasicFormula:
        return cls(Intersection(p, Complement(q)), Polarity.EQ)

    @property
    def is_eq(self) -> bool:
        return self.polarity is Polarity.EQ

    def negated(self) -> BasicFormula:
        return BasicFormula(self.lhs, self.polarity.negate())

    def __str__(self):
        return f"{self.lhs} {self.polarity.value} 0"


@dataclass(frozen=True, slots=True)
class Argument:
    premisses: tuple[BasicFormula, ...]
    conclusion: BasicFormula

    def __init__(self, premisses: Iterable[BasicFormula], conclusion: BasicFormula):
        object.__setattr__(self, "premisses", tuple(premisses))
        object.__setattr__(self, "conclusion", conclusion)

    def formulas(self) -> tuple[BasicFormula, ...]:
        return self.premisses + (self.conclusion,)

    def __str__(self):
        prem = ", ".join(str(f) for f in self.premisses)
        return f"{prem} ∴ {self.conclusion}" if prem else f"∴ {self.conclusion}"


@dataclass(frozen=True, slots=True)
class VarContext:
    """An ordered list of distinct variable names.

    Position ``i`` is bit ``i`` of a sigma index (first variable = least
    significant bit).
    """

    names: tuple[str, ...]

    def __init__(self, names: Iterable[str] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable in context {names!r}")
        for n in names:
            if not _NAME_RE.match(n):
                raise ValueError(f"invalid variable name {n!r}")
        object.__setattr__(self, "names", names)

    @property
    def k(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        return self.names.index(name)

    def extend(self, more: Iterable[str]) -> VarContext:
        extra = [n for n in more if n not in self.names]
        return VarContext(self.names + tuple(dict.fromkeys(extra)))

    def without(self, drop: Iterable[str]) -> VarContext:
        drop = set(drop)
        return VarContext(n for n in self.names if n not in drop)

    def check_size(self, cap: int = MAX_VARS) -> None:
        if self.k > min(cap, MAX_VARS):
            raise ContextTooLarge(
                f"context has {self.k} variables; the limit is {min(cap, MAX_VARS)}")

    def __repr__(self):
        return f"VarContext({list(self.names)!r})"


def _walk(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Complement):
            stack.append(node.arg)
        elif isinstance(node, (Union, Intersection)):
            stack.append(node.right)
            stack.append(node.left)


def free_vars(t: Term) -> frozenset[str]:
    return frozenset(n.name for n in _walk(t) if isinstance(n, Var))


def infer_context(*items: Term | BasicFormula) -> VarContext:
    """Variables of ``items`` ordered by first textual (left-to-right) occurrence."""
    seen: dict[str, None] = {}
    for item in items:
        t = item.lhs if isinstance(item, BasicFormula) else item
        for node in _walk(t):
            if isinstance(node, Var):
                seen.setdefault(node.name, None)
    return VarContext(seen)


def depth(t: Term) -> int:
    if isinstance(t, Complement):
        return 1 + depth(t.arg)
    if isinstance(t, (Union, Intersection)):
        return 1 + max(depth(t.left), depth(t.right))
    return 0


def size(t: Term) -> int:
    return sum(1 for _ in _walk(t))


def sym_diff(p: Term, q: Term) -> Term:
    return Union(Intersection(p, Complement(q)), Intersection(Complement(p), q))


def standardize(p: Term, q: Term) -> Term:
    """Return ``r`` with ``p = q`` iff ``r = 0``, namely ``p & q' | p' & q``."""
    return sym_diff(p, q)


def union_of(terms: Iterable[Term]) -> Term:
    """Right-associated union; the empty union is ``0``."""
    terms = list(terms)
    if not terms:
        return ZERO
    acc = terms[-1]
    for t in reversed(terms[:-1]):
        acc = Union(t, acc)
    return acc


def intersection_of(terms: Iterable[Term]) -> Term:
    """Right-associated intersection; the empty intersection is ``1``."""
    terms = list(terms)
    if not terms:
        return ONE
    acc = terms[-1]
    for t in reversed(terms[:-1]):
        acc = Intersection(t, acc)
    return acc


def substitute(t: Term, bindings: Mapping[str, Term]) -> Term:
    """Simultaneous substitution of terms for variables."""
    if not bindings:
        return t
    if isinstance(t, Var):
        return bindings.get(t.name, t)
    if isinstance(t, Complement):
        arg = substitute(t.arg, bindings)
        return t if arg is t.arg else Complement(arg)
    if isinstance(t, (Union, Intersection)):
        left = substitute(t.left, bindings)
        right = substitute(t.right, bindings)
        if left is t.left and right is t.right:
            return t
        return type(t)(left, right)
    return t


def _is_complement_pair(a: Term, b: Term) -> bool:
    return (isinstance(a, Complement) and a.arg == b) or (
        isinstance(b, Complement) and b.arg == a)


def simplify(t: Term) -> Term:
    """One bottom-up pass of the 0/1, idempotent, complement and double-complement laws.

    The result is semantically equal to ``t`` but is not a canonical form;
    compare terms through their constituent sets.
    """
    if isinstance(t, Complement):
        a = simplify(t.arg)
        if isinstance(a, Zero):
            return ONE
        if isinstance(a, One):
            return ZERO
        if isinstance(a, Complement):
            return a.arg
        return t if a is t.arg else Complement(a)
    if isinstance(t, Intersection):
        a, b = simplify(t.left), simplify(t.right)
        if isinstance(a, Zero) or isinstance(b, Zero):
            return ZERO
        if isinstance(a, One):
            return b
        if isinstance(b, One):
            return a
        if a == b:
            return a
        if _is_complement_pair(a, b):
            return ZERO
        return Intersection(a, b)
    if isinstance(t, Union):
        a, b = simplify(t.left), simplify(t.right)
        if isinstance(a, One) or isinstance(b, One):
            return ONE
        if isinstance(a, Zero):
            return b
        if isinstance(b, Zero):
            return a
        if a == b:
            return a
        if _is_complement_pair(a, b):
            return ONE
        return Union(a, b)
    return t


def fold_constants(t: Term) -> Term:
    """Evaluate a variable-free term to ``ZERO`` or ``ONE``; other terms are simplified."""
    return simplify(t)


def fresh_name(prefix: str, taken: Iterable[str]) -> str:
    """``prefix`` itself if unused, else ``prefix1``, ``prefix2``, ..."""
    taken = set(taken)
    if prefix not in taken:
        return prefix
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


# The equational laws of power-set algebras, as (name, left, right) source
# strings over p, q, r.  Parsed on demand by tests and the docs.
LAWS: tuple[tuple[str, str, str], ...] = (
    ("Idempotent", "p | p", "p"),
    ("Idempotent", "p & p", "p"),
    ("0", "p | 0", "p"),
    ("0", "p & 0", "0"),
    ("1", "p | 1", "1"),
    ("1", "p & 1", "p"),
    ("Commutative", "p | q", "q | p"),
    ("Commutative", "p & q", "q & p"),
    ("Associative", "p | (q | r)", "(p | q) | r"),
    ("Associative", "p & (q & r)", "(p & q) & r"),
    ("Absorption", "p | p & q", "p"),
    ("Absorption", "p & (p | q)", "p"),
    ("Distributive", "p | q & r", "(p | q) & (p | r)"),
    ("Distributive", "p & (q | r)", "p & q | p & r"),
    ("Complement", "p | p'", "1"),
    ("Complement", "p & p'", "0"),
    ("De Morgan", "(p | q)'", "p' & q'"),
    ("De Morgan", "(p & q)'", "p' | q'"),
)

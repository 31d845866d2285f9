"""Constituents, full expansions and constituent sets.

A sigma index over a context ``x1..xk`` is an integer in ``[0, 2**k)`` whose
bit ``i`` gives the value of ``x(i+1)``.  The constituent ``C_sigma`` is the
product of ``xi`` (bit set) or ``xi'`` (bit clear) over the whole context.

The constituent set of a term ``t`` is stored as a Python int used as a
bitset: bit ``sigma`` is set iff ``t(sigma) = 1``.  Two terms over one context
are equal in every power-set algebra iff their constituent sets agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ContextMismatch, PolarityError, UnboundVariable
from .terms import (
    ONE, ZERO, BasicFormula, Complement, Intersection, One, Term, Union, Var,
    VarContext, Zero, free_vars, infer_context, intersection_of, simplify,
    substitute, union_of,
)

__all__ = [
    "ConstituentSet", "Expansion", "sigma_assignment", "sigma_string",
    "constituent_number", "constituent", "eval_at_sigma", "constituent_set",
    "set_algebra", "expand_about", "term_from_set", "reduce", "equivalent",
]


def sigma_assignment(sigma: int, ctx: VarContext) -> dict[str, Term]:
    """Map each context variable to ``ONE`` or ``ZERO`` according to ``sigma``."""
    return {name: ONE if sigma >> i & 1 else ZERO for i, name in enumerate(ctx)}


def sigma_string(sigma: int, k: int) -> str:
    """Bits of ``sigma`` with the first variable leftmost, e.g. ``'10'`` for x1=1, x2=0."""
    return "".join("1" if sigma >> i & 1 else "0" for i in range(k))


def constituent_number(sigma: int, k: int) -> int:
    """1-based position of ``C_sigma`` when constituents are listed
    ``x1 x2..xk, x1' x2..xk, ...`` i.e. by decreasing sigma string.
    """
    as_read = int(sigma_string(sigma, k) or "0", 2)
    return (1 << k) - as_read


def constituent(sigma: int, ctx: VarContext) -> Term:
    """The constituent term ``C_sigma`` over ``ctx``; ``ONE`` for the empty context."""
    lits = [Var(n) if sigma >> i & 1 else Complement(Var(n)) for i, n in enumerate(ctx)]
    return intersection_of(lits)


def _eval_bit(t: Term, env: Mapping[str, int]) -> int:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariable(t.name, list(env)) from None
    if isinstance(t, Zero):
        return 0
    if isinstance(t, One):
        return 1
    if isinstance(t, Complement):
        return 1 - _eval_bit(t.arg, env)
    if isinstance(t, Intersection):
        return _eval_bit(t.left, env) & _eval_bit(t.right, env)
    if isinstance(t, Union):
        return _eval_bit(t.left, env) | _eval_bit(t.right, env)
    raise TypeError(f"not a term: {t!r}")


def eval_at_sigma(t: Term, sigma: int, ctx: VarContext) -> int:
    """``t(sigma)`` in {0, 1}: substitute the 0/1 vector and fold constants."""
    env = {name: sigma >> i & 1 for i, name in enumerate(ctx)}
    return _eval_bit(t, env)


@dataclass(frozen=True, slots=True)
class ConstituentSet:
    context: VarContext
    bits: int

    @property
    def size(self) -> int:
        return 1 << self.context.k

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def __contains__(self, sigma: int) -> bool:
        return bool(self.bits >> sigma & 1)

    def __iter__(self) -> Iterator[int]:
        b, s = self.bits, 0
        while b:
            if b & 1:
                yield s
            b >>= 1
            s += 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def _check(self, other: ConstituentSet) -> None:
        if other.context != self.context:
            raise ContextMismatch(
                f"contexts differ: {list(self.context)} vs {list(other.context)}")

    def __or__(self, other: ConstituentSet) -> ConstituentSet:
        self._check(other)
        return ConstituentSet(self.context, self.bits | other.bits)

    def __and__(self, other: ConstituentSet) -> ConstituentSet:
        self._check(other)
        return ConstituentSet(self.context, self.bits & other.bits)

    def __sub__(self, other: ConstituentSet) -> ConstituentSet:
        self._check(other)
        return ConstituentSet(self.context, self.bits & ~other.bits)

    def __invert__(self) -> ConstituentSet:
        return ConstituentSet(self.context, self.full_mask & ~self.bits)

    def issubset(self, other: ConstituentSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == self.full_mask

    def sigma_strings(self) -> list[str]:
        """Member sigmas as bit strings, in constituent-number order (C1 first)."""
        return sorted((sigma_string(s, self.context.k) for s in self), reverse=True)

    def numbers(self) -> list[int]:
        return sorted(constituent_number(s, self.context.k) for s in self)

    def __repr__(self):
        return f"ConstituentSet({list(self.context)}, {{{', '.join(self.sigma_strings())}}})"


def constituent_set(t: Term, ctx: VarContext | None = None) -> ConstituentSet:
    """``C(t)``: the sigmas over ``ctx`` at which ``t`` evaluates to 1."""
    if ctx is None:
        ctx = infer_context(t)
    ctx.check_size()
    missing = free_vars(t) - set(ctx)
    if missing:
        raise UnboundVariable(sorted(missing)[0], list(ctx))
    # all sigmas at once: bit sigma of a variable's mask is that variable's value at sigma
    n = 1 << ctx.k
    full = (1 << n) - 1
    masks = {}
    for i, name in enumerate(ctx):
        block = ((1 << (1 << i)) - 1) << (1 << i)   # 2**i ones above 2**i zeros
        period = 1 << (i + 1)
        m = 0
        for start in range(0, n, period):
            m |= block << start
        masks[name] = m
    return ConstituentSet(ctx, _eval_mask(t, masks, full))


def _eval_mask(t: Term, masks: Mapping[str, int], full: int) -> int:
    if isinstance(t, Var):
        return masks[t.name]
    if isinstance(t, Zero):
        return 0
    if isinstance(t, One):
        return full
    if isinstance(t, Complement):
        return full & ~_eval_mask(t.arg, masks, full)
    if isinstance(t, Intersection):
        return _eval_mask(t.left, masks, full) & _eval_mask(t.right, masks, full)
    if isinstance(t, Union):
        return _eval_mask(t.left, masks, full) | _eval_mask(t.right, masks, full)
    raise TypeError(f"not a term: {t!r}")


def set_algebra(op: str, a: ConstituentSet, b: ConstituentSet | None = None) -> ConstituentSet:
    if op == "union":
        return a | b
    if op == "intersection":
        return a & b
    if op == "complement":
        if b is not None:
            raise TypeError("complement takes one operand")
        return ~a
    raise ValueError(f"unknown set operation {op!r}")


def equivalent(s: Term, t: Term, ctx: VarContext | None = None) -> bool:
    """True iff ``s = t`` holds in every power-set algebra."""
    if ctx is None:
        ctx = infer_context(s, t)
    return constituent_set(s, ctx) == constituent_set(t, ctx)


@dataclass(frozen=True)
class Expansion:
    """``t = U_sigma coefficient(sigma) & C_sigma(about)``."""

    about: VarContext
    coefficients: tuple[Term, ...]

    def coefficient(self, sigma: int) -> Term:
        return self.coefficients[sigma]

    def reassemble(self) -> Term:
        return union_of(
            Intersection(c, constituent(s, self.about))
            for s, c in enumerate(self.coefficients))


def expand_about(t: Term, about: VarContext | Sequence[str]) -> Expansion:
    """Boole's expansion of ``t`` about the listed variables."""
    if not isinstance(about, VarContext):
        about = VarContext(about)
    about.check_size()
    coeffs = tuple(
        simplify(substitute(t, sigma_assignment(sigma, about)))
        for sigma in range(1 << about.k))
    return Expansion(about, coeffs)


def term_from_set(s: ConstituentSet) -> Term:
    """Full expansion: the union of the member constituents in increasing sigma order."""
    if s.is_empty():
        return ZERO
    return union_of(constituent(sigma, s.context) for sigma in s)


def reduce(formulas: Iterable[BasicFormula]) -> Term:
    """Merge equations ``p1 = 0, ..., pn = 0`` into the single left side ``p1 | ... | pn``."""
    terms = []
    for f in formulas:
        if not f.is_eq:
            raise PolarityError(f"reduce() takes equations only, got {f}")
        terms.append(f.lhs)
    return union_of(terms)

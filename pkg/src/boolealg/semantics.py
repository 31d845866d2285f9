"""Finite power-set interpretations, the canonical model and satisfiability.

Also home of the brute-force validity oracle.  The oracle never looks at
constituent sets: it evaluates terms set-theoretically in finite models and
enumerates every pattern of empty and nonempty constituents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .constituents import constituent_set, reduce
from .errors import NoModel, TooLarge, UnboundVariable
from .terms import (
    Argument, BasicFormula, Complement, Intersection, One, Term, Union, Var,
    VarContext, Zero, depth, infer_context,
)

__all__ = [
    "Interpretation", "EmptinessProfile", "SatResult",
    "eval_term", "eval_formula", "canonical_model", "decide_sat",
    "free_interpretation", "profiles", "oracle_valid", "oracle_satisfiable",
    "mask_evaluator", "ORACLE_MAX_VARS",
]

ORACLE_MAX_VARS = 4


@dataclass(frozen=True)
class Interpretation:
    """A nonempty finite universe plus a subset of it for each variable."""

    universe: frozenset[int]
    assignment: Mapping[str, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "universe", frozenset(self.universe))
        object.__setattr__(
            self, "assignment", {k: frozenset(v) for k, v in self.assignment.items()})
        if not self.universe:
            raise ValueError("the universe of an interpretation must be nonempty")
        for name, s in self.assignment.items():
            if not s <= self.universe:
                raise ValueError(f"I({name}) is not a subset of the universe")

    def __getitem__(self, name: str) -> frozenset[int]:
        return self.assignment[name]


def eval_term(i: Interpretation, t: Term) -> frozenset[int]:
    if isinstance(t, Var):
        try:
            return i.assignment[t.name]
        except KeyError:
            raise UnboundVariable(t.name, list(i.assignment)) from None
    if isinstance(t, Zero):
        return frozenset()
    if isinstance(t, One):
        return i.universe
    if isinstance(t, Complement):
        return i.universe - eval_term(i, t.arg)
    if isinstance(t, Union):
        return eval_term(i, t.left) | eval_term(i, t.right)
    if isinstance(t, Intersection):
        return eval_term(i, t.left) & eval_term(i, t.right)
    raise TypeError(f"not a term: {t!r}")


def eval_formula(i: Interpretation, f: BasicFormula) -> bool:
    empty = not eval_term(i, f.lhs)
    return empty if f.is_eq else not empty


def canonical_model(p: Term, ctx: VarContext | None = None) -> Interpretation:
    """The model ``I_p``: one element per constituent outside ``C(p)``.

    Element ids are sigma integers.  Each constituent not in ``C(p)`` is
    interpreted as the singleton of its own sigma, every constituent of ``p``
    as the empty set, so ``p = 0`` holds and nothing else is forced.
    """
    if ctx is None:
        ctx = infer_context(p)
    cs = constituent_set(p, ctx)
    universe = frozenset(s for s in range(1 << ctx.k) if s not in cs)
    if not universe:
        raise NoModel(f"every constituent over {list(ctx)} belongs to C({p})")
    assignment = {
        name: frozenset(s for s in universe if s >> idx & 1)
        for idx, name in enumerate(ctx)
    }
    return Interpretation(universe, assignment)


@dataclass(frozen=True)
class SatResult:
    sat: bool
    witness: Interpretation | None = None
    # index into the input list of the negated equation refuted by the
    # equations, or None when the equations alone have no model
    offending: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.sat


def decide_sat(formulas: Sequence[BasicFormula], ctx: VarContext | None = None) -> SatResult:
    """Decide whether the conjunction of ``formulas`` has a power-set model."""
    formulas = list(formulas)
    if ctx is None:
        ctx = infer_context(*formulas)
    if not formulas:
        return SatResult(True, Interpretation({0}, {n: frozenset() for n in ctx}),
                         reason="empty conjunction")
    p0 = reduce(f for f in formulas if f.is_eq)
    c0 = constituent_set(p0, ctx)
    if c0.is_full():
        return SatResult(False, reason="the equations have no model")
    for j, f in enumerate(formulas):
        if not f.is_eq and constituent_set(f.lhs, ctx).issubset(c0):
            return SatResult(False, offending=j,
                             reason=f"C({f.lhs}) is contained in C(p0)")
    return SatResult(True, canonical_model(p0, ctx), reason="canonical model of p0")


# -- brute-force oracle ---------------------------------------------------

def free_interpretation(ctx: VarContext) -> Interpretation:
    """The model with one element per sigma; every constituent is a singleton."""
    universe = range(1 << ctx.k)
    return Interpretation(
        frozenset(universe),
        {n: frozenset(s for s in universe if s >> i & 1) for i, n in enumerate(ctx)})


def _as_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


@dataclass(frozen=True)
class EmptinessProfile:
    """Which constituents over ``context`` are nonempty (bit sigma set = nonempty)."""

    context: VarContext
    nonempty: int

    def __post_init__(self):
        if not self.nonempty:
            raise ValueError("at least one constituent must be nonempty")

    def interpretation(self) -> Interpretation:
        """The free model restricted to the nonempty constituents."""
        universe = frozenset(s for s in range(1 << self.context.k) if self.nonempty >> s & 1)
        return Interpretation(universe, {
            n: frozenset(s for s in universe if s >> i & 1)
            for i, n in enumerate(self.context)})


def profiles(ctx: VarContext) -> Iterator[EmptinessProfile]:
    for m in range(1, 1 << (1 << ctx.k)):
        yield EmptinessProfile(ctx, m)


def _formula_masks(formulas: Sequence[BasicFormula], ctx: VarContext):
    if ctx.k > ORACLE_MAX_VARS:
        raise TooLarge(f"oracle enumerates at most {ORACLE_MAX_VARS} variables, got {ctx.k}")
    free = free_interpretation(ctx)
    return [(_as_mask(eval_term(free, f.lhs)), f.is_eq) for f in formulas]


def _holds(mask: int, is_eq: bool, profile: int) -> bool:
    # evaluation commutes with restricting the free model to a sub-universe
    return (mask & profile == 0) == is_eq


def oracle_valid(arg: Argument) -> bool:
    """Validity by enumerating all ``2**(2**k) - 1`` emptiness profiles.

    Complete because any countermodel collapses to one in which each
    nonempty constituent is a singleton.
    """
    ctx = infer_context(*arg.formulas())
    prem = _formula_masks(arg.premisses, ctx)
    (cmask, ceq), = _formula_masks([arg.conclusion], ctx)
    for m in range(1, 1 << (1 << ctx.k)):
        if all(_holds(pm, peq, m) for pm, peq in prem) and not _holds(cmask, ceq, m):
            return False
    return True


def oracle_satisfiable(formulas: Sequence[BasicFormula], ctx: VarContext | None = None) -> bool:
    if ctx is None:
        ctx = infer_context(*formulas)
    masks = _formula_masks(formulas, ctx)
    return any(all(_holds(fm, feq, m) for fm, feq in masks)
               for m in range(1, 1 << (1 << ctx.k)))


def mask_evaluator(t: Term, names: Sequence[str]) -> Callable[..., int]:
    """Compile ``t`` to ``f(full, *masks)`` evaluating over int-encoded subsets.

    ``full`` is the universe mask; ``masks`` follow ``names``.  The term is
    turned into one Python expression, which keeps brute-force sweeps fast.
    """
    pos = {n: i for i, n in enumerate(names)}

    def src(u: Term) -> str:
        if isinstance(u, Var):
            try:
                return f"m{pos[u.name]}"
            except KeyError:
                raise UnboundVariable(u.name, list(names)) from None
        if isinstance(u, Zero):
            return "0"
        if isinstance(u, One):
            return "F"
        if isinstance(u, Complement):
            return f"(F & ~{src(u.arg)})"
        if isinstance(u, Union):
            return f"({src(u.left)} | {src(u.right)})"
        if isinstance(u, Intersection):
            return f"({src(u.left)} & {src(u.right)})"
        raise TypeError(f"not a term: {u!r}")

    if depth(t) > _MAX_COMPILED_DEPTH:
        ev = _mask_closure(t, pos)
        return lambda full, *ms: ev(full, ms)
    params = "".join(f", m{i}" for i in range(len(names)))
    return eval(f"lambda F{params}: {src(t)}")


# the tokenizer rejects more than 200 nested parentheses
_MAX_COMPILED_DEPTH = 150


def _mask_closure(t: Term, pos: Mapping[str, int]):
    if isinstance(t, Var):
        if t.name not in pos:
            raise UnboundVariable(t.name, list(pos))
        i = pos[t.name]
        return lambda full, ms: ms[i]
    if isinstance(t, Zero):
        return lambda full, ms: 0
    if isinstance(t, One):
        return lambda full, ms: full
    if isinstance(t, Complement):
        a = _mask_closure(t.arg, pos)
        return lambda full, ms: full & ~a(full, ms)
    a, b = _mask_closure(t.left, pos), _mask_closure(t.right, pos)
    if isinstance(t, Union):
        return lambda full, ms: a(full, ms) | b(full, ms)
    return lambda full, ms: a(full, ms) & b(full, ms)

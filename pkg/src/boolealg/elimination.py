"""Elimination of variables and general solutions.

For a term ``p(x, y)`` write ``p(1)`` and ``p(0)`` for the coefficients of
``x`` and ``x'`` in its expansion about ``x``.  Then

* ``(∃x) p = 0``  iff  ``p(1) & p(0) = 0``  (the eliminant),
* every solution is ``x = z' & p(0) | z & p(1)'`` for some ``z``,
* ``(∃x)[p = 0 and q != 0]``  iff  ``p(1) & p(0) = 0`` and
  ``q(1) & p(1)' | q(0) & p(0)' != 0``.

Two or more negated equations admit no quantifier-free eliminant (``x & y
!= 0, x' & y != 0`` needs ``|y| >= 2``); :func:`solve_system` instead returns
a parametric form with simple constraints on the parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .constituents import expand_about
from .errors import ContextTooLarge
from .terms import (
    MAX_VARS, BasicFormula, Complement, Intersection, Polarity, Term, Union, Var,
    VarContext, free_vars, fresh_name, intersection_of, simplify, union_of,
)

__all__ = [
    "EliminationResult", "GeneralSolution", "ParametricSolution",
    "eliminate_one", "solve_one", "eliminate_many", "eliminate_one_one",
    "solve_system",
]


@dataclass(frozen=True)
class EliminationResult:
    """``eliminant = 0`` (and ``residual_neq != 0`` when present)."""

    eliminant: Term
    eliminated: tuple[str, ...]
    residual_neq: Term | None = None

    def formulas(self) -> list[BasicFormula]:
        out = [BasicFormula(self.eliminant, Polarity.EQ)]
        if self.residual_neq is not None:
            out.append(BasicFormula(self.residual_neq, Polarity.NEQ))
        return out


@dataclass(frozen=True)
class GeneralSolution:
    solved_var: str
    parameter: str
    expression: Term
    side_condition: Term
    lower: Term   # p(0): the least solution
    upper: Term   # p(1)': the greatest solution


@dataclass(frozen=True)
class ParametricSolution:
    solved_var: str
    w: str
    vs: tuple[str, ...]
    a: Term
    b: Term
    cs: tuple[Term, ...]
    ds: tuple[Term, ...]
    constraints: tuple[BasicFormula, ...]
    solution_expr: Term

    @property
    def parameters(self) -> tuple[str, ...]:
        return (self.w, *self.vs)


def _halves(p: Term, x: str) -> tuple[Term, Term]:
    e = expand_about(p, VarContext([x]))
    return e.coefficient(1), e.coefficient(0)


def eliminate_one(p: Term, x: str) -> EliminationResult:
    p1, p0 = _halves(p, x)
    return EliminationResult(simplify(Intersection(p1, p0)), (x,))


def solve_one(p: Term, x: str) -> GeneralSolution:
    p1, p0 = _halves(p, x)
    z = fresh_name("_z", free_vars(p) | {x})
    zv = Var(z)
    expr = Union(Intersection(Complement(zv), p0), Intersection(zv, Complement(p1)))
    return GeneralSolution(
        solved_var=x,
        parameter=z,
        expression=simplify(expr),
        side_condition=simplify(Intersection(p1, p0)),
        lower=p0,
        upper=simplify(Complement(p1)),
    )


def eliminate_many(p: Term, xs: Sequence[str], max_vars: int = MAX_VARS) -> EliminationResult:
    """Eliminate every variable of ``xs`` at once: ``0 = ∏_sigma p(sigma, y)``."""
    xs = tuple(xs)
    if len(xs) > min(max_vars, MAX_VARS):
        raise ContextTooLarge(f"cannot eliminate {len(xs)} variables at once")
    if not xs:
        return EliminationResult(p, ())
    e = expand_about(p, VarContext(xs))
    return EliminationResult(simplify(intersection_of(e.coefficients)), xs)


def eliminate_one_one(p: Term, q: Term, x: str) -> EliminationResult:
    """Eliminate ``x`` from ``p = 0 and q != 0``."""
    p1, p0 = _halves(p, x)
    q1, q0 = _halves(q, x)
    residual = Union(Intersection(q1, Complement(p1)), Intersection(q0, Complement(p0)))
    return EliminationResult(simplify(Intersection(p1, p0)), (x,), simplify(residual))


def solve_system(p: Term, qs: Sequence[Term], x: str) -> ParametricSolution:
    """Parametric solution of ``p = 0, q1 != 0, ..., qn != 0`` for ``x``.

    The system holds iff there are ``w`` and ``v1..vn`` with
    ``x = w & (a | U vi ci')' | w' & (b | U vi di')`` and

    * ``a & b = 0``
    * ``vj != 0`` and ``vj <= cj a' | dj b'``
    * ``vi vj <= (ci | dj)(cj | di)`` for ``i < j``
    """
    qs = list(qs)
    if not qs:
        raise ValueError("solve_system needs at least one negated equation; use solve_one")
    taken = set(free_vars(p)) | {x}
    for q in qs:
        taken |= free_vars(q)
    a, b = _halves(p, x)
    halves = [_halves(q, x) for q in qs]
    cs = tuple(h[0] for h in halves)
    ds = tuple(h[1] for h in halves)
    vs = []
    for i in range(1, len(qs) + 1):
        vs.append(fresh_name(f"_v{i}", taken))
        taken.add(vs[-1])
    w = fresh_name("_w", taken)
    V = [Var(v) for v in vs]

    constraints = [BasicFormula(simplify(Intersection(a, b)), Polarity.EQ)]
    for vj, cj, dj in zip(V, cs, ds):
        bound = Union(Intersection(cj, Complement(a)), Intersection(dj, Complement(b)))
        constraints.append(BasicFormula(vj, Polarity.NEQ))
        constraints.append(BasicFormula(simplify(Intersection(vj, Complement(bound))), Polarity.EQ))
    n = len(qs)
    for i in range(n):
        for j in range(i + 1, n):
            bound = Intersection(Union(cs[i], ds[j]), Union(cs[j], ds[i]))
            lhs = Intersection(Intersection(V[i], V[j]), Complement(bound))
            constraints.append(BasicFormula(simplify(lhs), Polarity.EQ))

    upper = union_of([a, *(Intersection(v, Complement(c)) for v, c in zip(V, cs))])
    lower = union_of([b, *(Intersection(v, Complement(d)) for v, d in zip(V, ds))])
    wv = Var(w)
    expr = Union(Intersection(wv, Complement(upper)), Intersection(Complement(wv), lower))
    return ParametricSolution(
        solved_var=x, w=w, vs=tuple(vs), a=a, b=b, cs=cs, ds=ds,
        constraints=tuple(constraints), solution_expr=simplify(expr))

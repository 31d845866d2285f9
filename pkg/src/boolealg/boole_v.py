"""Boole's V: replacing ``q != 0`` by the equation ``V & q' = 0``.

The two formulas are not equivalent (``V = 0`` satisfies the equation whatever
``q`` is), yet validity of whole arguments and one-one elimination come out
the same through either translation.  Fresh V symbols are named ``_V1``,
``_V2``, ... and are placed after the base variables in every context.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arguments import Certificate, Route, ValidityReport, check_equational
from .constituents import ConstituentSet, constituent_set, expand_about, term_from_set
from .elimination import EliminationResult
from .errors import PolarityError
from .semantics import canonical_model
from .terms import (
    BasicFormula, Complement, Intersection, Polarity, Term, Union, Var,
    VarContext, free_vars, fresh_name, infer_context, simplify, union_of,
)

__all__ = [
    "VTranslation", "to_v_equation", "from_v_equation",
    "check_valid_via_v", "eliminate_one_one_via_v",
]


@dataclass(frozen=True)
class VTranslation:
    original: BasicFormula
    v_var: str
    v_equation: BasicFormula


def to_v_equation(f: BasicFormula, avoid=(), index: int = 1) -> VTranslation:
    """``q != 0``  ->  ``_V<index> & q' = 0`` with a name fresh for ``q`` and ``avoid``."""
    if f.is_eq:
        raise PolarityError(f"only negated equations have a V-translation, got {f}")
    v = fresh_name(f"_V{index}", set(avoid) | free_vars(f.lhs))
    eq = BasicFormula(Intersection(Var(v), Complement(f.lhs)), Polarity.EQ)
    return VTranslation(f, v, eq)


def from_v_equation(f: BasicFormula, v: str) -> BasicFormula:
    """``V & r = 0``  ->  ``r' != 0``."""
    lhs = f.lhs
    if not (f.is_eq and isinstance(lhs, Intersection) and lhs.left == Var(v)):
        raise ValueError(f"{f} is not a V-equation in {v}")
    return BasicFormula(simplify(Complement(lhs.right)), Polarity.NEQ)


def check_valid_via_v(p: Term, neg_premisses: Sequence[Term], conclusion_neq: Term) -> ValidityReport:
    """Validity of ``p = 0, q1 != 0, ..., qn != 0 ∴ q != 0`` through V-equations.

    Valid iff for some ``j`` the all-equational argument
    ``p = 0, V1 q1' = 0, ..., Vn qn' = 0 ∴ Vj q' = 0`` is valid.  With ``n = 0``
    there is no ``j``; the argument is then valid iff ``p = 0, q = 0`` has no model.
    """
    base = infer_context(p, *neg_premisses, conclusion_neq)
    if not neg_premisses:
        ctx = base
        cp = constituent_set(Union(p, conclusion_neq), ctx)
        cert = Certificate(~ConstituentSet(ctx, 0), cp)
        if cert.holds():
            return ValidityReport(True, Route.V_METHOD, ctx, certificate=cert)
        return ValidityReport(False, Route.V_METHOD, ctx, certificate=cert,
                              witness=canonical_model(Union(p, conclusion_neq), ctx))
    taken = set(base)
    trans = []
    for i, q in enumerate(neg_premisses, start=1):
        t = to_v_equation(BasicFormula(q, Polarity.NEQ), taken, i)
        taken.add(t.v_var)
        trans.append(t)
    ctx = base.extend(t.v_var for t in trans)
    premisses = [BasicFormula(p, Polarity.EQ), *(t.v_equation for t in trans)]
    last = None
    for j, t in enumerate(trans):
        concl = BasicFormula(Intersection(Var(t.v_var), Complement(conclusion_neq)), Polarity.EQ)
        r = check_equational(premisses, concl, ctx)
        if r.valid:
            cert = Certificate(r.certificate.included, r.certificate.covering, premiss=j)
            return ValidityReport(True, Route.V_METHOD, ctx, certificate=cert)
        last = r.certificate
    # one model refutes every j at once: it kills exactly the constituents of
    # the reduced premisses, and no conclusion V_j q' is covered by them
    witness = canonical_model(union_of(f.lhs for f in premisses), ctx)
    return ValidityReport(False, Route.V_METHOD, ctx, witness=witness, certificate=last)


def eliminate_one_one_via_v(p: Term, q: Term, x: str) -> EliminationResult:
    """Eliminate ``x`` from ``p = 0 and q != 0`` by way of ``V & q' = 0``.

    Steps: translate, reduce to ``p | V q' = 0``, eliminate ``x``, split the
    eliminant about ``V`` into ``E0 = 0`` and ``V & E1 = 0``, absorb ``E0`` into
    the V-coefficient (``V & E1 = 0`` and ``V & (E1 | E0) = 0`` agree whenever
    ``E0 = 0``), and translate ``V & (E1 | E0) = 0`` back to
    ``(E1 | E0)' != 0``.
    """
    t = to_v_equation(BasicFormula(q, Polarity.NEQ), free_vars(p) | {x})
    V = t.v_var
    reduced = Union(p, t.v_equation.lhs)
    halves = expand_about(reduced, VarContext([x]))
    eliminant = Intersection(halves.coefficient(1), halves.coefficient(0))
    about_v = expand_about(eliminant, VarContext([V]))
    veq1, vcoef = about_v.coefficient(0), about_v.coefficient(1)
    y = infer_context(p, q).without([x])
    absorbed = constituent_set(vcoef, y) | constituent_set(veq1, y)
    residual = term_from_set(~absorbed)
    return EliminationResult(simplify(veq1), (x,), residual)

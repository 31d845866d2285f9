"""Deciding validity of basic-formula arguments by constituent inclusion."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .constituents import ConstituentSet, constituent_set, reduce
from .errors import PolarityError
from .semantics import Interpretation, canonical_model, decide_sat
from .terms import (
    MAX_VARS, Argument, BasicFormula, Union, VarContext, infer_context,
)

__all__ = [
    "Route", "Certificate", "ValidityReport",
    "check_equational", "check_eq_conclusion", "check_neg_conclusion", "check",
]


class Route(enum.Enum):
    EQUATIONAL_ARGS = "EquationalArgs"
    EQ_CONCLUSION = "EqConclusion"
    NEG_CONCLUSION = "NegConclusion"
    TRIVIAL_UNSAT_PREMISSES = "TrivialUnsatPremisses"
    V_METHOD = "VMethod"


@dataclass(frozen=True)
class Certificate:
    """``included`` is a subset of ``covering``.

    ``premiss`` is the index of the negated premiss ``q_j != 0`` that carries a
    negated-conclusion argument, if any.
    """

    included: ConstituentSet
    covering: ConstituentSet
    premiss: int | None = None

    def holds(self) -> bool:
        return self.included.issubset(self.covering)


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    route: Route
    context: VarContext
    witness: Interpretation | None = None
    certificate: Certificate | None = None


def _context(formulas: Sequence[BasicFormula], ctx: VarContext | None) -> VarContext:
    if ctx is None:
        ctx = infer_context(*formulas)
    ctx.check_size()
    return ctx


def check_equational(premisses: Sequence[BasicFormula], conclusion: BasicFormula,
                     ctx: VarContext | None = None) -> ValidityReport:
    """``p1 = 0, ..., pm = 0 ∴ p = 0`` is valid iff ``C(p)`` lies in the union of the ``C(pi)``."""
    for f in (*premisses, conclusion):
        if not f.is_eq:
            raise PolarityError(f"equational argument expected, got {f}")
    ctx = _context([*premisses, conclusion], ctx)
    p0 = reduce(premisses)
    covering = ConstituentSet(ctx, 0)
    for f in premisses:
        covering |= constituent_set(f.lhs, ctx)
    included = constituent_set(conclusion.lhs, ctx)
    cert = Certificate(included, covering)
    if cert.holds():
        return ValidityReport(True, Route.EQUATIONAL_ARGS, ctx, certificate=cert)
    return ValidityReport(False, Route.EQUATIONAL_ARGS, ctx,
                          witness=canonical_model(p0, ctx), certificate=cert)


def check_eq_conclusion(premisses: Sequence[BasicFormula], conclusion: BasicFormula,
                        ctx: VarContext | None = None) -> ValidityReport:
    """Equational conclusion: negated premisses only matter if they make the premisses unsatisfiable."""
    if not conclusion.is_eq:
        raise PolarityError(f"equational conclusion expected, got {conclusion}")
    ctx = _context([*premisses, conclusion], ctx)
    if not decide_sat(premisses, ctx):
        return ValidityReport(True, Route.TRIVIAL_UNSAT_PREMISSES, ctx)
    eqs = [f for f in premisses if f.is_eq]
    report = check_equational(eqs, conclusion, ctx)
    if len(eqs) == len(premisses):
        return report
    # premisses are satisfiable, so the canonical model of the equations also
    # makes every negated premiss true
    return ValidityReport(report.valid, Route.EQ_CONCLUSION, ctx,
                          witness=report.witness, certificate=report.certificate)


def check_neg_conclusion(premisses: Sequence[BasicFormula], conclusion: BasicFormula,
                         ctx: VarContext | None = None) -> ValidityReport:
    """Negated conclusion ``q != 0``: valid iff some ``C(qj)`` lies in ``C(p0) | C(q)``.

    With no negated premisses the argument is decided directly: it is valid
    iff ``p0 = 0, q = 0`` has no model, i.e. ``C(p0) | C(q)`` is everything.
    """
    if conclusion.is_eq:
        raise PolarityError(f"negated conclusion expected, got {conclusion}")
    ctx = _context([*premisses, conclusion], ctx)
    p0 = reduce(f for f in premisses if f.is_eq)
    c0 = constituent_set(p0, ctx)
    if c0.is_full():
        return ValidityReport(True, Route.TRIVIAL_UNSAT_PREMISSES, ctx)
    covering = c0 | constituent_set(conclusion.lhs, ctx)
    negs = [(j, f) for j, f in enumerate(premisses) if not f.is_eq]
    if not negs:
        full = ~ConstituentSet(ctx, 0)
        cert = Certificate(full, covering)
        if cert.holds():
            return ValidityReport(True, Route.NEG_CONCLUSION, ctx, certificate=cert)
        return ValidityReport(False, Route.NEG_CONCLUSION, ctx, certificate=cert,
                              witness=canonical_model(Union(p0, conclusion.lhs), ctx))
    last = None
    for j, f in negs:
        cert = Certificate(constituent_set(f.lhs, ctx), covering, premiss=j)
        if cert.holds():
            return ValidityReport(True, Route.NEG_CONCLUSION, ctx, certificate=cert)
        last = cert
    return ValidityReport(False, Route.NEG_CONCLUSION, ctx, certificate=last,
                          witness=canonical_model(Union(p0, conclusion.lhs), ctx))


def check(arg: Argument, max_vars: int = MAX_VARS) -> ValidityReport:
    """Decide validity of ``arg``, dispatching on the shape of premisses and conclusion."""
    ctx = infer_context(*arg.formulas())
    ctx.check_size(max_vars)
    if not arg.conclusion.is_eq:
        return check_neg_conclusion(arg.premisses, arg.conclusion, ctx)
    if all(f.is_eq for f in arg.premisses):
        return check_equational(arg.premisses, arg.conclusion, ctx)
    return check_eq_conclusion(arg.premisses, arg.conclusion, ctx)

"""Boole's algebra of classes in its modern power-set form.

Decide validity of arguments built from equations ``p = 0`` and negated
equations ``p != 0`` about classes, compute full expansions and constituent
sets, eliminate variables, and produce general and parametric solutions.
"""

from .errors import (
    BooleAlgError, ContextMismatch, ContextTooLarge, NoModel, ParseError,
    PolarityError, TooLarge, UnboundVariable, UnknownToken,
)
from .terms import (
    ONE, ZERO, Argument, BasicFormula, Complement, Intersection, Polarity, Term,
    Union, Var, VarContext, free_vars, infer_context, simplify, standardize,
    substitute, variables,
)
from .constituents import (
    ConstituentSet, Expansion, constituent, constituent_set, equivalent,
    eval_at_sigma, expand_about, reduce, set_algebra, term_from_set,
)
from .semantics import (
    EmptinessProfile, Interpretation, SatResult, canonical_model, decide_sat,
    eval_formula, eval_term, oracle_valid,
)
from .arguments import (
    Route, ValidityReport, check, check_eq_conclusion, check_equational,
    check_neg_conclusion,
)
from .elimination import (
    EliminationResult, GeneralSolution, ParametricSolution, eliminate_many,
    eliminate_one, eliminate_one_one, solve_one, solve_system,
)
from .boole_v import (
    VTranslation, check_valid_via_v, eliminate_one_one_via_v, from_v_equation,
    to_v_equation,
)
from .syntax import (
    parse_document, parse_formula, parse_term, print_formula, print_term,
    to_sentence, translate,
)
from .syllogisms import Mood, all_moods, valid_moods

__version__ = "0.1.0"

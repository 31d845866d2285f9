import itertools
import random

import pytest

from boolealg.arguments import Route, check
from boolealg.boole_v import (
    check_valid_via_v, eliminate_one_one_via_v, from_v_equation, to_v_equation,
)
from boolealg.constituents import constituent_set, equivalent
from boolealg.elimination import eliminate_one_one
from boolealg.errors import PolarityError
from boolealg.semantics import Interpretation, eval_formula
from boolealg.syntax import parse_term
from boolealg.terms import (
    ONE, ZERO, Argument, BasicFormula, Complement, Intersection, Polarity, Var,
    VarContext, infer_context, variables,
)

from termgen import all_terms, random_term

x, y, z = variables("x y z")
T = parse_term


def neq(t):
    return BasicFormula(t, Polarity.NEQ)


def test_to_v_equation_examples():
    t = to_v_equation(neq(T("x & y")))
    assert t.v_var == "_V1"
    assert t.v_equation == BasicFormula(Intersection(Var("_V1"), Complement(T("x & y"))))
    t = to_v_equation(neq(ONE))
    assert equivalent(t.v_equation.lhs, ZERO, VarContext(["_V1"]))
    t = to_v_equation(neq(T("x'")))
    assert equivalent(t.v_equation.lhs, T("_V1 & x"), VarContext(["_V1", "x"]))


def test_to_v_equation_fresh_and_polarity():
    t = to_v_equation(neq(T("_V1 & x")), avoid={"_V2"}, index=1)
    assert t.v_var not in {"_V1", "_V2", "x"}
    with pytest.raises(PolarityError):
        to_v_equation(BasicFormula(x))


def test_round_trip():
    for q in all_terms("xy", 1):
        t = to_v_equation(neq(q))
        back = from_v_equation(t.v_equation, t.v_var)
        assert back.polarity is Polarity.NEQ
        assert equivalent(back.lhs, q, VarContext("xy"))
    with pytest.raises(ValueError):
        from_v_equation(BasicFormula(x), "_V1")


def test_translation_is_not_an_equivalence():
    q = x
    v = to_v_equation(neq(q))
    # V empty: the V-equation holds although q != 0 fails
    i = Interpretation({0}, {"x": set(), v.v_var: set()})
    assert eval_formula(i, v.v_equation) and not eval_formula(i, neq(q))
    # V sticks out of q: q != 0 holds but the V-equation fails
    i = Interpretation({0, 1}, {"x": {0}, v.v_var: {1}})
    assert eval_formula(i, neq(q)) and not eval_formula(i, v.v_equation)


def test_darii_and_darapti_via_v():
    r = check_valid_via_v(T("y & z'"), [T("x & y")], T("x & z"))
    assert r.valid and r.route is Route.V_METHOD
    assert r.context.names[-1] == "_V1"
    assert r.certificate.holds()
    r = check_valid_via_v(T("y & x' | y & z'"), [], T("x & z"))
    assert not r.valid and r.witness is not None


def test_witness_refutes_original_argument():
    p, qs, q = T("x & y"), [T("x"), T("y")], T("x & y")
    r = check_valid_via_v(p, qs, q)
    assert not r.valid
    base = ["x", "y"]
    i = Interpretation(r.witness.universe, {n: r.witness[n] for n in base})
    a = Argument([BasicFormula(p), *map(neq, qs)], neq(q))
    assert all(eval_formula(i, f) for f in a.premisses)
    assert not eval_formula(i, a.conclusion)


def _direct(p, qs, q):
    return check(Argument([BasicFormula(p), *map(neq, qs)], neq(q))).valid


def test_agreement_small_exhaustive():
    pool = all_terms("xy", 1)[:12]
    for p, q in itertools.product(pool, repeat=2):
        for n in range(3):
            for qs in itertools.combinations(pool, n):
                assert check_valid_via_v(p, list(qs), q).valid == _direct(p, list(qs), q)


def test_agreement_random():
    rng = random.Random(21)
    for _ in range(1500):
        names = "xyz"
        p = random_term(rng, names, 3)
        qs = [random_term(rng, names, 3) for _ in range(rng.randint(0, 3))]
        q = random_term(rng, names, 3)
        assert check_valid_via_v(p, qs, q).valid == _direct(p, qs, q)


def test_v_one_one_examples():
    r = eliminate_one_one_via_v(T("x & y'"), T("x & z"), "x")
    assert equivalent(r.eliminant, ZERO, VarContext("yz"))
    assert equivalent(r.residual_neq, T("y & z"), VarContext("yz"))
    assert eliminate_one_one_via_v(ONE, y, "x").eliminant == ONE
    # eliminating the middle term recovers Darii's conclusion
    r = eliminate_one_one_via_v(T("y & z'"), T("x & y"), "y")
    assert equivalent(r.eliminant, ZERO, VarContext("xz"))
    assert equivalent(r.residual_neq, T("x & z"), VarContext("xz"))


def _same_pair(a, b, ctx):
    return (constituent_set(a.eliminant, ctx) == constituent_set(b.eliminant, ctx)
            and constituent_set(a.residual_neq, ctx) == constituent_set(b.residual_neq, ctx))


def test_v_one_one_matches_direct():
    pool = all_terms("xy", 1)
    ctx = VarContext(["y"])
    for p, q in itertools.product(pool, repeat=2):
        assert _same_pair(eliminate_one_one_via_v(p, q, "x"), eliminate_one_one(p, q, "x"), ctx)
    rng = random.Random(13)
    ctx = VarContext("yz")
    for _ in range(500):
        p, q = random_term(rng, "xyz", 3), random_term(rng, "xyz", 3)
        assert _same_pair(eliminate_one_one_via_v(p, q, "x"), eliminate_one_one(p, q, "x"), ctx)


def test_v_one_one_context_excludes_x():
    r = eliminate_one_one_via_v(T("x & y'"), T("x & z"), "x")
    assert "x" not in infer_context(r.eliminant, r.residual_neq)

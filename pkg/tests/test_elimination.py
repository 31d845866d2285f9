import itertools
import random
from dataclasses import replace

import pytest

from boolealg.constituents import constituent_set, equivalent
from boolealg.elimination import (
    eliminate_many, eliminate_one, eliminate_one_one, solve_one, solve_system,
)
from boolealg.errors import ContextTooLarge
from boolealg.semantics import mask_evaluator
from boolealg.syntax import parse_term
from boolealg.terms import (
    ONE, ZERO, BasicFormula, Complement, Intersection, Polarity, Var, VarContext,
    free_vars, simplify, substitute, union_of, variables,
)

from bruteforce import compile_terms, exists_x, y_models
from termgen import all_terms, random_term

x, y, z = variables("x y z")
T = parse_term


def same(s, t, names="xyz"):
    return equivalent(s, t, VarContext(names))


# -- eliminate_one / solve_one ---------------------------------------------

def test_eliminate_one_examples():
    r = eliminate_one(T("x & y' | x' & y"), "x")
    assert r.eliminant == ZERO and r.eliminated == ("x",)
    assert eliminate_one(T("x & y"), "x").eliminant == ZERO
    assert eliminate_one(T("x & y | y'"), "x").eliminant == T("y'")
    assert eliminate_one(T("y"), "x").eliminant == y


def test_solve_one_examples():
    s = solve_one(T("x & y' | x' & y"), "x")
    # unique solution x = y; simplify does not factor, so compare constituents
    assert same(s.expression, y, ["_z", "y"])
    assert s.lower == y and s.upper == y
    assert solve_one(T("x"), "x").expression == ZERO
    s = solve_one(T("x & y"), "x")
    assert s.parameter == "_z"
    assert same(s.expression, T("_z & y'"), ["_z", "y"])


def test_solve_one_fresh_parameter_avoids_clash():
    s = solve_one(T("x & _z"), "x")
    assert s.parameter not in {"x", "_z"}


def test_eliminant_free_of_eliminated_variable():
    for p in all_terms("xy", 2)[:600]:
        assert "x" not in free_vars(eliminate_one(p, "x").eliminant)


def _pool():
    rng = random.Random(1)
    return all_terms("xy", 1) + [random_term(rng, "xyz", 3) for _ in range(120)]


@pytest.mark.parametrize("p", _pool(), ids=str)
def test_eliminate_and_solve_against_brute_force(p):
    names = ["x", "y", "z"]
    ev = mask_evaluator(p, names)
    r = eliminate_one(p, "x")
    s = solve_one(p, "x")
    elim = mask_evaluator(r.eliminant, ["y", "z"])
    sol = mask_evaluator(s.expression, [s.parameter, "y", "z"])
    lo = mask_evaluator(s.lower, ["y", "z"])
    hi = mask_evaluator(s.upper, ["y", "z"])
    for full, ys in y_models(2, sizes=(1, 2)):
        solvable = exists_x(full, ys, [ev], [])
        assert solvable == (elim(full, *ys) == 0)
        for xv in range(full + 1):
            holds = ev(full, xv, *ys) == 0
            # sandwich form
            assert holds == (lo(full, *ys) & ~xv == 0 and xv & ~hi(full, *ys) == 0)
            if holds:
                assert sol(full, xv, *ys) == xv        # z := x recovers x
        if solvable:
            for zv in range(full + 1):
                assert ev(full, sol(full, zv, *ys), *ys) == 0


def test_solution_invariant_covered_by_side_condition():
    for p in _pool():
        s = solve_one(p, "x")
        back = substitute(p, {"x": s.expression})
        ctx = VarContext(["x", "y", "z", s.parameter])
        assert constituent_set(back, ctx).issubset(constituent_set(s.side_condition, ctx))


# -- eliminate_many --------------------------------------------------------

def test_eliminate_many_examples():
    assert eliminate_many(T("x & y & z"), ["x", "y"]).eliminant == ZERO
    p = T("x & z' | x' & z | y'")
    r = eliminate_many(p, ["x", "y"])
    it = eliminate_one(eliminate_one(p, "x").eliminant, "y").eliminant
    assert same(r.eliminant, it, "z")
    assert same(r.eliminant, ZERO, "z")
    assert eliminate_many(p, []).eliminant == p


def test_eliminate_many_order_independent():
    rng = random.Random(4)
    for _ in range(300):
        p = random_term(rng, "xyzw", 3)
        r = eliminate_many(p, ["x", "y"])
        for order in itertools.permutations(["x", "y"]):
            t = p
            for v in order:
                t = eliminate_one(t, v).eliminant
            assert same(r.eliminant, t, "xyzw")


def test_eliminate_many_cap():
    with pytest.raises(ContextTooLarge):
        eliminate_many(x, ["a", "b", "c"], max_vars=2)


# -- one-one ---------------------------------------------------------------

def test_one_one_examples():
    r = eliminate_one_one(T("x & y'"), T("x & z"), "x")
    assert r.eliminant == ZERO and same(r.residual_neq, T("z & y"))
    r = eliminate_one_one(ZERO, x, "x")
    assert r.eliminant == ZERO and r.residual_neq == ONE
    r = eliminate_one_one(T("x | x'"), y, "x")
    assert r.eliminant == ONE
    assert [f.polarity for f in r.formulas()] == [Polarity.EQ, Polarity.NEQ]


def test_one_one_against_brute_force():
    rng = random.Random(8)
    names = ["x", "y", "z"]
    for _ in range(150):
        p, q = random_term(rng, names, 3), random_term(rng, names, 3)
        r = eliminate_one_one(p, q, "x")
        evp, evq = compile_terms([p, q], names)
        e, res = compile_terms([r.eliminant, r.residual_neq], ["y", "z"])
        for full, ys in y_models(2, sizes=(1, 2)):
            expected = exists_x(full, ys, [evp], [evq])
            assert expected == (e(full, *ys) == 0 and res(full, *ys) != 0), (p, q)


# -- parametric solutions ----------------------------------------------------

def _closure_holds(sol, full, ys, ynames, xval):
    """Do some w, v1..vn satisfy the constraints and give x = xval?"""
    params = list(sol.parameters)
    names = [*params, *ynames]
    cons = [(mask_evaluator(f.lhs, names), f.is_eq) for f in sol.constraints]
    expr = mask_evaluator(sol.solution_expr, names)
    for ps in itertools.product(range(full + 1), repeat=len(params)):
        if all((c(full, *ps, *ys) == 0) == eq for c, eq in cons):
            if expr(full, *ps, *ys) == xval:
                return True
    return False


def test_solve_system_example_subset():
    sol = solve_system(T("x & y'"), [x], "x")
    assert sol.a == T("y'") and sol.b == ZERO
    assert sol.cs == (ONE,) and sol.ds == (ZERO,)
    assert sol.w == "_w" and sol.vs == ("_v1",)
    assert [f.polarity for f in sol.constraints] == [Polarity.EQ, Polarity.NEQ, Polarity.EQ]


def test_solve_system_requires_negated_equation():
    with pytest.raises(ValueError):
        solve_system(x, [], "x")


@pytest.mark.parametrize("p, qs", [
    ("x & y'", ["x"]),
    ("0", ["y & x", "y & x'"]),
    ("x & y", ["1"]),
    ("x & y' | x' & z", ["x & z", "x' & y"]),
])
def test_solve_system_equivalent_to_source(p, qs):
    p, qs = T(p), [T(q) for q in qs]
    sol = solve_system(p, qs, "x")
    evp = mask_evaluator(p, ["x", "y", "z"])
    evq = compile_terms(qs, ["x", "y", "z"])
    for full, ys in y_models(2, sizes=(1, 2)):
        for xv in range(full + 1):
            src = evp(full, xv, *ys) == 0 and all(q(full, xv, *ys) for q in evq)
            assert src == _closure_holds(sol, full, ys, ["y", "z"], xv)


def test_two_negated_equations_need_two_elements():
    sol = solve_system(ZERO, [T("y & x"), T("y & x'")], "x")
    for n in (1, 2, 3):
        full = (1 << n) - 1
        for yv in range(full + 1):
            ok = any(_closure_holds(sol, full, (yv, 0), ["y", "z"], xv) for xv in range(full + 1))
            assert ok == (bin(yv).count("1") >= 2)


def test_constraint_shapes():
    sol = solve_system(T("x & y"), [T("x"), T("x'"), T("y")], "x")
    n = 3
    # a.b = 0, two per v_j, one per pair
    assert len(sol.constraints) == 1 + 2 * n + n * (n - 1) // 2
    neqs = [f for f in sol.constraints if f.polarity is Polarity.NEQ]
    assert [str(f.lhs) for f in neqs] == list(sol.vs)
    assert isinstance(sol.constraints[0], BasicFormula)


def test_pairwise_constraint_needs_the_bracketed_product():
    # reading the pairwise bound as c_i | d_j & c_j | d_i instead of
    # (c_i | d_j)(c_j | d_i) admits x = 1 for xy != 0, x'z != 0 with y = z = 1
    qs = [T("x & y"), T("x' & z")]
    sol = solve_system(ZERO, qs, "x")
    v1, v2 = (Var(v) for v in sol.vs)
    loose = union_of([sol.cs[0], Intersection(sol.ds[1], sol.cs[1]), sol.ds[0]])
    cons = list(sol.constraints)
    cons[-1] = BasicFormula(simplify(Intersection(Intersection(v1, v2), Complement(loose))))
    wrong = replace(sol, constraints=tuple(cons))
    full, ys = 0b11, (0b11, 0b11)
    assert not _closure_holds(sol, full, ys, ["y", "z"], full)
    assert _closure_holds(wrong, full, ys, ["y", "z"], full)

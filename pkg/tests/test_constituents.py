import itertools
import random

import pytest
from hypothesis import given, settings

from boolealg.constituents import (
    ConstituentSet, constituent, constituent_set, eval_at_sigma, expand_about,
    constituent_number, reduce, set_algebra, sigma_string, term_from_set,
)
from boolealg.errors import ContextMismatch, ContextTooLarge, PolarityError, UnboundVariable
from boolealg.semantics import eval_term, free_interpretation
from boolealg.syntax import parse_formula, parse_term
from boolealg.terms import (
    ONE, ZERO, BasicFormula, Intersection, Polarity, Union, VarContext,
    infer_context, substitute, variables,
)

from termgen import random_term, terms

x, y, z = variables("x y z")
XY = VarContext(["x", "y"])
X12 = VarContext(["x1", "x2"])


def sig(s: str) -> int:
    """Bit string with the first variable leftmost -> sigma int."""
    return int(s[::-1], 2) if s else 0


def brute_constituents(t, ctx):
    """C(t) computed by set evaluation in the free model, not by substitution."""
    return sorted(eval_term(free_interpretation(ctx), t))


def test_eval_at_sigma_examples():
    assert eval_at_sigma(parse_term("x1 & x2"), sig("11"), X12) == 1
    assert eval_at_sigma(parse_term("x1 & x2 | x1' & x2'"), sig("10"), X12) == 0
    assert eval_at_sigma(parse_term("x1' | x2"), sig("10"), X12) == 0


def test_eval_at_sigma_unbound():
    with pytest.raises(UnboundVariable):
        eval_at_sigma(parse_term("x & w"), 0, XY)


def test_worked_example_constituents():
    cs = constituent_set(parse_term("x1 & x2 | x1' & x2'"), X12)
    assert set(cs) == {sig("11"), sig("00")}
    assert cs.numbers() == [1, 4]


def test_constituent_numbering_lists_x1x2_first():
    assert [constituent_number(sig(s), 2) for s in ("11", "10", "01", "00")] == [1, 2, 3, 4]


@pytest.mark.parametrize("ctx", [VarContext(), XY, VarContext("abc")])
def test_constants(ctx):
    assert constituent_set(ZERO, ctx).is_empty()
    assert constituent_set(ONE, ctx).is_full()


def test_union_example():
    assert sorted(constituent_set(Union(x, y), XY).sigma_strings()) == ["01", "10", "11"]


def test_set_algebra_examples():
    cx, cy = constituent_set(x, XY), constituent_set(y, XY)
    assert sorted(set_algebra("complement", cx).sigma_strings()) == ["00", "01"]
    assert set_algebra("intersection", cx, cy) == constituent_set(Intersection(x, y), XY)
    assert set_algebra("intersection", cx, cy).sigma_strings() == ["11"]


def test_set_algebra_context_mismatch():
    with pytest.raises(ContextMismatch):
        constituent_set(x, XY) | constituent_set(x, VarContext(["x"]))


def test_set_algebra_random_pairs():
    rng = random.Random(7)
    for _ in range(100):
        k = rng.randint(1, 3)
        names = "xyz"[:k]
        ctx = VarContext(names)
        p, q = random_term(rng, names, 3), random_term(rng, names, 3)
        cp, cq = constituent_set(p, ctx), constituent_set(q, ctx)
        assert cp | cq == constituent_set(Union(p, q), ctx)
        assert cp & cq == constituent_set(Intersection(p, q), ctx)
        assert ~cp == constituent_set(~p, ctx)


@settings(max_examples=300)
@given(terms())
def test_constituent_set_matches_free_model(t):
    ctx = infer_context(t).extend("xyz")
    assert list(constituent_set(t, ctx)) == brute_constituents(t, ctx)


def test_expand_about_examples():
    e = expand_about(parse_term("x & y' | x' & y"), ["x"])
    assert e.coefficient(1) == parse_term("y'")
    assert e.coefficient(0) == y
    e = expand_about(y, ["x"])
    assert e.coefficient(1) == y and e.coefficient(0) == y
    e = expand_about(parse_term("x1 & x2"), ["x1", "x2"])
    assert e.coefficient(sig("11")) == ONE
    assert [e.coefficient(sig(s)) for s in ("10", "01", "00")] == [ZERO] * 3


@settings(max_examples=200)
@given(terms())
def test_expansion_reassembles(t):
    ctx = VarContext("xyz")
    for about in (["x"], ["y", "z"], ["z", "x", "y"]):
        assert constituent_set(expand_about(t, about).reassemble(), ctx) == constituent_set(t, ctx)


def test_term_from_set_examples():
    assert term_from_set(ConstituentSet(XY, 0)) == ZERO
    assert term_from_set(ConstituentSet(XY, 1 << sig("11"))) == Intersection(x, y)
    s = ConstituentSet(XY, 1 << sig("10") | 1 << sig("01"))
    t = term_from_set(s)
    assert t == parse_term("x & y' | x' & y")
    assert constituent_set(t, XY) == s


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_term_from_set_round_trip_exhaustive(k):
    ctx = VarContext("xyz"[:k])
    for bits in range(1 << (1 << k)):
        s = ConstituentSet(ctx, bits)
        assert constituent_set(term_from_set(s), ctx) == s


def test_reduce_examples():
    assert reduce([BasicFormula(x), BasicFormula(y)]) == Union(x, y)
    assert reduce([]) == ZERO
    fs = [parse_formula("x & y' = 0"), parse_formula("y & z' = 0")]
    assert reduce(fs) == parse_term("x & y' | y & z'")
    with pytest.raises(PolarityError):
        reduce([BasicFormula(x, Polarity.NEQ)])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_orthogonality_partition_kronecker(k):
    ctx = VarContext("xyz"[:k])
    cons = [constituent(s, ctx) for s in range(1 << k)]
    for s, t in itertools.product(range(1 << k), repeat=2):
        meet = constituent_set(Intersection(cons[s], cons[t]), ctx)
        assert meet.is_empty() == (s != t)
        assert eval_at_sigma(cons[s], t, ctx) == (s == t)
    from boolealg.terms import union_of
    assert constituent_set(union_of(cons), ctx).is_full()


@settings(max_examples=150)
@given(terms())
def test_absorption_of_context(t):
    # t & C_sigma has the same constituents as t(sigma, y) & C_sigma
    ctx = VarContext("xyz")
    about = VarContext(["x", "y"])
    for s in range(4):
        c = constituent(s, about)
        ts = substitute(t, {n: ONE if s >> i & 1 else ZERO for i, n in enumerate(about)})
        assert constituent_set(Intersection(t, c), ctx) == constituent_set(Intersection(ts, c), ctx)


def test_empty_context():
    ctx = VarContext()
    assert constituent(0, ctx) == ONE
    assert set(constituent_set(parse_term("1 & 0'"), ctx)) == {0}
    assert sigma_string(0, 0) == ""


def test_context_cap():
    with pytest.raises(ContextTooLarge):
        constituent_set(ZERO, VarContext(f"v{i}" for i in range(25)))


@pytest.mark.parametrize("k", [1, 2, 4, 6])
def test_constituent_set_matches_pointwise_evaluation(k):
    rng = random.Random(k)
    ctx = VarContext(f"v{i}" for i in range(k))
    for _ in range(100):
        t = random_term(rng, list(ctx), 4)
        cs = constituent_set(t, ctx)
        assert all((s in cs) == bool(eval_at_sigma(t, s, ctx)) for s in range(1 << k))

"""
Boole's V: negated equations as equations
=========================================

Boole wrote "some x is y" as V = V x y for a new class symbol V, that is
V (x y)' = 0.  The translation is not an equivalence, since V = 0 satisfies it
whatever x and y are, yet whole arguments keep their validity and one-one
elimination gives the same result either way.
"""

from boolealg import (
    BasicFormula, Polarity, check_valid_via_v, eliminate_one_one,
    eliminate_one_one_via_v, parse_term, to_v_equation,
)
from boolealg.constituents import equivalent
from boolealg.terms import VarContext

t = to_v_equation(BasicFormula(parse_term("x & y"), Polarity.NEQ))
print("xy != 0 becomes", t.v_equation)

# Darii: all y is z, some x is y, so some x is z
r = check_valid_via_v(parse_term("y & z'"), [parse_term("x & y")], parse_term("x & z"))
print("Darii via V:", r.valid, "over", list(r.context))

# Darapti stays invalid
r = check_valid_via_v(parse_term("y & x' | y & z'"), [], parse_term("x & z"))
print("Darapti via V:", r.valid)

# eliminating the middle term of Darii's premisses yields its conclusion
p, q = parse_term("y & z'"), parse_term("x & y")
direct = eliminate_one_one(p, q, "y")
via_v = eliminate_one_one_via_v(p, q, "y")
ctx = VarContext(["x", "z"])
print("residual:", via_v.residual_neq, "!= 0;  same as direct:",
      equivalent(direct.residual_neq, via_v.residual_neq, ctx))

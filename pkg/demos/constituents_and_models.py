"""
Full expansions, constituent sets and canonical models
======================================================

Every term over variables x1..xk is a union of constituents, the 2**k
products of each variable or its complement.  The set of constituents a term
contains decides every equation about it.
"""

from boolealg import canonical_model, constituent_set, parse_term, term_from_set
from boolealg.constituents import constituent, constituent_number, sigma_string
from boolealg.terms import VarContext

# the four constituents over two variables, numbered C1..C4 from x1x2 down to x1'x2'
ctx = VarContext(["x1", "x2"])
for sigma in sorted(range(4), key=lambda s: constituent_number(s, 2)):
    print(f"C{constituent_number(sigma, 2)}", sigma_string(sigma, 2), constituent(sigma, ctx))

# "x1 = x2" in standard form: which constituents does it contain?
p = parse_term("x1 & x2 | x1' & x2'")
cs = constituent_set(p, ctx)
print("C(p) =", ", ".join(f"C{i}" for i in cs.numbers()))
print("full expansion:", term_from_set(cs))

# p = 0 has a model with one element for each constituent outside C(p)
m = canonical_model(p, ctx)
print("universe:", sorted(m.universe), " x1:", sorted(m["x1"]), " x2:", sorted(m["x2"]))

# equal constituent sets mean equal terms in every power-set algebra
a, b = parse_term("(x1 | x2)'"), parse_term("x1' & x2'")
print("De Morgan holds:", constituent_set(a, ctx) == constituent_set(b, ctx))

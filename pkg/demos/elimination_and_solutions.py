"""
Eliminating a variable and solving for it
=========================================

From p(x, y) = 0 the variable x can be eliminated exactly, leaving
p(1, y) p(0, y) = 0, and every solution has the form
x = z' p(0, y) | z p(1, y)'.  With one negated equation alongside there is
still an exact eliminant; with two there is not, and the solution is given
in parametric form instead.
"""

import itertools

from boolealg import (
    eliminate_many, eliminate_one, eliminate_one_one, parse_term, print_formula,
    solve_one, solve_system,
)
from boolealg.semantics import mask_evaluator

p = parse_term("x & y | y'")
print("eliminate x from", p, "= 0:", eliminate_one(p, "x").eliminant, "= 0")

s = solve_one(parse_term("x & y' | x' & y"), "x")
print("x = y as an equation in x:", s.lower, "<= x <=", s.upper)

p = parse_term("x & z' | x' & z | y'")
print("eliminate x and y at once:", eliminate_many(p, ["x", "y"]).eliminant, "= 0")

# there is an x inside y meeting z exactly when y meets z
r = eliminate_one_one(parse_term("x & y'"), parse_term("x & z"), "x")
print("exists x <= y with xz != 0  iff ", r.residual_neq, "!= 0")

# xy != 0 and x'y != 0: x must split y, so y needs two elements
sol = solve_system(parse_term("0"), [parse_term("y & x"), parse_term("y & x'")], "x")
print("x =", sol.solution_expr)
for f in sol.constraints:
    print("   ", print_formula(f))

names = [*sol.parameters, "y"]
cons = [(mask_evaluator(f.lhs, names), f.is_eq) for f in sol.constraints]
for n in (1, 2, 3):
    full = (1 << n) - 1
    ok = {bin(y).count("1"): any(all((c(full, *ps, y) == 0) == eq for c, eq in cons)
                                 for ps in itertools.product(range(full + 1), repeat=3))
          for y in range(full + 1)}
    print(f"universe of size {n}: solvable by |y| ->", ok)

"""
Deciding arguments and the 256 syllogisms
=========================================

An argument made of equations and negated equations is valid when the
constituents of its conclusion are covered by those of its premisses.  When
it is not, the report carries a countermodel.
"""

from boolealg import Argument, check, eval_formula, oracle_valid, parse_formula
from boolealg.syllogisms import all_moods


def argument(premisses, conclusion):
    return Argument([parse_formula(p) for p in premisses], parse_formula(conclusion))


barbara = argument(["All m is p", "All s is m"], "All s is p")
r = check(barbara)
print("Barbara:", r.valid, r.route.value)
print("  included", r.certificate.included.sigma_strings(),
      "covering", r.certificate.covering.sigma_strings())

# Darapti needs m to be nonempty, which the premisses do not say
darapti = argument(["All m is p", "All m is s"], "Some s is p")
r = check(darapti)
print("Darapti:", r.valid)
w = r.witness
print("  countermodel universe", sorted(w.universe),
      {n: sorted(w[n]) for n in ("m", "p", "s")})
print("  premisses hold:", all(eval_formula(w, f) for f in darapti.premisses),
      " conclusion fails:", not eval_formula(w, darapti.conclusion))

# adding "m is not empty" repairs it
print("with m != 0:", check(argument(["All m is p", "All m is s", "m is not empty"],
                                     "Some s is p")).valid)

# every mood, decided twice: by inclusion and by brute force over emptiness patterns
moods = all_moods()
fast = [m for m in moods if check(m.argument()).valid]
slow = [m for m in moods if oracle_valid(m.argument())]
print(len(fast), "valid moods; oracle agrees:", fast == slow)
for m in fast:
    print(f"  {m.label:6} {m.name or '':10} {'; '.join(m.sentences())}")

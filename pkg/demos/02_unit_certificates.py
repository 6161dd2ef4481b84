"""
Deciding invertibility, with certificates
=========================================

``is_unit`` never answers with a bare boolean.  A positive answer carries
the inverse (re-verified by multiplication before it is returned); a
negative answer carries an obstruction explaining what failed.
"""

import json

from gradedrings import (
    GradingGroup,
    Zmod,
    is_unit,
    laurent_ring,
    polynomial_ring,
)

# -- positively graded rings -------------------------------------------------
# Here f is a unit iff its degree-0 term is a unit and the rest is
# nilpotent, so inverses come from a geometric series.
free = polynomial_ring(Zmod(4), "x")
R = free.quotient([free.gen("x") ** 2])
x = R.gen("x")

cert = is_unit(1 + 2 * x)
print("1 + 2x over Z/4:", cert.verdict, "inverse =", cert.inverse)
assert (1 + 2 * x) * cert.inverse == R.one()

# -- Laurent rings over Z/n ----------------------------------------------------
# 2x + 3x^-1 has zero-divisor components, yet the element is a unit: the
# coefficients generate the unit ideal and all cross products vanish.
L = laurent_ring(Zmod(6), "x")
t = L.gen("x")
cert = is_unit(2 * t + 3 * t ** -1)
print("2x + 3x^-1 over Z/6:", cert.verdict, "inverse =", cert.inverse)

# in the Laurent ring even 2 + 3x is a unit: x being invertible, only the
# content and the cross products matter, not which grade carries them
cert = is_unit(2 + 3 * t)
print("2 + 3x over Z/6[x, x^-1]:", cert.verdict, "inverse =", cert.inverse)

# over the plain polynomial ring the same element fails: the degree-0
# term must be a unit there, and the failure is reported as an obstruction
P6 = polynomial_ring(Zmod(6), "x")
cert = is_unit(P6.scalar(2) + 3 * P6.gen("x"))
print("2 + 3x over Z/6[x] obstruction:",
      json.dumps(cert.obstruction.to_json()))

# a non-nilpotent cross product of two components is also an obstruction
cert = is_unit(P6.one() + 3 * P6.gen("x"))
print("1 + 3x over Z/6[x] obstruction:",
      json.dumps(cert.obstruction.to_json()))

# -- torsion gradings ----------------------------------------------------------
# Over a cyclic grading the criteria above are no longer valid, and the
# decision falls back to an exhaustive scan of the (finite) ring.  1 + x
# in Z/5[x]/(x^5 - 1) is the classic case: its cross pair 1 * x is not
# nilpotent, but the element is invertible anyway.
G = GradingGroup.cyclic(5)
free5 = polynomial_ring(Zmod(5), "x", grades=[G.grade(1)], grading=G)
T = free5.quotient([free5.gen("x") ** 5 - free5.one()])
u = T.one() + T.gen("x")
cert = is_unit(u)
print("1 + x under a Z/5 grading:", cert.verdict, "inverse =", cert.inverse)
assert u * cert.inverse == T.one()

cert = is_unit(T.gen("x") - T.one())
print("x - 1 under a Z/5 grading:", cert.verdict,
      "obstruction =", json.dumps(cert.obstruction.to_json()))

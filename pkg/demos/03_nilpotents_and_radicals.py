"""
Nilpotents, the nilradical, and what torsion gradings break
===========================================================

Under a totally ordered grading the nilradical is a graded ideal: if an
element is nilpotent, so is each of its homogeneous components.  Cyclic
gradings break this, and the brute-force oracle exhibits the failure on
an explicit finite ring.
"""

from gradedrings import (
    FiniteRingTable,
    GradingGroup,
    Zmod,
    is_nilpotent,
    polynomial_ring,
)

# ordered grading: nilpotency is decided componentwise
free = polynomial_ring(Zmod(6), "x")
R = free.quotient([free.gen("x") ** 3])
x = R.gen("x")

cert = is_nilpotent(2 * x + 3 * x ** 2)
print("2x + 3x^2 over Z/6:", cert.verdict, "exponent =", cert.exponent)

cert = is_nilpotent(3 * x)
print("3x over Z/6:", cert.verdict)

# torsion grading: Z/5[x]/(x^5 - 1) graded by Z/5
G = GradingGroup.cyclic(5)
free5 = polynomial_ring(Zmod(5), "x", grades=[G.grade(1)], grading=G)
T = free5.quotient([free5.gen("x") ** 5 - free5.one()])
w = T.gen("x") - T.one()

cert = is_nilpotent(w)
print("\nx - 1 under the Z/5 grading:", cert.verdict,
      "exponent =", cert.exponent)
print("component x:", is_nilpotent(w.component(G.grade(1))).verdict)
print("component -1:", is_nilpotent(w.component(G.zero())).verdict)

# the oracle scans all 3125 elements and confirms the nilradical is not
# a graded ideal: it contains x - 1 but not the component x
table = FiniteRingTable(T)
graded, witness = table.is_graded_subset(table.nilpotents)
member, grade, comp = witness
print("\nnilradical graded?", graded)
print("witness:", table.element(member), " component at grade", grade,
      "is", table.element(comp), "which is not nilpotent")

# the Jacobson radical (here equal to the nilradical) fails the same way
assert bool((table.jacobson == table.nilpotents).all())
graded, _ = table.is_graded_subset(table.jacobson)
print("Jacobson radical graded?", graded)

# the largest graded ideal inside the nilradical is just (0)
print("graded part of the nilradical has",
      int(table.graded_part(table.nilpotents).sum()), "element(s)")

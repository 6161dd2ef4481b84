"""
Building graded rings and working with homogeneous components
==============================================================

A graded ring assigns every monomial a grade in an abelian group, and
every element splits into homogeneous components, one per grade.  This
walkthrough builds a few rings, does arithmetic, and takes elements
apart.
"""

from gradedrings import (
    GradingGroup,
    Zmod,
    ZZ,
    build_rings,
    eval_expression,
    laurent_ring,
    parse_ring_file,
    polynomial_ring,
)

# A polynomial ring over Z/6 with x in degree 1.  Quotients are taken
# from the free ring; x^3 = 0 makes it finite.
free = polynomial_ring(Zmod(6), "x")
R = free.quotient([free.gen("x") ** 3])
x = R.gen("x")

f = (1 + 2 * x) ** 3
print("(1 + 2x)^3 =", f)

# every element is a sum of homogeneous components, one per grade
for grade, comp in f.homogeneous_components():
    print(f"  grade {grade}: {comp}")

# Laurent generators are invertible; grades can be negative
L = laurent_ring(Zmod(6), "x")
t = L.gen("x")
g = 2 * t + 3 * t ** -1
print("Laurent element:", g, "grades:", [str(d) for d in g.support_grades()])

# multivariate rings can be graded by Z^2 under the lexicographic order
G2 = GradingGroup.free_lex(2)
P = polynomial_ring(ZZ, ["x", "y"],
                    grades=[G2.grade((1, 0)), G2.grade((0, 1))], grading=G2)
h = P.gen("x") ** 2 * P.gen("y") - 3 * P.gen("y")
print("Z^2-graded element:", h)
print("  least grade:", h.support_bounds()[0],
      " greatest grade:", h.support_bounds()[1])

# the same rings can come from a text file
rings = build_rings(parse_ring_file("""
ring Q6 {
  base Z/6
  grading Z
  gen x deg 1
  rel x^3
}
"""))
same = eval_expression(rings["Q6"], "(1 + 2*x)^3")
assert str(same) == str(f)
print("ring file round trip gives the same normal form:", same)

# relations must be homogeneous, which is what keeps grading well defined;
# under a cyclic grading x^5 - 1 becomes homogeneous of grade 0
G5 = GradingGroup.cyclic(5)
free5 = polynomial_ring(Zmod(5), "x", grades=[G5.grade(1)], grading=G5)
T = free5.quotient([free5.gen("x") ** 5 - free5.one()])
print("torsion-graded quotient: x^5 =", T.gen("x") ** 5)

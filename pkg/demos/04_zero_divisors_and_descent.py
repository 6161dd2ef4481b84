"""
Zero-divisors and the homogeneous annihilator descent
=====================================================

When an element of a graded ring kills an ideal, some homogeneous element
already kills it: starting from any annihilator, repeatedly multiplying
by a well-chosen component strictly shrinks its support until a single
homogeneous killer remains.  The descent is constructive, and this
walkthrough runs it on the standard four-parameter example.
"""

from gradedrings import (
    QQ,
    GradingGroup,
    Zmod,
    homogenize_annihilator,
    is_zero_divisor,
    polynomial_ring,
)

# simple cases over Z/6[x]: the scalar content decides
R = polynomial_ring(Zmod(6), "x")
x = R.gen("x")

for f in (R.scalar(2), 3 * x, 2 + 4 * x, 2 + 3 * x):
    cert = is_zero_divisor(f)
    if cert.verdict == "zero_divisor":
        print(f"{f}: zero-divisor, killed by {cert.annihilator}")
        assert (f * cert.annihilator).is_zero()
        assert cert.annihilator.is_homogeneous()
    else:
        print(f"{f}: not a zero-divisor "
              "(its coefficients generate the unit ideal)")

# -- the four-parameter example -------------------------------------------------
# Parameters x1..x4 over Q with relations x1*x3 = x2*x4 = x1*x4 + x2*x3 = 0,
# and one degree-1 variable T.  Then f = x1*T + x2 annihilates g = x3*T + x4,
# but neither component of f does: the annihilator ideal Ann(g) is not graded.
G = GradingGroup.free_lex(1)
z, o = G.zero(), G.grade(1)
free = polynomial_ring(QQ, ["x1", "x2", "x3", "x4", "T"],
                       grades=[z, z, z, z, o], grading=G)
x1, x2, x3, x4, T = (free.gen(n) for n in ("x1", "x2", "x3", "x4", "T"))
S = free.quotient([x1 * x3, x2 * x4, x1 * x4 + x2 * x3], reduction="linear")
x1, x2, x3, x4, T = (S.gen(n) for n in ("x1", "x2", "x3", "x4", "T"))

f = x1 * T + x2
g = x3 * T + x4
print("\nf * g =", f * g)
print("x1*T * g =", x1 * T * g, " (top component alone does not kill g)")
print("x2 * g =", x2 * g, " (constant component alone does not kill g)")

# the descent walks f to a homogeneous annihilator of (g)
h = homogenize_annihilator([g], f)
print("descent output:", h)
assert h.is_homogeneous() and (h * g).is_zero()
print("h is homogeneous and h * g =", h * g)

# the same descent powers the finite-ring decision: every zero-divisor
# verdict over an ordered grading carries a homogeneous witness
free6 = polynomial_ring(Zmod(6), "x")
Q6 = free6.quotient([free6.gen("x") ** 3])
xq = Q6.gen("x")
cert = is_zero_divisor(2 + 3 * xq)
print("\n2 + 3x in Z/6[x]/(x^3):", cert.verdict,
      "annihilator =", cert.annihilator)
assert ((2 + 3 * xq) * cert.annihilator).is_zero()

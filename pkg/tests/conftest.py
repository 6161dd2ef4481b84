"""Shared ring builders and hypothesis configuration for the suite."""

import random

from hypothesis import HealthCheck, settings

from gradedrings import (
    AssociatedGradedRing,
    ProductRing,
    TrivialExtensionRing,
    Zmod,
    polynomial_ring,
)

settings.register_profile(
    "suite", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")


def truncated_poly(n: int, k: int, names="x"):
    """Z/n[x]/(x^k) (or several variables, each cut at power k)."""
    names = [names] if isinstance(names, str) else list(names)
    free = polynomial_ring(Zmod(n), names)
    return free.quotient([free.gen(nm) ** k for nm in names])


def finite_corpus():
    """The finite rings used by the agreement sweeps: truncated polynomial
    rings over Z/n, two-variable square-zero rings, a product, a trivial
    extension, and one associated graded ring.  Names are stable."""
    out = []
    for n in (4, 6, 8, 9, 12):
        for k in (2, 3):
            out.append((f"Z/{n}[x]/(x^{k})", truncated_poly(n, k)))
    for n in (4, 6):
        free = polynomial_ring(Zmod(n), ["x", "y"])
        ring = free.quotient([free.gen("x") ** 2, free.gen("y") ** 2])
        out.append((f"Z/{n}[x,y]/(x^2,y^2)", ring))
    out.append(("Z/2[x]/(x^2) x Z/3[y]/(y^2)",
                ProductRing(truncated_poly(2, 2), truncated_poly(3, 2, "y"))))
    out.append(("Z/4[x]/(x^2) x Z/4[y]/(y^3)",
                ProductRing(truncated_poly(4, 2), truncated_poly(4, 3, "y"))))
    carrier = truncated_poly(4, 2)
    out.append(("Z/4[x]/(x^2) |x (x)",
                TrivialExtensionRing(carrier, carrier.gen("x"))))
    carrier6 = truncated_poly(6, 2)
    out.append(("Z/6[x]/(x^2) |x (3)",
                TrivialExtensionRing(carrier6, carrier6.scalar(3))))
    out.append(("gr(Z/8 along (2))", AssociatedGradedRing(8, 2)))
    return out


def random_element(rng: random.Random, ring, max_terms=3, max_exp=3,
                   coeff_bound=12):
    """A small random element, built from generator monomials."""
    gens = list(ring.gens)
    f = ring.zero()
    for _ in range(rng.randint(0, max_terms)):
        c = rng.randint(-coeff_bound, coeff_bound)
        mono = ring.scalar(ring.base.normalize(c))
        for g in gens:
            e = rng.randint(0, max_exp) if not g.invertible \
                else rng.randint(-max_exp, max_exp)
            if e:
                mono = mono * ring.gen(g.name) ** e
        f = f + mono
    return f

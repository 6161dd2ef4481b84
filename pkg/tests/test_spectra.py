"""Pierce decomposition, graded primes, and the projective cover test."""

import numpy as np
import pytest

from gradedrings import (
    QQ,
    FiniteRingTable,
    GradingGroup,
    ProductRing,
    Zmod,
    graded_primes,
    laurent_spec_star,
    pi0_equivalences,
    pierce_spectrum,
    polynomial_ring,
    proj_quasicompact,
)
from conftest import truncated_poly


@pytest.fixture(scope="module")
def q6_table():
    return FiniteRingTable(truncated_poly(6, 3))


def test_pierce_spectrum_of_q6(q6_table):
    data = pierce_spectrum(q6_table)
    assert len(data.components_spec) == 2
    assert len(data.primitive_idempotents) == 2
    prim = {str(q6_table.element(o)) for o in data.primitive_idempotents}
    assert prim == {"3", "4"}
    total = sum(int(len(block)) for block in data.components_spec)
    assert total == len(q6_table.primes)


def test_pierce_separation(q6_table):
    data = pierce_spectrum(q6_table)
    blocks = data.components_spec
    if len(blocks) >= 2:
        # distinct components are separated by an idempotent
        idem = np.nonzero(q6_table.idempotents)[0].tolist()
        assert any(o not in (0, q6_table.one_ord) for o in idem)


def test_connected_ring_has_one_component():
    t = FiniteRingTable(truncated_poly(4, 2))
    data = pierce_spectrum(t)
    assert len(data.components_spec) == 1
    assert list(data.primitive_idempotents) == [t.one_ord]


def test_pi0_counts_line_up(q6_table):
    data = pi0_equivalences(q6_table)
    c = data["counts"]
    assert (c["spec"], c["spec_degree_zero"], c["spec_star"]) == (2, 2, 2)
    assert data["bijections_verified"]


def test_pi0_on_a_product():
    P = ProductRing(truncated_poly(2, 2), truncated_poly(3, 2, "y"))
    data = pi0_equivalences(FiniteRingTable(P))
    c = data["counts"]
    assert (c["spec"], c["spec_degree_zero"], c["spec_star"]) == (2, 2, 2)
    assert data["bijections_verified"]


def test_graded_primes_torsion_free(q6_table):
    gp = graded_primes(q6_table)
    assert len(gp) == 2  # both minimal primes of Z/6[x]/(x^3) are graded


def test_graded_primes_torsion_counterexample():
    G = GradingGroup.cyclic(5)
    free = polynomial_ring(Zmod(5), "x", grades=[G.grade(1)], grading=G)
    t = FiniteRingTable(free.quotient([free.gen("x") ** 5 - free.one()]))
    assert len(t.primes) == 1
    assert len(graded_primes(t)) == 0


@pytest.mark.parametrize("n,count,divisors", [
    (4, 1, [2]),
    (5, 1, [5]),
    (6, 2, [2, 3]),
    (12, 2, [2, 3]),
    (30, 3, [2, 3, 5]),
    (420, 4, [2, 3, 5, 7]),
])
def test_laurent_graded_spectrum(n, count, divisors):
    data = laurent_spec_star(n)
    assert data["count"] == count
    assert data["prime_divisors"] == divisors
    assert [item["divisor"] for item in data["graded_primes"]] == divisors
    assert data["bijection_verified"]
    assert data["exhaustive_pair_scan"]


def test_proj_cover_by_the_variables():
    R = polynomial_ring(QQ, ["x", "y"])
    out = proj_quasicompact(R, [R.gen("x"), R.gen("y")])
    assert out["verdict"] == "QuasiCompact"
    assert out["certificates"]["x"]["exponent"] == 1
    assert out["certificates"]["y"]["exponent"] == 1


def test_proj_cover_with_higher_exponents():
    R = polynomial_ring(QQ, ["x", "y"])
    out = proj_quasicompact(R, [R.gen("x") ** 2, R.gen("y") ** 3])
    assert out["verdict"] == "QuasiCompact"
    assert out["certificates"]["x"]["exponent"] == 2
    assert out["certificates"]["y"]["exponent"] == 3
    for cert in out["certificates"].values():
        assert cert["combination"]


def test_proj_unknown_when_no_pure_power_lands_in_the_ideal():
    R = polynomial_ring(QQ, ["x", "y"])
    gens = [R.gen("x") ** 2 * R.gen("y"), R.gen("x") * R.gen("y") ** 2]
    out = proj_quasicompact(R, gens, degree_cap=10)
    assert out["verdict"] == "Unknown"
    assert out["generator"] == "x"
    assert out["cap"] == 10
    assert "no exponent" in out["reason"]


def test_proj_cap_is_respected():
    R = polynomial_ring(QQ, ["x", "y"])
    out = proj_quasicompact(R, [R.gen("x") ** 5, R.gen("y")], degree_cap=3)
    assert out["verdict"] == "Unknown"
    out = proj_quasicompact(R, [R.gen("x") ** 5, R.gen("y")], degree_cap=6)
    assert out["verdict"] == "QuasiCompact"
    assert out["certificates"]["x"]["exponent"] == 5

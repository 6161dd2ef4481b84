"""Computer algebra for commutative rings graded by totally ordered groups.

The pieces, bottom up:

* :mod:`gradedrings.grading` — grading groups (Z^d with the lex order, and
  cyclic torsion groups for the counterexamples) and grade arithmetic.
* :mod:`gradedrings.scalars` — exact base rings Z, Q, Z/nZ.
* :mod:`gradedrings.algebra` — graded ring presentations, sparse elements in
  unique normal form, and the product / trivial extension / associated graded
  constructions.
* :mod:`gradedrings.decide` — certificate-producing decision procedures for
  units, nilpotents, zero divisors and idempotents; every positive certificate
  is re-verified by arithmetic before it is returned.
* :mod:`gradedrings.oracle` — a brute-force oracle for finite rings that
  computes units, nilpotents, zero divisors, idempotents, the two radicals and
  the prime ideals straight from the definitions, to cross-validate decide.
* :mod:`gradedrings.spectra` — Pierce spectrum, graded primes, connected
  component counts, and the graded spectrum of Laurent rings over Z/nZ.
* :mod:`gradedrings.dsl` / :mod:`gradedrings.cli` — a small text format for
  ring presentations and the command line driver around all of the above.
"""

from .algebra import (
    AssociatedGradedRing,
    Element,
    Generator,
    PresentedRing,
    ProductRing,
    TrivialExtensionRing,
    base_as_ring,
    group_ring,
    laurent_ring,
    polynomial_ring,
    regrade,
)
from .decide import (
    check_colon_gradedness,
    check_idempotent_homogeneity,
    homogenize_annihilator,
    invert_homogeneous,
    is_nilpotent,
    is_unit,
    is_zero_divisor,
    table_for,
)
from .dsl import build_rings, eval_expression, parse_expression, parse_ring_file
from .gallery import GALLERY_IDS, run_all, run_gallery
from .grading import Grade, GradingGroup
from .oracle import FiniteRingTable, enumerate_ring
from .scalars import QQ, ZZ, IntegersMod, Zmod
from .spectra import (
    graded_primes,
    laurent_spec_star,
    pi0_equivalences,
    pierce_spectrum,
    proj_quasicompact,
)

__all__ = [
    "AssociatedGradedRing",
    "Element",
    "FiniteRingTable",
    "GALLERY_IDS",
    "Generator",
    "Grade",
    "GradingGroup",
    "IntegersMod",
    "PresentedRing",
    "ProductRing",
    "QQ",
    "TrivialExtensionRing",
    "ZZ",
    "Zmod",
    "base_as_ring",
    "build_rings",
    "check_colon_gradedness",
    "check_idempotent_homogeneity",
    "enumerate_ring",
    "eval_expression",
    "graded_primes",
    "group_ring",
    "homogenize_annihilator",
    "invert_homogeneous",
    "is_nilpotent",
    "is_unit",
    "is_zero_divisor",
    "laurent_ring",
    "laurent_spec_star",
    "parse_expression",
    "parse_ring_file",
    "pi0_equivalences",
    "pierce_spectrum",
    "polynomial_ring",
    "proj_quasicompact",
    "regrade",
    "run_all",
    "run_gallery",
    "table_for",
]

__version__ = "0.1.0"

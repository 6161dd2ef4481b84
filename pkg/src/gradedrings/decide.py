"""Certificate-producing decision procedures.

Every positive answer carries evidence that is re-verified by direct
arithmetic before it is returned: a unit certificate holds the inverse and
``f * inverse == 1`` has been checked; a nilpotency certificate holds the
minimal exponent k and ``f**k == 0 != f**(k-1)`` has been checked; a
zero-divisor certificate holds a nonzero homogeneous annihilator g and
``f * g == 0`` has been checked.  Negative answers carry structured
obstructions.  When a question cannot be settled within the configured
bounds the procedures raise :class:`CapExceededError` instead of guessing.

Supported ring families are deliberately explicit (see the individual
functions); anything outside them raises :class:`UnsupportedFamilyError`.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from math import gcd

from .algebra import Element, PresentedRing, laurent_ring
from .errors import (CapExceededError, TheoremViolationError,
                     UnorderedGradingError, UnsupportedFamilyError)
from .grading import Grade
from .oracle import DEFAULT_ENUMERATION_CAP, FiniteRingTable
from .scalars import IntegersMod, Zmod, crt, prime_factors

DEFAULT_POWER_CAP = 64

# -- certificates --------------------------------------------------------------


@dataclass(frozen=True)
class ContentProper:
    """The content ideal (generated by the homogeneous components) is proper."""
    evidence: dict

    def to_json(self):
        return {"kind": "content_proper", **self.evidence}


@dataclass(frozen=True)
class CrossPairNotNilpotent:
    """Components at two distinct grades have a non-nilpotent product."""
    i: Grade
    k: Grade

    def to_json(self):
        return {"kind": "cross_pair_not_nilpotent",
                "i": str(self.i), "k": str(self.k)}


@dataclass(frozen=True)
class ExhaustiveScan:
    """Oracle obstruction for torsion gradings, where the content/cross-pair
    criterion is not a valid characterization of units."""
    ring_size: int

    def to_json(self):
        return {"kind": "exhaustive_scan", "ring_size": self.ring_size}


@dataclass(frozen=True)
class Unit:
    inverse: Element
    verdict = "unit"

    def to_json(self):
        return {"inverse": str(self.inverse)}


@dataclass(frozen=True)
class NotUnit:
    obstruction: object
    verdict = "not_unit"

    def to_json(self):
        return {"obstruction": self.obstruction.to_json()}


@dataclass(frozen=True)
class Nilpotent:
    exponent: int
    verdict = "nilpotent"

    def to_json(self):
        return {"exponent": self.exponent}


@dataclass(frozen=True)
class NotNilpotent:
    witness: dict
    verdict = "not_nilpotent"

    def to_json(self):
        return {"witness": self.witness}


@dataclass(frozen=True)
class ZeroDivisor:
    annihilator: Element
    verdict = "zero_divisor"

    def to_json(self):
        return {"annihilator": str(self.annihilator)}


@dataclass(frozen=True)
class NotZeroDivisor:
    reason: dict
    verdict = "not_zero_divisor"

    def to_json(self):
        return {"reason": self.reason}


@dataclass(frozen=True)
class IdempotentReport:
    is_idempotent: bool
    homogeneous_degree_zero: bool
    offending_grades: tuple

    @property
    def verdict(self):
        if not self.is_idempotent:
            return "not_idempotent"
        return ("homogeneous_idempotent" if self.homogeneous_degree_zero
                else "non_homogeneous_idempotent")

    def to_json(self):
        return {"is_idempotent": self.is_idempotent,
                "homogeneous_degree_zero": self.homogeneous_degree_zero,
                "offending_grades": [str(g) for g in self.offending_grades]}


# -- shared plumbing -----------------------------------------------------------

_tables: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def table_for(ring, cap: int = DEFAULT_ENUMERATION_CAP) -> FiniteRingTable:
    """Memoized finite-ring oracle table for a ring handle."""
    tb = _tables.get(ring)
    if tb is None or tb.N > cap:
        tb = FiniteRingTable(ring, cap)
        _tables[ring] = tb
    return tb


def _is_free_monoid_ring(ring) -> bool:
    return isinstance(ring, PresentedRing) and not ring.relations and ring.gens


def _is_positively_graded(ring) -> bool:
    # family (a): presented, torsion-free grading, every generator of
    # strictly positive grade, so the degree-0 part is the base ring
    if not isinstance(ring, PresentedRing):
        return False
    if not ring.grading.is_torsion_free():
        return False
    zero = ring.grading.zero()
    return all(g.grade > zero and not g.invertible for g in ring.gens)


def _is_laurent_over_zn(ring) -> bool:
    return (_is_free_monoid_ring(ring)
            and isinstance(ring.base, IntegersMod)
            and all(g.invertible for g in ring.gens))


def _is_finite(ring) -> bool:
    try:
        ring.finite_coordinates()
        return True
    except Exception:
        return False


def _verify(cond: bool, message: str) -> None:
    if not cond:
        raise TheoremViolationError(message)


def _scalar_value(p: Element):
    """The base scalar c when p = c * 1, else None."""
    one_key = next(iter(p.ring.one_terms()))
    if len(p.terms) == 1 and one_key in p.terms:
        return p.terms[one_key]
    return None


# -- nilpotency ----------------------------------------------------------------


def is_nilpotent(f: Element, cap: int = DEFAULT_POWER_CAP):
    """Decide nilpotency with a minimal-exponent certificate.

    Ordered gradings reduce the question to the homogeneous components; a
    component (or, for torsion gradings, the element itself) is then settled
    per family: free monoid rings by the scalar-content rule, finite rings by
    repeated squaring, anything else by a bounded power walk with cycle
    detection.  The walk raises CapExceededError when it can neither reach
    zero nor find a cycle within the cap.
    """
    ring = f.ring
    if not f:
        return _certify_nilpotent(f, 1)
    if _is_free_monoid_ring(ring):
        return _nilpotent_free(f)
    if ring.grading.is_torsion_free():
        comps = f.homogeneous_components()
        exps = []
        for g, comp in comps:
            res = _nilpotent_one_piece(comp, cap)
            if isinstance(res, NotNilpotent):
                return NotNilpotent({"kind": "component_not_nilpotent",
                                     "grade": str(g),
                                     "detail": res.witness})
            exps.append(res.exponent)
        bound = sum(e - 1 for e in exps) + 1
        return _minimal_exponent(f, bound)
    res = _nilpotent_one_piece(f, cap)
    if isinstance(res, NotNilpotent):
        return res
    return _certify_nilpotent(f, res.exponent)


def _certify_nilpotent(f: Element, k: int) -> Nilpotent:
    _verify(not f ** k, f"claimed exponent {k} does not kill the element")
    _verify(k == 1 or bool(f ** (k - 1)), f"exponent {k} is not minimal")
    return Nilpotent(k)


def _minimal_exponent(f: Element, bound: int) -> Nilpotent:
    p = f
    k = 1
    while p:
        p = p * f
        k += 1
        _verify(k <= bound, "nilpotency exponent exceeded its product bound")
    return _certify_nilpotent(f, k)


def _nilpotent_free(f: Element):
    """Free commutative monoid rings: nilpotent iff every coefficient is
    nilpotent in the base (top-coefficient induction in the exponent-lex
    order, which is independent of the grading)."""
    base = f.ring.base
    exps = {}
    for key, c in sorted(f.terms.items()):
        e = base.nilpotency_exponent(c)
        if e is None:
            grade = f.ring.key_grade(key)
            return NotNilpotent({"kind": "scalar_content",
                                 "grade": str(grade),
                                 "scalar": base.format(c)})
        exps[key] = e
    bound = sum(e - 1 for e in exps.values()) + 1
    return _minimal_exponent(f, bound)


def _nilpotent_one_piece(f: Element, cap: int):
    """Nilpotency of a single piece with no further decomposition."""
    ring = f.ring
    if _is_free_monoid_ring(ring):
        return _nilpotent_free(f)
    if _is_finite(ring):
        # f nilpotent iff f^(2^s) = 0 once 2^s >= |R|
        n = 1
        for _, _, m in ring.finite_coordinates():
            n *= m
        p, e = f, 1
        while e < n and p:
            p = p * p
            e *= 2
        if p:
            return NotNilpotent({"kind": "stabilized_power", "exponent": e})
        return _minimal_exponent(f, n)
    # bounded walk with cycle detection
    seen = {}
    p = f
    k = 1
    while p:
        if p in seen:
            return NotNilpotent({"kind": "stabilized_power",
                                 "exponent": seen[p],
                                 "period": k - seen[p]})
        seen[p] = k
        if k >= cap:
            raise CapExceededError(
                f"no zero power and no cycle within {cap} steps")
        p = p * f
        k += 1
    return _certify_nilpotent(f, k)


# -- units ---------------------------------------------------------------------


def is_unit(f: Element, cap: int = DEFAULT_POWER_CAP,
            enum_cap: int = DEFAULT_ENUMERATION_CAP):
    """Decide invertibility in one of three families.

    (a) positively graded rings: f is a unit iff its degree-0 scalar is a
        unit of the base and the rest is nilpotent; the inverse is the
        geometric series u^-1 * sum (-u^-1 m)^j.
    (b) Laurent monoid rings over Z/n: content-gcd plus cross-pair
        nilpotency; the inverse is assembled by CRT over the prime-power
        factors of n, where exactly one component is a unit and the others
        are nilpotent.
    (c) finite rings: exhaustive oracle scan.

    For torsion-free gradings, every decision is cross-checked against the
    content/cross-pair characterization before it is returned.
    """
    ring = f.ring
    if _is_positively_graded(ring):
        cert = _unit_positively_graded(f, cap)
    elif _is_laurent_over_zn(ring):
        cert = _unit_laurent_zn(f)
    elif _is_finite(ring):
        cert = _unit_finite(f, enum_cap)
    else:
        raise UnsupportedFamilyError(
            "unit decision needs a positively graded ring, a Laurent ring "
            "over Z/n, or a finite ring")
    if ring.grading.is_torsion_free():
        _check_unit_characterization(f, cert, cap)
    return cert


def _unit_positively_graded(f: Element, cap: int):
    ring = f.ring
    base = ring.base
    zero = ring.grading.zero()
    f0 = f.component(zero)
    c0 = f0.terms.get(next(iter(ring.one_terms())), base.zero) if f0 else base.zero
    u_inv = base.inverse_of(c0)
    if u_inv is None:
        evidence = {"constant_term": base.format(c0), "base": str(base)}
        if isinstance(base, IntegersMod):
            evidence["gcd_with_modulus"] = gcd(int(c0), base.n)
        return NotUnit(ContentProper(evidence))
    m = f - f0
    if not m:
        return _certify_unit(f, ring.scalar(u_inv))
    res = is_nilpotent(m, cap)
    if isinstance(res, NotNilpotent):
        # some positive-grade component is not nilpotent; with f0 a unit
        # that exact component produces the non-nilpotent cross pair (0, n)
        bad = _first_non_nilpotent_component(m, cap)
        return NotUnit(CrossPairNotNilpotent(zero, bad))
    u = ring.scalar(u_inv)
    acc = ring.one()
    term = ring.one()
    for _ in range(1, res.exponent):
        term = term * (ring.zero() - u * m)
        acc = acc + term
    return _certify_unit(f, u * acc)


def _first_non_nilpotent_component(m: Element, cap: int) -> Grade:
    for g, comp in m.homogeneous_components():
        if isinstance(_nilpotent_one_piece(comp, cap), NotNilpotent):
            return g
    raise TheoremViolationError(
        "element is not nilpotent yet every component is")


def _certify_unit(f: Element, inverse: Element) -> Unit:
    _verify(f * inverse == f.ring.one(), "claimed inverse fails f * g = 1")
    return Unit(inverse)


def _unit_laurent_zn(f: Element):
    ring = f.ring
    n = ring.base.n
    coeffs = {k: int(c) for k, c in f.terms.items()}
    d = gcd(n, *coeffs.values()) if coeffs else n
    if d > 1:
        return NotUnit(ContentProper({"scalar_gcd": d, "modulus": n}))
    comps = f.homogeneous_components()
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            prod = comps[a][1] * comps[b][1]
            if isinstance(_nilpotent_free(prod), NotNilpotent):
                return NotUnit(
                    CrossPairNotNilpotent(comps[a][0], comps[b][0]))
    # CRT assembly over the prime-power factors of n
    inv_parts = []
    moduli = []
    for p, e in sorted(prime_factors(n).items()):
        q = p ** e
        ring_q = laurent_ring(Zmod(q), [g.name for g in ring.gens],
                              grades=[g.grade for g in ring.gens],
                              grading=ring.grading)
        f_q = ring_q.element({k: c % q for k, c in coeffs.items()})
        units_q = [(k, c) for k, c in f_q.terms.items() if c % p != 0]
        _verify(len(units_q) == 1,
                "expected exactly one unit component modulo each prime power")
        key, c = units_q[0]
        u_inv = ring_q.element({tuple(-x for x in key): ring_q.base.inverse_of(c)})
        m_q = f_q - ring_q.element({key: c})
        res = _nilpotent_free(m_q) if m_q else Nilpotent(1)
        _verify(isinstance(res, Nilpotent),
                "non-unit components must be nilpotent modulo the factor")
        acc = ring_q.one()
        term = ring_q.one()
        for _ in range(1, res.exponent):
            term = term * (ring_q.zero() - u_inv * m_q)
            acc = acc + term
        inv_parts.append({k: int(c) for k, c in (u_inv * acc).terms.items()})
        moduli.append(q)
    keys = set().union(*inv_parts) if inv_parts else set()
    lifted = {}
    for k in keys:
        lifted[k] = crt([part.get(k, 0) for part in inv_parts], moduli)
    return _certify_unit(f, ring.element(lifted))


def _unit_finite(f: Element, enum_cap: int):
    tb = table_for(f.ring, enum_cap)
    o = tb.ordinal(f)
    if tb.units[o]:
        return _certify_unit(f, tb.element(int(tb.inverses[o])))
    if not f.ring.grading.is_torsion_free():
        return NotUnit(ExhaustiveScan(tb.N))
    # torsion-free: produce a content/cross-pair obstruction, pairs first
    comps = f.homogeneous_components()
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            prod = comps[a][1] * comps[b][1]
            if not tb.nilpotents[tb.ordinal(prod)]:
                return NotUnit(
                    CrossPairNotNilpotent(comps[a][0], comps[b][0]))
    content = tb.ideal_generated_by(
        [tb.ordinal(c) for _, c in comps])
    _verify(not content[tb.one_ord],
            "content ideal is the whole ring and all cross pairs are "
            "nilpotent, yet the element is not a unit")
    return NotUnit(ContentProper({"content_ideal_size": int(content.sum()),
                                  "ring_size": tb.N}))


def _check_unit_characterization(f: Element, cert, cap: int) -> None:
    """Cross-check a decision against the content/cross-pair criterion in
    the families where both sides are effective (torsion-free gradings)."""
    if isinstance(cert, Unit):
        comps = f.homogeneous_components()
        for a in range(len(comps)):
            for b in range(a + 1, len(comps)):
                res = _nilpotent_one_piece(comps[a][1] * comps[b][1], cap)
                _verify(isinstance(res, Nilpotent),
                        "unit with a non-nilpotent cross pair")


def invert_homogeneous(f: Element) -> Element:
    """Inverse of a homogeneous unit; the result is asserted homogeneous of
    the opposite grade."""
    if not f or not f.is_homogeneous():
        raise ValueError("invert_homogeneous needs a nonzero homogeneous element")
    ring = f.ring
    inverse = None
    if len(f.terms) == 1:
        try:
            inverse = f ** (-1)
        except Exception:
            inverse = None
    if inverse is None and ring.base is not None:
        # torsion monomials may only be invertible through relations
        # (g * g^(m-1) = 1); walk powers until one lands on a unit scalar
        seen = set()
        prev, p = ring.one(), f
        for _ in range(DEFAULT_POWER_CAP):
            if p in seen:
                break
            seen.add(p)
            c = _scalar_value(p)
            if c is not None:
                c_inv = ring.base.inverse_of(c)
                if c_inv is not None:
                    inverse = ring.scalar(c_inv) * prev
                    break
            prev, p = p, p * f
    if inverse is None:
        cert = is_unit(f)
        if isinstance(cert, NotUnit):
            raise ValueError("element is not a unit")
        inverse = cert.inverse
    _verify(f * inverse == f.ring.one(), "inverse fails f * g = 1")
    _verify(inverse.is_homogeneous()
            and inverse.degree() == -f.degree(),
            "inverse of a homogeneous unit is not homogeneous of the "
            "opposite grade")
    return inverse


# -- zero divisors ---------------------------------------------------------------


def is_zero_divisor(f: Element, seed: Element | None = None,
                    enum_cap: int = DEFAULT_ENUMERATION_CAP):
    """Decide zero-divisorhood with a homogeneous annihilator certificate.

    Free monoid rings over Z/n use the scalar rule: f is a zero divisor iff
    d = gcd(n, all coefficients) exceeds 1, and then c = n/d is a degree-0
    annihilator.  Finite rings take a seed annihilator from the oracle scan;
    other families need a caller-supplied seed.  Seeds are made homogeneous
    by :func:`homogenize_annihilator`, which requires an ordered grading.
    """
    ring = f.ring
    if not f:
        return NotZeroDivisor({"kind": "zero_element",
                               "note": "the zero element is excluded by "
                                       "convention"})
    if seed is not None:
        return ZeroDivisor(homogenize_annihilator([f], seed))
    if _is_free_monoid_ring(ring):
        base = ring.base
        if isinstance(base, IntegersMod):
            n = base.n
            d = gcd(n, *(int(c) for c in f.terms.values()))
            if d > 1:
                c = ring.scalar(n // d)
                _verify(bool(c) and not f * c, "scalar annihilator fails")
                return ZeroDivisor(c)
            return NotZeroDivisor({"kind": "joint_scalar_annihilator_zero",
                                   "modulus": n})
        if base.kind in ("Z", "Q"):
            # monoid ring over a domain is a domain
            return NotZeroDivisor({"kind": "domain_base",
                                   "base": str(base)})
        raise UnsupportedFamilyError(f"unsupported base {base}")
    if _is_finite(ring):
        tb = table_for(ring, enum_cap)
        o = tb.ordinal(f)
        if not tb.zerodivisors[o]:
            return NotZeroDivisor({"kind": "exhaustive_scan",
                                   "ring_size": tb.N})
        witness = tb.element(int(tb.zd_witnesses[o]))
        if ring.grading.is_torsion_free():
            return ZeroDivisor(homogenize_annihilator([f], witness))
        # torsion grading: a homogeneous annihilator may not exist at all;
        # scan for one and refuse honestly otherwise
        ann = tb.annihilator_mask(o)
        for cand in ann.nonzero()[0]:
            if cand != tb.zero_ord and len(tb.components_of(int(cand))) == 1:
                return ZeroDivisor(tb.element(int(cand)))
        raise UnorderedGradingError(
            "f is a zero divisor but no nonzero homogeneous annihilator "
            "exists; the homogeneous certificate requires an ordered grading")
    raise UnsupportedFamilyError(
        "zero-divisor decision outside finite/monoid families needs a seed "
        "annihilator")


def homogenize_annihilator(ideal_gens, h: Element) -> Element:
    """Distill a homogeneous annihilator of the ideal from a seed one.

    Invariant: h is nonzero and kills every generator.  Each round looks at
    the top component h_s of h; if h_s already kills every generator it is
    the answer.  Otherwise the first generator f (presentation order) with
    f * h_s != 0 is combined back in: with t the largest grade where
    f_t * h != 0, the replacement h := f_t * h stays a nonzero annihilator
    and loses its top support grade, so the loop ends within the support
    size of the seed.
    """
    gens = list(ideal_gens)
    if not gens:
        raise ValueError("need at least one ideal generator")
    if not h:
        raise ValueError("seed annihilator is zero")
    for g in gens:
        if g.ring is not h.ring:
            raise ValueError("generators and seed live in different rings")
        if g * h:
            raise ValueError(f"seed does not annihilate the generator {g}")
    rounds = len(h.terms) + 1
    for _ in range(rounds):
        _, s = h.support_bounds()
        h_s = h.component(s)
        offender = None
        for g in gens:
            if g * h_s:
                offender = g
                break
        if offender is None:
            _verify(bool(h_s), "homogeneous annihilator vanished")
            return h_s
        t = None
        for grade, comp in reversed(offender.homogeneous_components()):
            if comp * h:
                t = grade
                break
        _verify(t is not None,
                "generator annihilates h yet not its top component")
        h = offender.component(t) * h
        _verify(bool(h), "descent step produced zero")
    raise TheoremViolationError("annihilator descent failed to terminate")


# -- colon-ideal gradedness -------------------------------------------------------


def check_colon_gradedness(ideal_kind: str, f: Element, g: Element,
                           cap: int = DEFAULT_POWER_CAP,
                           enum_cap: int = DEFAULT_ENUMERATION_CAP) -> dict:
    """Verify the componentwise law: f*g lies in the ideal iff every
    product of components f_i * g_k does.

    The law needs a graded radical ideal, so ideal_kind is restricted to
    "zero" (only on rings certified reduced), "nilradical", and "jacobson"
    (finite rings).  A failed biconditional raises TheoremViolationError.
    """
    ring = f.ring
    if g.ring is not ring:
        raise ValueError("f and g live in different rings")
    if not ring.grading.is_torsion_free():
        raise UnorderedGradingError(
            "the componentwise law needs an ordered grading")
    member = _ideal_membership_test(ring, ideal_kind, cap, enum_cap)
    fg = f * g
    fg_in = member(fg)
    pairs = []
    all_in = True
    for i, fi in f.homogeneous_components():
        for k, gk in g.homogeneous_components():
            ok = member(fi * gk)
            pairs.append({"i": str(i), "k": str(k), "in_ideal": ok})
            all_in = all_in and ok
    if fg_in != all_in:
        raise TheoremViolationError(
            f"componentwise law fails for the {ideal_kind} ideal: "
            f"fg in I is {fg_in} but all pairs in I is {all_in}")
    return {"ideal": ideal_kind, "fg_in_ideal": fg_in,
            "pairs": pairs, "biconditional_holds": True}


def _ideal_membership_test(ring, ideal_kind: str, cap: int, enum_cap: int):
    if ideal_kind == "zero":
        _require_reduced(ring, enum_cap)
        return lambda x: not x
    if ideal_kind == "nilradical":
        return lambda x: isinstance(is_nilpotent(x, cap), Nilpotent)
    if ideal_kind == "jacobson":
        if not _is_finite(ring):
            raise UnsupportedFamilyError(
                "jacobson membership is only decidable on finite rings here")
        tb = table_for(ring, enum_cap)
        return lambda x: bool(tb.jacobson[tb.ordinal(x)])
    raise ValueError(f"unknown ideal kind {ideal_kind!r}")


def _require_reduced(ring, enum_cap: int) -> None:
    """The zero ideal is radical exactly in reduced rings; refuse when the
    ring cannot be certified reduced."""
    if _is_finite(ring):
        tb = table_for(ring, enum_cap)
        if int(tb.nilpotents.sum()) == 1:
            return
        raise ValueError(
            "the zero ideal is not radical: the ring has nonzero nilpotents")
    if _is_free_monoid_ring(ring):
        base = ring.base
        if isinstance(base, IntegersMod):
            n = base.n
            if all(e == 1 for e in prime_factors(n).values()):
                return
            raise ValueError(
                f"the zero ideal is not radical: {n} is not squarefree")
        if base.kind in ("Z", "Q"):
            return
    raise ValueError(
        "cannot certify the ring is reduced; the componentwise law over the "
        "zero ideal needs a reduced ring")


# -- idempotents ------------------------------------------------------------------


def check_idempotent_homogeneity(f: Element) -> IdempotentReport:
    """Report whether f is idempotent and whether it is concentrated in
    degree zero.  For torsion-free gradings a non-homogeneous idempotent is
    a theorem violation; for torsion gradings it is reported as data."""
    ring = f.ring
    is_idem = (f * f == f)
    if not is_idem:
        return IdempotentReport(False, False, ())
    zero = ring.grading.zero()
    offending = tuple(g for g, _ in f.homogeneous_components() if g != zero)
    if offending and ring.grading.is_torsion_free():
        raise TheoremViolationError(
            "idempotent with nonzero-grade components under a torsion-free "
            f"grading: offending grades {[str(g) for g in offending]}")
    return IdempotentReport(True, not offending, offending)

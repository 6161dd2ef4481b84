"""Graded ring presentations and exact element arithmetic.

Elements are sparse maps from monomial keys to nonzero canonical scalars, kept
in a unique normal form, so equality is dict equality.  Ring handles interpret
the keys and provide the (key-dependent) coefficient arithmetic; everything an
element can do funnels through its ring's small key protocol, which is what
lets the direct product, trivial extension and associated graded constructions
reuse one Element class.

Quotients are handled by two reduction engines, chosen to keep normal forms
unique without general Groebner machinery:

* ``monic`` — relations that are monic and univariate in distinct generators
  (x^k maps to a lower-degree univariate polynomial; covers x^p - 1 and pure
  truncations x^k).
* ``linear`` — homogeneous relations over a field base, reduced one
  total-degree slice at a time by exact row reduction (covers quotients by
  homogeneous ideals such as spans of quadrics).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    InfiniteRingError,
    PresentationError,
    RingMismatchError,
    ScalarDomainError,
)
from .grading import Grade, GradingGroup
from .linalg import HomogeneousSlices
from .scalars import BaseRing, IntegersMod

DEFAULT_DEGREE_CAP = 12


@dataclass(frozen=True)
class Generator:
    name: str
    grade: Grade
    invertible: bool = False


class Element:
    """A ring element: ring handle plus a canonical {key: coeff} term map."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # already canonical; do not mutate

    # -- arithmetic --------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, Element) or other.ring is not self.ring:
            raise RingMismatchError(
                f"elements of different rings: {self.ring} vs "
                f"{getattr(other, 'ring', type(other))}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        self._same(other)
        return Element(self.ring, self.ring._add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, self.ring._neg_terms(self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Element(self.ring, self.ring._scalar_mul_terms(other, self.terms))
        self._same(other)
        return Element(self.ring, self.ring._mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ScalarDomainError("exponent must be an integer")
        if n < 0:
            inv = self.ring._single_term_inverse(self)
            if inv is None:
                raise ScalarDomainError(
                    "negative exponent on a non-unit (only single-term "
                    "invertible monomials may be inverted in place)"
                )
            return inv ** (-n)
        out = self.ring.one()
        p = self
        while n:
            if n & 1:
                out = out * p
            p = p * p if n > 1 else p
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.ring is self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- graded structure --------------------------------------------------

    def homogeneous_components(self):
        """[(grade, component)] with nonzero components, deterministic order."""
        groups: dict = {}
        for k, c in self.terms.items():
            groups.setdefault(self.ring.key_grade(k), {})[k] = c
        out = [(g, Element(self.ring, t)) for g, t in groups.items()]
        out.sort(key=lambda pair: pair[0].sort_token())
        return out

    def component(self, grade: Grade) -> "Element":
        t = {k: c for k, c in self.terms.items() if self.ring.key_grade(k) == grade}
        return Element(self.ring, t)

    def is_homogeneous(self) -> bool:
        grades = {self.ring.key_grade(k) for k in self.terms}
        return len(grades) <= 1

    def degree(self) -> Grade:
        grades = {self.ring.key_grade(k) for k in self.terms}
        if len(grades) != 1:
            raise ValueError("degree is defined only for nonzero homogeneous elements")
        return grades.pop()

    def support_grades(self):
        return sorted({self.ring.key_grade(k) for k in self.terms},
                      key=lambda g: g.sort_token())

    def support_bounds(self):
        """(least, greatest) support grade under the group's total order."""
        if not self.terms:
            raise ValueError("the zero element has empty support")
        grades = list({self.ring.key_grade(k) for k in self.terms})
        lo = hi = grades[0]
        for g in grades[1:]:
            if g < lo:
                lo = g
            if hi < g:
                hi = g
        return lo, hi

    def content_generators(self):
        """The homogeneous components, as generators of the content ideal."""
        return [c for _, c in self.homogeneous_components()]

    def coefficient(self, key):
        return self.terms.get(key, self.ring._coeff_zero(key))

    def __str__(self):
        return self.ring.format_element(self)

    __repr__ = __str__


class GradedRing:
    """Key-protocol base class; see the concrete rings below."""

    base: BaseRing | None
    grading: GradingGroup

    # Subclasses implement: key_grade, key_token, coeff_base(key),
    # _mul_terms (full product incl. reduction), _normalize(raw terms),
    # one_terms(), format_term(key, coeff); optionally finite_coordinates().

    # -- element construction ---------------------------------------------

    def element(self, terms: dict) -> Element:
        return Element(self, self._normalize(dict(terms)))

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, dict(self.one_terms()))

    def scalar(self, c) -> Element:
        """The image of a base-ring scalar (c times the identity)."""
        return Element(self, self._scalar_mul_terms(c, self.one_terms()))

    def sum(self, elems) -> Element:
        out = self.zero()
        for e in elems:
            out = out + e
        return out

    # -- generic term-map arithmetic ---------------------------------------

    def _coeff_zero(self, key):
        return self.coeff_base(key).zero

    def _add_terms(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for k, c in b.items():
            br = self.coeff_base(k)
            s = self._coeff_norm(k, br.add(out.get(k, br.zero), c))
            if br.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def _neg_terms(self, a: dict) -> dict:
        return {k: self._coeff_norm(k, self.coeff_base(k).neg(c)) for k, c in a.items()}

    def _scalar_mul_terms(self, c, a: dict) -> dict:
        out = {}
        for k, v in a.items():
            br = self.coeff_base(k)
            s = self._coeff_norm(k, br.mul(br.normalize(c), v))
            if not br.is_zero(s):
                out[k] = s
        return out

    def _coeff_norm(self, key, c):
        # Hook for rings whose coefficient domain depends on the key.
        return c

    def _single_term_inverse(self, f: Element):
        return None

    def is_nonneg_graded(self) -> bool:
        return False

    def finite_coordinates(self):
        """[(key, generator_value, count_modulus)] enumerating the ring as
        the direct sum over keys of the cyclic groups generator_value * Z
        inside the coefficient domain.  Raises InfiniteRingError otherwise."""
        raise InfiniteRingError(f"{self} is not enumerable")

    # -- printing -----------------------------------------------------------

    def format_element(self, f: Element) -> str:
        if not f.terms:
            return "0"
        items = sorted(f.terms.items(), key=lambda kv: self.key_token(kv[0]))
        parts = [self.format_term(k, c) for k, c in items]
        text = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                text += " - " + p[1:]
            else:
                text += " + " + p
        return text


# ---------------------------------------------------------------------------
# Presented rings (free monoid rings and their monic/linear quotients)
# ---------------------------------------------------------------------------


class PresentedRing(GradedRing):
    """base[x_1, ..., x_k] with graded generators, optionally invertible,
    optionally modulo relations handled by one of the reduction engines."""

    def __init__(self, base: BaseRing, grading: GradingGroup, gens,
                 relations=(), reduction="auto", degree_cap=DEFAULT_DEGREE_CAP):
        self.base = base
        self.grading = grading
        self.gens = tuple(gens)
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate generator names in {names}")
        for g in self.gens:
            if g.grade.group != grading:
                raise PresentationError(
                    f"generator {g.name} graded by {g.grade.group}, ring by {grading}")
        self._gen_index = {g.name: i for i, g in enumerate(self.gens)}
        self.degree_cap = degree_cap
        self._grade_cache: dict = {}

        self.relations = tuple(
            {tuple(m): c for m, c in dict(r).items()} for r in relations)
        for r in self.relations:
            self._validate_relation(r)
        self.reduction = self._pick_reduction(reduction)
        self._rules = None
        self._slices = None
        if self.reduction == "monic":
            self._rules = self._build_monic_rules()
        elif self.reduction == "linear":
            self._slices = self._build_slices()
        # re-normalize relation term maps through the engine? relations are
        # presented raw; they must reduce to zero in the quotient by design.

    # -- construction helpers ----------------------------------------------

    def _validate_relation(self, r: dict) -> None:
        if not r:
            raise PresentationError("the zero relation is not allowed")
        grades = set()
        for mono, c in r.items():
            mono = tuple(mono)
            if len(mono) != len(self.gens):
                raise PresentationError(f"relation monomial {mono} has wrong arity")
            for e, g in zip(mono, self.gens):
                if e < 0:
                    raise PresentationError(
                        f"relation uses a negative exponent on {g.name}")
                if e and g.invertible:
                    raise PresentationError(
                        f"relations on invertible generator {g.name} are not supported")
            if self.base.is_zero(self.base.normalize(c)):
                raise PresentationError("relation has a zero coefficient term")
            grades.add(self.key_grade(mono))
        if len(grades) != 1:
            raise PresentationError(
                f"relation is not homogeneous: grades {sorted(str(g) for g in grades)}")

    def _pick_reduction(self, reduction):
        if reduction not in ("auto", None, "none", "monic", "linear"):
            raise PresentationError(f"unknown reduction mode {reduction!r}")
        if reduction in (None, "none") or (reduction == "auto" and not self.relations):
            if self.relations:
                raise PresentationError("relations given but reduction disabled")
            return None
        if reduction == "auto":
            if self._monic_shape_ok():
                return "monic"
            return "linear"
        return reduction

    def _monic_shape_ok(self) -> bool:
        seen = set()
        for r in self.relations:
            var = self._univariate_var(r)
            if var is None or var in seen:
                return False
            lead = max(m[var] for m in r)
            if self.base.normalize(r.get(self._pure(var, lead), 0)) != self.base.one:
                return False
            seen.add(var)
        return True

    def _univariate_var(self, r: dict):
        support = {i for m in r for i, e in enumerate(m) if e}
        if len(support) > 1:
            return None
        return support.pop() if support else None

    def _pure(self, var: int, e: int) -> tuple:
        m = [0] * len(self.gens)
        m[var] = e
        return tuple(m)

    def _build_monic_rules(self):
        rules = {}
        for r in self.relations:
            var = self._univariate_var(r)
            if var is None:
                raise PresentationError(
                    f"monic reduction needs univariate relations; got {r}")
            if var in rules:
                raise PresentationError(
                    f"two relations constrain generator {self.gens[var].name}")
            lead = max(m[var] for m in r)
            lc = self.base.normalize(r.get(self._pure(var, lead), 0))
            if lc != self.base.one:
                raise PresentationError(
                    f"non-monic relation in {self.gens[var].name}: leading "
                    f"coefficient {self.base.format(lc)}")
            # x^lead = -(lower part)
            sub = {}
            for m, c in r.items():
                if m[var] != lead:
                    sub[m[var]] = self.base.neg(self.base.normalize(c))
            rules[var] = (lead, sub)
        return rules

    def _build_slices(self):
        if not self.base.is_field():
            raise PresentationError(
                "per-degree linear reduction needs a field base (Q or a prime "
                f"modulus); got {self.base}")
        if not self.grading.is_torsion_free():
            raise PresentationError(
                "per-degree linear reduction needs a torsion-free grading")
        zero = self.grading.zero()
        for g in self.gens:
            if g.grade < zero:
                raise PresentationError(
                    f"generator {g.name} has negative grade {g.grade}")
            if g.invertible:
                raise PresentationError(
                    "invertible generators are incompatible with linear reduction")
        for r in self.relations:
            degs = {sum(m) for m in r}
            if len(degs) != 1:
                raise PresentationError(
                    "linear reduction needs relations homogeneous in total degree")
        return HomogeneousSlices(self.base, len(self.gens),
                                 self.relations, self.degree_cap)

    # -- key protocol --------------------------------------------------------

    def gen(self, name: str) -> Element:
        i = self._gen_index[name]
        return self.element({self._pure(i, 1): 1})

    def gens_dict(self):
        return {g.name: self.gen(g.name) for g in self.gens}

    def one_terms(self):
        return {(0,) * len(self.gens): self.base.one}

    def coeff_base(self, key):
        return self.base

    def key_grade(self, key) -> Grade:
        g = self._grade_cache.get(key)
        if g is None:
            g = self.grading.zero()
            for e, gen in zip(key, self.gens):
                if e:
                    g = g + self.grading.scale(e, gen.grade)
            self._grade_cache[key] = g
        return g

    def key_token(self, key):
        return key

    def key_invertible(self, key) -> bool:
        return all(e == 0 or g.invertible for e, g in zip(key, self.gens))

    def _check_key(self, key):
        key = tuple(key)
        if len(key) != len(self.gens):
            raise PresentationError(f"monomial {key} has wrong arity")
        for e, g in zip(key, self.gens):
            if not isinstance(e, int):
                raise PresentationError(f"non-integer exponent in {key}")
            if e < 0 and not g.invertible:
                raise ScalarDomainError(
                    f"negative exponent on non-invertible generator {g.name}")
        return key

    def _normalize(self, terms: dict) -> dict:
        raw = {}
        for k, c in terms.items():
            k = self._check_key(k)
            c = self.base.normalize(c)
            if not self.base.is_zero(c):
                raw[k] = self.base.add(raw.get(k, self.base.zero), c)
                if self.base.is_zero(raw[k]):
                    del raw[k]
        return self._reduce(raw)

    def _reduce(self, raw: dict) -> dict:
        if self.reduction == "monic":
            return self._reduce_monic(raw)
        if self.reduction == "linear":
            return self._reduce_linear(raw)
        return raw

    def _reduce_monic(self, raw: dict) -> dict:
        out: dict = {}
        work = list(raw.items())
        while work:
            mono, c = work.pop()
            for var, (lead, sub) in self._rules.items():
                if mono[var] >= lead:
                    rest = list(mono)
                    rest[var] -= lead
                    rest = tuple(rest)
                    for e, s in sub.items():
                        m2 = list(rest)
                        m2[var] += e
                        work.append((tuple(m2), self.base.mul(c, s)))
                    break
            else:
                acc = self.base.add(out.get(mono, self.base.zero), c)
                if self.base.is_zero(acc):
                    out.pop(mono, None)
                else:
                    out[mono] = acc
        return out

    def _reduce_linear(self, raw: dict) -> dict:
        by_deg: dict[int, dict] = {}
        for m, c in raw.items():
            by_deg.setdefault(sum(m), {})[m] = c
        out = {}
        for d, vec in by_deg.items():
            for m, c in self._slices.reduce(d, vec).items():
                out[m] = c
        return out

    def _mul_terms(self, a: dict, b: dict) -> dict:
        raw: dict = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                c = self.base.mul(c1, c2)
                acc = self.base.add(raw.get(k, self.base.zero), c)
                if self.base.is_zero(acc):
                    raw.pop(k, None)
                else:
                    raw[k] = acc
        return self._reduce(raw)

    def _single_term_inverse(self, f: Element):
        if len(f.terms) != 1:
            return None
        (k, c), = f.terms.items()
        if not self.key_invertible(k):
            return None
        ci = self.base.inverse_of(c)
        if ci is None:
            return None
        return self.element({tuple(-e for e in k): ci})

    def is_nonneg_graded(self) -> bool:
        if not self.grading.is_torsion_free():
            return False
        zero = self.grading.zero()
        for g in self.gens:
            if g.grade < zero or (g.invertible and g.grade != zero):
                return False
        return True

    def quotient(self, relations, reduction="auto", degree_cap=None) -> "PresentedRing":
        """A new ring with the same generators modulo the given relations.

        Relations may be Elements of this (relation-free) ring or raw term
        maps.  The source ring must itself be free of relations."""
        if self.relations:
            raise PresentationError("quotients must be taken from a free ring")
        rel_maps = []
        for r in relations:
            if isinstance(r, Element):
                if r.ring is not self:
                    raise RingMismatchError("relation element from a different ring")
                rel_maps.append(dict(r.terms))
            else:
                rel_maps.append(dict(r))
        return PresentedRing(self.base, self.grading, self.gens, rel_maps,
                             reduction=reduction,
                             degree_cap=degree_cap or self.degree_cap)

    def convert(self, f: Element) -> Element:
        """Re-normalize an element of the free cover in this quotient."""
        if not isinstance(f, Element) or f.ring.gens != self.gens:
            raise RingMismatchError("element does not come from a compatible cover")
        return self.element(dict(f.terms))

    def ideal_membership(self, extra_gens, target, degree_cap=None):
        """Certificate that target lies in (relations + extra_gens), by
        per-degree linear solving; None when no combination exists below the
        degree cap.  Field base only."""
        slices = HomogeneousSlices(
            self.base, len(self.gens),
            list(self.relations) + [dict(g.terms) for g in extra_gens],
            degree_cap or self.degree_cap, track=True)
        return slices.membership(dict(target.terms))

    def finite_coordinates(self):
        if not isinstance(self.base, IntegersMod):
            raise InfiniteRingError(f"base {self.base} is infinite")
        if self.reduction == "linear":
            raise InfiniteRingError("linear-reduction quotients are not enumerable")
        bounds = []
        for i, g in enumerate(self.gens):
            if g.invertible:
                raise InfiniteRingError(f"generator {g.name} is invertible")
            if self.reduction != "monic" or i not in self._rules:
                raise InfiniteRingError(f"generator {g.name} is unbounded")
            bounds.append(self._rules[i][0])
        keys = sorted(itertools.product(*(range(b) for b in bounds)))
        return [(k, 1, self.base.n) for k in keys]

    def format_term(self, key, coeff) -> str:
        facs = []
        for e, g in zip(key, self.gens):
            if e == 1:
                facs.append(g.name)
            elif e:
                facs.append(f"{g.name}^{e}")
        if not facs:
            return self.base.format(coeff)
        body = "*".join(facs)
        if coeff == self.base.one:
            return body
        if coeff == self.base.normalize(-1) and self.base.kind != "Zmod":
            return f"-{body}"
        return f"{self.base.format(coeff)}*{body}"

    def __str__(self):
        names = ", ".join(g.name + ("^±1" if g.invertible else "") for g in self.gens)
        s = f"{self.base}[{names}]" if names else str(self.base)
        if self.relations:
            s += f" / ({len(self.relations)} relations)"
        return s + f" graded by {self.grading}"


# -- convenience builders ---------------------------------------------------


def polynomial_ring(base, names, grades=None, grading=None,
                    invertible=False) -> PresentedRing:
    """Free monoid ring on the given generator names.

    grades default to 1 each in a fresh Z grading; pass explicit Grade values
    together with their grading group for anything else."""
    names = [n.strip() for n in names.split(",")] if isinstance(names, str) else list(names)
    names = [n for n in names if n]
    if grading is None:
        grading = GradingGroup.free_lex(1)
    if grades is None:
        grades = [grading.grade(1)] * len(names)
    gens = [Generator(n, g, invertible) for n, g in zip(names, grades)]
    return PresentedRing(base, grading, gens)


def laurent_ring(base, names, grades=None, grading=None) -> PresentedRing:
    """Monoid ring with all generators invertible (Laurent polynomials)."""
    return polynomial_ring(base, names, grades, grading, invertible=True)


def base_as_ring(base) -> PresentedRing:
    """The base ring itself, trivially graded (no generators)."""
    return PresentedRing(base, GradingGroup.free_lex(1), [])


def group_ring(base, grading: GradingGroup) -> PresentedRing:
    """base[G] for a cyclic group G = Z/mZ, graded by G itself.

    One generator g of grade 1 with the monic relation g^m = 1."""
    if grading.is_torsion_free():
        raise PresentationError("group_ring expects a cyclic grading group")
    m = grading.modulus
    free = PresentedRing(base, grading, [Generator("g", grading.grade(1))])
    rel = {(m,): 1, (0,): -1}
    return free.quotient([rel], reduction="monic")


# ---------------------------------------------------------------------------
# Direct product of two non-negatively graded rings, graded over Z
# ---------------------------------------------------------------------------


class ProductRing(GradedRing):
    """R x S with R in non-negative degrees and S reflected into negative
    ones: T_0 = R_0 x S_0, T_n = R_n x 0, T_-n = 0 x S_n for n > 0."""

    def __init__(self, left: GradedRing, right: GradedRing):
        for side, r in (("left", left), ("right", right)):
            if not r.is_nonneg_graded():
                raise PresentationError(
                    f"product factors must be graded in non-negative degrees; "
                    f"{side} factor {r} is not")
            if r.grading.kind != "free_lex" or r.grading.rank != 1:
                raise PresentationError("product factors must be Z-graded")
        self.left = left
        self.right = right
        self.base = None  # no single scalar base acts on both factors
        self.grading = GradingGroup.free_lex(1)

    def pair(self, f: Element, g: Element) -> Element:
        if f.ring is not self.left or g.ring is not self.right:
            raise RingMismatchError("pair expects (left-factor, right-factor) elements")
        terms = {}
        for k, c in f.terms.items():
            terms[(0, k)] = c
        for k, c in g.terms.items():
            terms[(1, k)] = c
        return Element(self, terms)

    def split(self, f: Element):
        lt, rt = {}, {}
        for (side, k), c in f.terms.items():
            (lt if side == 0 else rt)[k] = c
        return Element(self.left, lt), Element(self.right, rt)

    def one_terms(self):
        return self.pair(self.left.one(), self.right.one()).terms

    def coeff_base(self, key):
        side, k = key
        return (self.left if side == 0 else self.right).coeff_base(k)

    def key_grade(self, key) -> Grade:
        side, k = key
        inner = (self.left if side == 0 else self.right).key_grade(k)
        n = inner.value[0]
        return self.grading.grade(n if side == 0 else -n)

    def key_token(self, key):
        side, k = key
        token = (self.left if side == 0 else self.right).key_token(k)
        return (side,) + tuple(token)

    def _coeff_norm(self, key, c):
        side, k = key
        return (self.left if side == 0 else self.right)._coeff_norm(k, c)

    def _normalize(self, terms: dict) -> dict:
        lt, rt = {}, {}
        for (side, k), c in terms.items():
            (lt if side == 0 else rt)[k] = c
        return self.pair(self.left.element(lt), self.right.element(rt)).terms

    def _mul_terms(self, a: dict, b: dict) -> dict:
        fl, fr = self.split(Element(self, a))
        gl, gr = self.split(Element(self, b))
        return self.pair(fl * gl, fr * gr).terms

    def _scalar_mul_terms(self, c, a: dict) -> dict:
        fl, fr = self.split(Element(self, a))
        return self.pair(c * fl, c * fr).terms

    def finite_coordinates(self):
        out = [((0, k), g, m) for k, g, m in self.left.finite_coordinates()]
        out += [((1, k), g, m) for k, g, m in self.right.finite_coordinates()]
        return out

    def format_element(self, f: Element) -> str:
        l, r = self.split(f)
        return f"({l}, {r})"

    def format_term(self, key, coeff) -> str:  # pragma: no cover - unused
        side, k = key
        inner = (self.left if side == 0 else self.right).format_term(k, coeff)
        return f"({inner}, 0)" if side == 0 else f"(0, {inner})"

    def __str__(self):
        return f"({self.left}) x ({self.right})"


# ---------------------------------------------------------------------------
# Trivial extension (idealization) R ⋉ M for a principal graded ideal M
# ---------------------------------------------------------------------------


class TrivialExtensionRing(GradedRing):
    """R ⋉ M with M = (h) for a single-term homogeneous h: pairs (r, m) with
    (r, m)(r', m') = (rr', rm' + r'm), graded by S_n = R_n x M_n."""

    def __init__(self, carrier: PresentedRing, h: Element):
        if not isinstance(carrier, PresentedRing) or carrier.reduction == "linear":
            raise PresentationError(
                "trivial extensions are supported over monomial-basis rings")
        if h.ring is not carrier or len(h.terms) != 1:
            raise PresentationError(
                "the module generator must be a single-term element of the carrier")
        if not isinstance(carrier.base, IntegersMod):
            raise PresentationError("trivial extensions need a Zmod base")
        self.carrier = carrier
        self.module_gen = h
        self.base = carrier.base
        self.grading = carrier.grading
        if carrier.reduction == "monic":
            # the ideal (h) must stay aligned with the monomial coordinates
            try:
                coords = carrier.finite_coordinates()
            except InfiniteRingError as e:
                raise PresentationError(
                    "trivial extensions over monic quotients need a finite "
                    "monomial basis") from e
            (hk, hc), = h.terms.items()
            for k, _, _ in coords:
                if len(carrier._mul_terms({hk: hc}, {k: 1})) > 1:
                    raise PresentationError(
                        f"({h}) is not aligned with the monomial basis")

    def _module_coord_gen(self, mono):
        """Generator d of the coefficient subgroup of (h) at the given
        monomial, or None when (h) has no support there."""
        n = self.base.n
        d = 0
        (hk, hc), = self.module_gen.terms.items()
        if self.carrier.reduction is None:
            rest = tuple(m - e for m, e in zip(mono, hk))
            if all(e >= 0 for e in rest):
                d = gcd(n, hc)
        else:
            # finite basis: collect every basis monomial whose h-multiple
            # lands on mono
            for k, _, _ in self.carrier.finite_coordinates():
                prod = self.carrier._mul_terms({hk: hc}, {k: 1})
                if list(prod.keys()) == [mono]:
                    d = gcd(gcd(n, prod[mono]), d)
        return d or None

    def embed(self, r: Element) -> Element:
        if r.ring is not self.carrier:
            raise RingMismatchError("embed expects a carrier element")
        return Element(self, {(0, k): c for k, c in r.terms.items()})

    def module_part(self, m: Element) -> Element:
        """The pair (0, m); m must lie in the ideal (h)."""
        if m.ring is not self.carrier:
            raise RingMismatchError("module_part expects a carrier element")
        return self.element({(1, k): c for k, c in m.terms.items()})

    def split(self, f: Element):
        rt, mt = {}, {}
        for (side, k), c in f.terms.items():
            (rt if side == 0 else mt)[k] = c
        return Element(self.carrier, rt), Element(self.carrier, mt)

    def one_terms(self):
        (k, c), = self.carrier.one().terms.items()
        return {(0, k): c}

    def coeff_base(self, key):
        return self.base

    def key_grade(self, key) -> Grade:
        return self.carrier.key_grade(key[1])

    def key_token(self, key):
        return (key[0],) + tuple(self.carrier.key_token(key[1]))

    def _normalize(self, terms: dict) -> dict:
        rt, mt = {}, {}
        for (side, k), c in terms.items():
            (rt if side == 0 else mt)[k] = c
        r = self.carrier.element(rt)
        m = self.carrier.element(mt)
        for k, c in m.terms.items():
            d = self._module_coord_gen(k)
            if d is None or c % d:
                raise ScalarDomainError(
                    f"module part {m} does not lie in the ideal "
                    f"({self.module_gen})")
        out = {(0, k): c for k, c in r.terms.items()}
        out.update({(1, k): c for k, c in m.terms.items()})
        return out

    def _mul_terms(self, a: dict, b: dict) -> dict:
        fr, fm = self.split(Element(self, a))
        gr, gm = self.split(Element(self, b))
        r = fr * gr
        m = fr * gm + gr * fm
        out = {(0, k): c for k, c in r.terms.items()}
        out.update({(1, k): c for k, c in m.terms.items()})
        return out

    def _scalar_mul_terms(self, c, a: dict) -> dict:
        fr, fm = self.split(Element(self, a))
        r, m = c * fr, c * fm
        out = {(0, k): v for k, v in r.terms.items()}
        out.update({(1, k): v for k, v in m.terms.items()})
        return out

    def is_nonneg_graded(self) -> bool:
        return self.carrier.is_nonneg_graded()

    def finite_coordinates(self):
        out = [((0, k), g, m) for k, g, m in self.carrier.finite_coordinates()]
        n = self.base.n
        for k, _, _ in self.carrier.finite_coordinates():
            d = self._module_coord_gen(k)
            if d is not None:
                out.append(((1, k), d, n // d))
        return out

    def format_element(self, f: Element) -> str:
        r, m = self.split(f)
        return f"({r}, {m})"

    def format_term(self, key, coeff) -> str:  # pragma: no cover - unused
        return self.carrier.format_term(key[1], coeff)

    def __str__(self):
        return f"({self.carrier}) ⋉ ({self.module_gen})"


# ---------------------------------------------------------------------------
# Associated graded ring of a principal ideal (g) in Z/nZ
# ---------------------------------------------------------------------------


class AssociatedGradedRing(GradedRing):
    """gr(Z/nZ) along powers of (g): degree-k slice is (g)^k / (g)^(k+1).

    The degree-k coefficient is stored as its canonical integer: a multiple
    of d_k = gcd(n, g^k) reduced mod d_{k+1}.  The formal degree marker is
    printed as t, so (1 + t-part) style sums read naturally."""

    def __init__(self, n: int, g: int):
        self._ambient = IntegersMod(n)
        g %= n
        if self._ambient.is_unit(g):
            raise PresentationError(f"({g}) is the whole ring Z/{n}Z")
        self.n = n
        self.g = g
        ds = [1]
        while True:
            ds.append(gcd(n, ds[-1] * g))
            if ds[-1] == ds[-2]:
                break
        self.depth = len(ds) - 2  # slices 0 .. depth-1 are the nonzero ones
        self._d = ds  # d[k] = gcd(n, g^k), stabilized tail included
        self.base = IntegersMod(ds[1]) if ds[1] > 1 else IntegersMod(n)
        self.grading = GradingGroup.free_lex(1)

    def _dk(self, k: int) -> int:
        return self._d[min(k, len(self._d) - 1)]

    def slice_class(self, k: int, value: int) -> Element:
        """The class of value (a multiple of g^k, degree k) in slice k."""
        return self.element({k: value})

    def coeff_base(self, key):
        return self._ambient  # arithmetic mod n, then key-level reduction

    def _coeff_norm(self, key, c):
        return c % self._dk(key + 1)

    def key_grade(self, key) -> Grade:
        return self.grading.grade(key)

    def key_token(self, key):
        return (key,)

    def one_terms(self):
        return {0: 1}

    def _normalize(self, terms: dict) -> dict:
        out = {}
        for k, c in terms.items():
            if not isinstance(k, int) or k < 0:
                raise PresentationError(f"bad slice degree {k!r}")
            c = self._coeff_norm(k, c % self.n)
            if c % self._dk(k):
                raise ScalarDomainError(
                    f"{c} does not lie in slice {k} (the image of ({self.g})^{k})")
            if c:
                out[k] = c
        return out

    def _mul_terms(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                c = (out.get(k, 0) + c1 * c2) % self._dk(k + 1)
                if c:
                    out[k] = c
                else:
                    out.pop(k, None)
        return out

    def is_nonneg_graded(self) -> bool:
        return True

    def finite_coordinates(self):
        out = []
        for k in range(self.depth):
            dk, dk1 = self._dk(k), self._dk(k + 1)
            if dk1 // dk > 1:
                out.append((k, dk, dk1 // dk))
        return out

    def format_term(self, key, coeff) -> str:
        if key == 0:
            return str(coeff)
        t = "t" if key == 1 else f"t^{key}"
        return t if coeff == 1 else f"{coeff}*{t}"

    def __str__(self):
        return f"gr(Z/{self.n}Z along ({self.g}))"


# ---------------------------------------------------------------------------
# Regrading along a group morphism
# ---------------------------------------------------------------------------


class RegradedRing(GradedRing):
    """The same ring with grades pushed through an additive map."""

    def __init__(self, inner: GradedRing, target: GradingGroup, grade_map):
        self.inner = inner
        self.base = inner.base
        self.grading = target
        self._map = grade_map

    def key_grade(self, key) -> Grade:
        return self._map(self.inner.key_grade(key))

    def __getattr__(self, name):
        # Everything except grading behaves exactly like the inner ring.
        return getattr(self.inner, name)

    def gen(self, name: str) -> Element:
        return self.element(dict(self.inner.gen(name).terms))

    def element(self, terms: dict) -> Element:
        return Element(self, self.inner._normalize(dict(terms)))

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, dict(self.inner.one_terms()))

    def coeff_base(self, key):
        return self.inner.coeff_base(key)

    def key_token(self, key):
        return self.inner.key_token(key)

    def _coeff_norm(self, key, c):
        return self.inner._coeff_norm(key, c)

    def _normalize(self, terms):
        return self.inner._normalize(terms)

    def _mul_terms(self, a, b):
        return self.inner._mul_terms(a, b)

    def _scalar_mul_terms(self, c, a):
        return self.inner._scalar_mul_terms(c, a)

    def one_terms(self):
        return self.inner.one_terms()

    def format_term(self, key, coeff):
        return self.inner.format_term(key, coeff)

    def format_element(self, f: Element) -> str:
        return GradedRing.format_element(self, f)

    def is_nonneg_graded(self) -> bool:
        if not self.grading.is_torsion_free():
            return False
        if isinstance(self.inner, PresentedRing):
            zero = self.grading.zero()
            return all(not (self._map(g.grade) < zero) for g in self.inner.gens)
        return False

    def __str__(self):
        return f"{self.inner} regraded by {self.grading}"


def regrade(ring: GradedRing, target: GradingGroup, images) -> RegradedRing:
    """Push the grading through the additive map sending the source group
    generators to the given target grades.

    For a free source of rank d, ``images`` lists d target grades; for a
    cyclic source Z/mZ it is the single image of 1, which must satisfy
    m * image = 0 (otherwise the data defines no additive map)."""
    src = ring.grading
    if src.is_torsion_free():
        imgs = list(images) if isinstance(images, (list, tuple)) else [images]
        if len(imgs) != src.rank:
            raise PresentationError(
                f"need {src.rank} generator images, got {len(imgs)}")
        for im in imgs:
            if im.group != target:
                raise PresentationError("image grades must lie in the target group")

        def grade_map(g: Grade) -> Grade:
            out = target.zero()
            for v, im in zip(g.value, imgs):
                out = out + target.scale(v, im)
            return out
    else:
        im = images[0] if isinstance(images, (list, tuple)) else images
        if im.group != target:
            raise PresentationError("image grade must lie in the target group")
        if target.scale(src.modulus, im) != target.zero():
            raise PresentationError(
                f"map not additive on provided data: {src.modulus} * {im} != 0")

        def grade_map(g: Grade) -> Grade:
            return target.scale(g.value, im)

    out = RegradedRing(ring, target, grade_map)
    # A quotient stays graded only if every relation is still homogeneous.
    for r in getattr(ring, "relations", ()):
        grades = {out.key_grade(m) for m in r}
        if len(grades) != 1:
            raise PresentationError(
                "a relation becomes non-homogeneous under the new grading")
    return out

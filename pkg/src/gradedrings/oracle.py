"""Brute-force oracle for finite graded rings.

A :class:`FiniteRingTable` enumerates every element of a finite ring and
computes the classical predicate sets straight from their definitions:

* unit        — some g with f*g = 1 (the scan also records the inverse),
* zero divisor — some g != 0 with f*g = 0 (a witness is recorded),
* nilpotent   — power iteration reaches 0 (minimal exponents recorded),
* idempotent  — f*f = f,
* Jacobson radical — computed two independent ways ({f : 1 + f*r is a unit
  for every r} and the intersection of the maximal ideals coming from the
  prime list) and asserted equal,
* primes      — preimages of the projection kernels of R/nil(R), which is a
  finite product of finite fields located through its primitive idempotents;
  each returned set is then re-verified prime by exhaustive scan.

Elements are stored by ordinal.  Multiplication goes through the ring's own
element arithmetic, distilled once into integer structure constants over the
enumeration coordinates (each coordinate is a cyclic group with its own
modulus, so mixed-characteristic constructions fit too); a full ordinal-level
product table is cached only for rings of at most 256 elements.  numpy is
used purely for batched integer arithmetic — everything stays exact.
"""

from __future__ import annotations

import numpy as np

from .algebra import Element
from .errors import CapExceededError, TheoremViolationError

DEFAULT_ENUMERATION_CAP = 65536
FULL_TABLE_LIMIT = 256


class FiniteRingTable:
    def __init__(self, ring, cap: int = DEFAULT_ENUMERATION_CAP):
        self.ring = ring
        self.coords = ring.finite_coordinates()  # [(key, gen_value, modulus)]
        self.B = len(self.coords)
        n_total = 1
        for _, _, m in self.coords:
            n_total *= m
        if n_total > cap:
            raise CapExceededError(
                f"ring has {n_total} elements, beyond the enumeration cap {cap}")
        self.N = n_total
        self.M = np.array([m for _, _, m in self.coords], dtype=np.int64)
        self.gen_values = [g for _, g, _ in self.coords]
        # mixed-radix weights; G[o] is the count vector of ordinal o
        w = np.ones(self.B, dtype=np.int64)
        for i in range(1, self.B):
            w[i] = w[i - 1] * self.M[i - 1]
        self.w = w
        ords = np.arange(self.N, dtype=np.int64)
        self.G = (ords[:, None] // w[None, :]) % self.M[None, :]
        # structure constants from the ring's own arithmetic
        self.T = np.zeros((self.B, self.B, self.B), dtype=np.int64)
        index = {k: i for i, (k, _, _) in enumerate(self.coords)}
        for a, (ka, ga, _) in enumerate(self.coords):
            for b, (kb, gb, _) in enumerate(self.coords):
                prod = ring._mul_terms({ka: ga}, {kb: gb})
                for k, c in prod.items():
                    ci = index[k]
                    count, rem = divmod(c, self.gen_values[ci])
                    if rem:
                        raise TheoremViolationError(
                            "basis product leaves the coordinate lattice")
                    self.T[a, b, ci] = count % self.M[ci]
        self.one_ord = self.ordinal(ring.one())
        self.zero_ord = 0
        # grade classes partition the coordinates
        classes: dict = {}
        for i, (k, _, _) in enumerate(self.coords):
            classes.setdefault(ring.key_grade(k), []).append(i)
        self.grade_classes = sorted(
            ((g, np.array(ix)) for g, ix in classes.items()),
            key=lambda pair: pair[0].sort_token())
        self._ptable = None
        if self.N <= FULL_TABLE_LIMIT:
            tbl = np.empty((self.N, self.N), dtype=np.int64)
            for o in range(self.N):
                tbl[o] = self.mul_row(o)
            self._ptable = tbl
        self._scan = None
        self._nil = None
        self._idem = None
        self._primes = None
        self._jac = None

    # -- conversions ---------------------------------------------------------

    def element(self, o: int) -> Element:
        terms = {}
        for i, (k, g, _) in enumerate(self.coords):
            c = int(self.G[o, i])
            if c:
                terms[k] = self.ring.coeff_base(k).normalize(c * g)
        return self.ring.element(terms)

    def ordinal(self, f: Element) -> int:
        vec = np.zeros(self.B, dtype=np.int64)
        index = {k: i for i, (k, _, _) in enumerate(self.coords)}
        for k, c in f.terms.items():
            i = index[k]
            count, rem = divmod(int(c), self.gen_values[i])
            if rem:
                raise ValueError(f"{f} is not on the enumeration lattice")
            vec[i] = count % self.M[i]
        return int(vec @ self.w)

    def elements(self):
        return (self.element(o) for o in range(self.N))

    # -- arithmetic ----------------------------------------------------------

    def _vec_ords(self, vecs) -> np.ndarray:
        return vecs @ self.w

    def mul_row(self, o: int) -> np.ndarray:
        """Ordinals of f*g for f = ordinal o and every g, in ordinal order."""
        if self._ptable is not None:
            return self._ptable[o]
        f = self.G[o]
        A = np.tensordot(f, self.T, axes=(0, 0))  # (B, B): A[b, c]
        rows = (self.G @ A) % self.M[None, :]
        return self._vec_ords(rows)

    def mul(self, o1: int, o2: int) -> int:
        if self._ptable is not None:
            return int(self._ptable[o1, o2])
        v = np.einsum("i,j,ijk->k", self.G[o1], self.G[o2], self.T) % self.M
        return int(v @ self.w)

    def add(self, o1: int, o2: int) -> int:
        v = (self.G[o1] + self.G[o2]) % self.M
        return int(v @ self.w)

    def sub(self, o1: int, o2: int) -> int:
        v = (self.G[o1] - self.G[o2]) % self.M
        return int(v @ self.w)

    def _square_all(self, vecs: np.ndarray) -> np.ndarray:
        return np.einsum("ni,nj,ijk->nk", vecs, vecs, self.T) % self.M[None, :]

    def _mul_vecs(self, va: np.ndarray, vb: np.ndarray) -> np.ndarray:
        return np.einsum("ni,nj,ijk->nk", va, vb, self.T) % self.M[None, :]

    # -- definitional predicate scans -----------------------------------------

    def _full_scan(self):
        """One pass per element: unit + inverse, zero divisor + witness, and
        the route-(a) Jacobson membership (needs the unit mask, hence two
        sweeps)."""
        if self._scan is not None:
            return self._scan
        N = self.N
        units = np.zeros(N, dtype=bool)
        inverse = np.full(N, -1, dtype=np.int64)
        zd = np.zeros(N, dtype=bool)
        zd_wit = np.full(N, -1, dtype=np.int64)
        for o in range(N):
            row = self.mul_row(o)
            hits = np.nonzero(row == self.one_ord)[0]
            if hits.size:
                units[o] = True
                inverse[o] = hits[0]
            if o != self.zero_ord:
                zeros = np.nonzero(row == self.zero_ord)[0]
                zeros = zeros[zeros != self.zero_ord]
                if zeros.size:
                    zd[o] = True
                    zd_wit[o] = zeros[0]
        # route (a) Jacobson: 1 + f*r a unit for every r
        jac_a = np.zeros(N, dtype=bool)
        one_vec = self.G[self.one_ord]
        for o in range(N):
            if units[o]:
                continue  # a unit f fails at r = -f^-1 unless 0 = 1
            f = self.G[o]
            A = np.tensordot(f, self.T, axes=(0, 0))
            rows = (self.G @ A) % self.M[None, :]
            shifted = (rows + one_vec[None, :]) % self.M[None, :]
            jac_a[o] = bool(units[self._vec_ords(shifted)].all())
        # in a nonzero ring a unit u has 1 + u*(-u^-1) = 0, not a unit
        self._scan = {
            "units": units, "inverse": inverse,
            "zerodivisors": zd, "zd_witness": zd_wit,
            "jacobson_a": jac_a,
        }
        # sanity: finite commutative ring = units ∪ zero divisors ∪ {0}
        rest = ~units & ~zd
        rest[self.zero_ord] = False
        if rest.any():
            raise TheoremViolationError(
                "element neither unit nor zero divisor in a finite ring")
        return self._scan

    @property
    def units(self) -> np.ndarray:
        return self._full_scan()["units"]

    @property
    def inverses(self) -> np.ndarray:
        return self._full_scan()["inverse"]

    @property
    def zerodivisors(self) -> np.ndarray:
        return self._full_scan()["zerodivisors"]

    @property
    def zd_witnesses(self) -> np.ndarray:
        return self._full_scan()["zd_witness"]

    def _nil_scan(self):
        if self._nil is not None:
            return self._nil
        # repeated squaring: f nilpotent iff f^(2^s) = 0 once 2^s >= N
        P = self.G.copy()
        s = 1
        while s < self.N:
            P = self._square_all(P)
            s *= 2
        nil = ~P.any(axis=1)
        # minimal exponents by linear power iteration on the members
        exps: dict[int, int] = {}
        members = np.nonzero(nil)[0]
        cur = self.G[members]
        base = self.G[members]
        k = 1
        alive = np.nonzero(cur.any(axis=1))[0]
        for o in members[~cur.any(axis=1)]:
            exps[int(o)] = 1  # only the zero element
        while alive.size:
            cur_alive = self._mul_vecs(cur[alive], base[alive])
            cur[alive] = cur_alive
            k += 1
            dead = ~cur_alive.any(axis=1)
            for o in members[alive[dead]]:
                exps[int(o)] = k
            alive = alive[~dead]
            if k > self.N + 1:
                raise TheoremViolationError("nilpotency exponent exceeded |R|")
        if self.N <= 4096:
            self.assert_ideal(nil, "nilradical")
        self._nil = (nil, exps)
        return self._nil

    @property
    def nilpotents(self) -> np.ndarray:
        return self._nil_scan()[0]

    @property
    def nilpotency_exponents(self) -> dict[int, int]:
        return self._nil_scan()[1]

    @property
    def idempotents(self) -> np.ndarray:
        if self._idem is None:
            sq = self._square_all(self.G)
            self._idem = (sq == self.G).all(axis=1)
        return self._idem

    # -- ideals, radicals, primes ---------------------------------------------

    def assert_ideal(self, mask: np.ndarray, name: str) -> None:
        members = np.nonzero(mask)[0]
        if not mask[self.zero_ord]:
            raise TheoremViolationError(f"{name} misses 0")
        V = self.G[members]
        # additive closure
        for v in V:
            ords = self._vec_ords((V + v[None, :]) % self.M[None, :])
            if not mask[ords].all():
                raise TheoremViolationError(f"{name} is not additively closed")
        # external multiplication
        for o in members:
            if not mask[self.mul_row(int(o))].all():
                raise TheoremViolationError(f"{name} is not an ideal")

    @property
    def nilradical(self) -> np.ndarray:
        nil = self.nilpotents
        return nil

    @property
    def jacobson(self) -> np.ndarray:
        """Route (a) definition, asserted equal to route (b) and (for finite
        commutative rings) to the nilradical."""
        if self._jac is None:
            jac_a = self._full_scan()["jacobson_a"]
            inter = np.ones(self.N, dtype=bool)
            for p in self.primes:
                inter &= p  # every prime of a finite commutative ring is maximal
            if (jac_a != inter).any():
                raise TheoremViolationError(
                    "Jacobson radical routes disagree: definition vs "
                    "intersection of maximal ideals")
            if (jac_a != self.nilradical).any():
                raise TheoremViolationError(
                    "Jacobson radical differs from the nilradical in a "
                    "finite commutative ring")
            self._jac = jac_a
        return self._jac

    def _quot_reps(self):
        """Coset representatives modulo the nilradical: rep[o] = least
        ordinal of o + nil."""
        nil_members = np.nonzero(self.nilpotents)[0]
        rep = np.full(self.N, np.iinfo(np.int64).max, dtype=np.int64)
        for o in nil_members:
            shifted = self._vec_ords((self.G + self.G[int(o)][None, :]) % self.M[None, :])
            rep = np.minimum(rep, shifted)
        return rep

    @property
    def primes(self):
        """Prime ideals as boolean masks, via primitive idempotents of R/nil."""
        if self._primes is not None:
            return self._primes
        nil = self.nilpotents
        rep = self._quot_reps()
        reps = np.unique(rep)
        # idempotents of R/nil: z with z^2 ≡ z
        q_idem = [int(z) for z in reps
                  if rep[self.mul(int(z), int(z))] == rep[int(z)]]
        nonzero = [z for z in q_idem if rep[z] != rep[self.zero_ord]]
        # atoms: e primitive iff the only idempotents under it are 0 and e
        prim = []
        for e in nonzero:
            under = [z for z in nonzero
                     if rep[self.mul(z, e)] == rep[z] and rep[z] != rep[e]]
            if not under:
                prim.append(e)
        prim.sort()
        # orthogonal decomposition of 1
        s = self.zero_ord
        for e in prim:
            s = self.add(s, e)
        if rep[s] != rep[self.one_ord]:
            raise TheoremViolationError(
                "primitive idempotents do not sum to 1 modulo the nilradical")
        for i, e in enumerate(prim):
            for e2 in prim[i + 1:]:
                if rep[self.mul(e, e2)] != rep[self.zero_ord]:
                    raise TheoremViolationError(
                        "primitive idempotents are not orthogonal mod nil")
        self._factor_fields_check(rep, reps, prim)
        out = []
        for e in prim:
            row = np.empty(self.N, dtype=np.int64)
            for o in range(self.N):
                row[o] = self.mul(o, e)
            mask = nil[row]
            self._assert_prime(mask)
            out.append(mask)
        self._primes = out
        self._primitive_idempotents_mod_nil = prim
        return out

    def _factor_fields_check(self, rep, reps, prim):
        # each e*(R/nil) must be a finite field with identity e
        for e in prim:
            factor = sorted({int(rep[self.mul(int(z), e)]) for z in reps})
            erep = rep[e]
            zero = rep[self.zero_ord]
            for wv in factor:
                if wv == zero:
                    continue
                if not any(rep[self.mul(wv, u)] == erep for u in factor):
                    raise TheoremViolationError(
                        "a factor of R/nil is not a field")

    def _assert_prime(self, mask: np.ndarray) -> None:
        if mask[self.one_ord] or not mask[self.zero_ord]:
            raise TheoremViolationError("prime candidate is trivial")
        comp = np.nonzero(~mask)[0]
        for a in comp:
            row = self.mul_row(int(a))[comp]
            if mask[row].any():
                raise TheoremViolationError(
                    "prime candidate fails the exhaustive primality scan")

    def minimal_primes(self):
        ps = self.primes
        out = []
        for i, p in enumerate(ps):
            if not any(j != i and not (q & ~p).any() for j, q in enumerate(ps)):
                out.append(p)
        return out

    # -- graded structure -------------------------------------------------------

    def components_of(self, o: int):
        """[(grade, ordinal of the component)] for the element of ordinal o."""
        v = self.G[int(o)]
        out = []
        for g, ix in self.grade_classes:
            comp = np.zeros(self.B, dtype=np.int64)
            comp[ix] = v[ix]
            if comp.any():
                out.append((g, int(comp @ self.w)))
        return out

    def is_graded_subset(self, mask: np.ndarray):
        """(True, None) or (False, witness) where witness = (member ordinal,
        grade, component ordinal) with the component outside the set."""
        members = np.nonzero(mask)[0]
        V = self.G[members]
        for g, ix in self.grade_classes:
            comp = np.zeros_like(V)
            comp[:, ix] = V[:, ix]
            ords = self._vec_ords(comp)
            bad = np.nonzero(~mask[ords])[0]
            if bad.size:
                m = int(members[bad[0]])
                return False, (m, g, int(ords[bad[0]]))
        return True, None

    def graded_part(self, mask: np.ndarray) -> np.ndarray:
        """The largest graded ideal inside an ideal: the one generated by the
        ideal's homogeneous elements.

        Cross-checked (for rings of at most 512 elements) against the direct
        description: elements all of whose components lie in the ideal."""
        if self.N <= 4096:
            self.assert_ideal(mask, "graded_part input")
        members = np.nonzero(mask)[0]
        homog = [int(o) for o in members if len(self.components_of(int(o))) <= 1]
        out = self.ideal_generated_by(homog)
        if (out & ~mask).any():
            raise TheoremViolationError("graded part escapes the set")
        ok, _ = self.is_graded_subset(out)
        if not ok:
            raise TheoremViolationError("graded part is not graded")
        if self.N <= 512:
            direct = np.zeros(self.N, dtype=bool)
            for o in range(self.N):
                direct[o] = all(mask[c] for _, c in self.components_of(o))
            if (out != direct).any():
                raise TheoremViolationError(
                    "graded part disagrees with the componentwise description")
        return out

    def ideal_generated_by(self, gens) -> np.ndarray:
        """Membership mask of the ideal generated by the given ordinals,
        folded as a sum of the cyclic module closures R*g."""
        arr = np.array([self.zero_ord], dtype=np.int64)
        for g in gens:
            rg = np.unique(self.mul_row(int(g)))
            if np.isin(rg, arr).all():
                continue  # R*g already inside, skip the subgroup sum
            pieces = []
            cur = self.G[arr]
            for r in rg:
                shifted = (cur + self.G[int(r)][None, :]) % self.M[None, :]
                pieces.append(self._vec_ords(shifted))
            arr = np.unique(np.concatenate(pieces))
            if arr.size == self.N:
                break
        out = np.zeros(self.N, dtype=bool)
        out[arr] = True
        return out

    def annihilator_mask(self, o: int) -> np.ndarray:
        return self.mul_row(int(o)) == self.zero_ord

    def idempotent_closure(self, o: int):
        """(k, e): the least k >= 1 with f^k = f^(2k); e = f^k is idempotent."""
        seen = {}
        p = int(o)
        k = 1
        while p not in seen:
            seen[p] = k
            p = self.mul(p, int(o))
            k += 1
        j, period = seen[p], k - seen[p]
        kk = period * ((j + period - 1) // period)
        kk = max(kk, 1)
        e = int(o)
        for _ in range(kk - 1):
            e = self.mul(e, int(o))
        if self.mul(e, e) != e:
            raise TheoremViolationError("idempotent closure failed")
        return kk, e

    # -- the degree-zero subring ------------------------------------------------

    def degree_zero_subtable(self) -> "FiniteRingTable":
        zero_grade = self.ring.grading.zero()
        keep = [i for i, (k, _, _) in enumerate(self.coords)
                if self.ring.key_grade(k) == zero_grade]
        return _SubringTable(self, keep)

    # -- reporting ---------------------------------------------------------------

    def report(self) -> dict:
        nil_ok, nil_wit = self.is_graded_subset(self.nilradical)
        jac_ok, jac_wit = self.is_graded_subset(self.jacobson)
        idem = np.nonzero(self.idempotents)[0]
        rep = {
            "schema": 1,
            "ring": str(self.ring),
            "cardinality": int(self.N),
            "units": int(self.units.sum()),
            "zerodivisors": int(self.zerodivisors.sum()),
            "nilpotents": int(self.nilpotents.sum()),
            "idempotents": [str(self.element(int(o))) for o in idem],
            "primes": [int(p.sum()) for p in self.primes],
            "nilradical_graded": bool(nil_ok),
            "jacobson_graded": bool(jac_ok),
        }
        if not nil_ok:
            rep["nilradical_witness"] = str(self.element(nil_wit[0]))
        if not jac_ok:
            rep["jacobson_witness"] = str(self.element(jac_wit[0]))
        return rep


class _SubringTable(FiniteRingTable):
    """A FiniteRingTable over a coordinate-aligned subring (degree zero)."""

    def __init__(self, parent: FiniteRingTable, keep: list):
        self.ring = parent.ring
        self.coords = [parent.coords[i] for i in keep]
        self.B = len(self.coords)
        self.M = parent.M[keep]
        self.gen_values = [parent.gen_values[i] for i in keep]
        self.N = int(np.prod(self.M)) if self.B else 1
        w = np.ones(self.B, dtype=np.int64)
        for i in range(1, self.B):
            w[i] = w[i - 1] * self.M[i - 1]
        self.w = w
        ords = np.arange(self.N, dtype=np.int64)
        self.G = (ords[:, None] // w[None, :]) % self.M[None, :]
        self.T = parent.T[np.ix_(keep, keep, keep)]
        # closure check: degree-zero products stay in degree zero
        full = parent.T[np.ix_(keep, keep)]  # (b, b, B_parent)
        outside = np.delete(full, keep, axis=2)
        if outside.any():
            raise TheoremViolationError("degree-zero part is not closed")
        one_vec = parent.G[parent.one_ord][keep]
        if (parent.G[parent.one_ord].sum() != one_vec.sum()):
            raise TheoremViolationError("identity is not in degree zero")
        self.one_ord = int(one_vec @ w)
        self.zero_ord = 0
        classes: dict = {}
        for i, (k, _, _) in enumerate(self.coords):
            classes.setdefault(self.ring.key_grade(k), []).append(i)
        self.grade_classes = sorted(
            ((g, np.array(ix)) for g, ix in classes.items()),
            key=lambda pair: pair[0].sort_token())
        self._ptable = None
        if self.N <= FULL_TABLE_LIMIT:
            self._ptable = None  # built lazily through mul_row like the parent
        self._scan = None
        self._nil = None
        self._idem = None
        self._primes = None
        self._jac = None
        self._parent = parent
        self._keep = keep

    def parent_ordinal(self, o: int) -> int:
        v = np.zeros(self._parent.B, dtype=np.int64)
        v[self._keep] = self.G[int(o)]
        return int(v @ self._parent.w)


def enumerate_ring(ring, cap: int = DEFAULT_ENUMERATION_CAP) -> FiniteRingTable:
    return FiniteRingTable(ring, cap)

"""Exact linear algebra on total-degree slices of a homogeneous ideal.

A homogeneous ideal I = (r_1, ..., r_m) in a free polynomial ring over a
field meets the degree-d slice in the span of {mono * r_j : deg(mono) =
d - deg(r_j)}.  Row-reducing that span (exactly, over Q or Z/pZ) gives a
unique normal form for cosets and a membership test with an explicit
combination certificate.  Slices are built lazily and memoized; degrees above
the cap raise instead of silently truncating.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapExceededError, PresentationError


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, lex-descending."""
    if num_vars == 0:
        return ((),) if degree == 0 else ()
    if num_vars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(num_vars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


class HomogeneousSlices:
    def __init__(self, field, num_vars: int, relations, cap: int, track: bool = False):
        self.field = field
        self.num_vars = num_vars
        self.cap = cap
        self.track = track
        self.relations = []
        self.rel_degrees = []
        for r in relations:
            r = {tuple(m): field.normalize(c) for m, c in r.items()
                 if not field.is_zero(field.normalize(c))}
            degs = {sum(m) for m in r}
            if len(degs) != 1:
                raise PresentationError(
                    "slice reduction needs total-degree homogeneous relations")
            self.relations.append(r)
            self.rel_degrees.append(degs.pop())
        self._rows: dict[int, list] = {}

    # -- row echelon construction -------------------------------------------

    def _pivot(self, vec: dict):
        return max(vec)  # lex-greatest exponent tuple

    def _axpy(self, vec: dict, c, row: dict) -> dict:
        # vec - c * row, in place on a copy
        f = self.field
        out = dict(vec)
        for m, v in row.items():
            s = f.sub(out.get(m, f.zero), f.mul(c, v))
            if f.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return out

    def rows(self, degree: int) -> list:
        """Reduced echelon rows of the degree-d slice of the ideal: a list of
        (pivot monomial, unit-pivot row vector, combination)."""
        if degree in self._rows:
            return self._rows[degree]
        if degree > self.cap:
            raise CapExceededError(
                f"total degree {degree} exceeds the slice cap {self.cap}")
        f = self.field
        rows: list = []
        for j, rel in enumerate(self.relations):
            shift = degree - self.rel_degrees[j]
            if shift < 0:
                continue
            for mono in monomials_of_degree(self.num_vars, shift):
                vec = {tuple(a + b for a, b in zip(mono, m)): c
                       for m, c in rel.items()}
                combo = {(mono, j): f.one} if self.track else None
                vec, combo = self._eliminate(rows, vec, combo)
                if not vec:
                    continue
                piv = self._pivot(vec)
                inv = f.inverse_of(vec[piv])
                vec = {m: f.mul(inv, c) for m, c in vec.items()}
                if combo is not None:
                    combo = {k: f.mul(inv, c) for k, c in combo.items()}
                # keep rows mutually reduced so normal forms are unique
                for i, (p, rvec, rcombo) in enumerate(rows):
                    c = rvec.get(piv)
                    if c is not None:
                        nvec = self._axpy(rvec, c, vec)
                        ncombo = rcombo
                        if self.track:
                            ncombo = dict(rcombo)
                            for k, v in combo.items():
                                s = f.sub(ncombo.get(k, f.zero), f.mul(c, v))
                                if f.is_zero(s):
                                    ncombo.pop(k, None)
                                else:
                                    ncombo[k] = s
                        rows[i] = (p, nvec, ncombo)
                rows.append((piv, vec, combo))
        rows.sort(key=lambda r: r[0], reverse=True)
        self._rows[degree] = rows
        return rows

    def _eliminate(self, rows, vec, combo):
        f = self.field
        for piv, rvec, rcombo in rows:
            c = vec.get(piv)
            if c is None:
                continue
            vec = self._axpy(vec, c, rvec)
            if combo is not None:
                for k, v in rcombo.items():
                    s = f.sub(combo.get(k, f.zero), f.mul(c, v))
                    if f.is_zero(s):
                        combo.pop(k, None)
                    else:
                        combo[k] = s
        return vec, combo

    def rank(self, degree: int) -> int:
        return len(self.rows(degree))

    # -- coset normal form and membership ------------------------------------

    def reduce(self, degree: int, vec: dict) -> dict:
        f = self.field
        vec = {tuple(m): f.normalize(c) for m, c in vec.items()
               if not f.is_zero(f.normalize(c))}
        out, _ = self._eliminate(self.rows(degree), vec, None)
        return out

    def membership(self, target: dict):
        """If target (homogeneous) lies in the ideal, return the certificate
        [((shift monomial, relation index), coeff)] with
        target = sum coeff * shift * relation; else None."""
        f = self.field
        target = {tuple(m): f.normalize(c) for m, c in target.items()
                  if not f.is_zero(f.normalize(c))}
        if not target:
            return []
        degs = {sum(m) for m in target}
        if len(degs) != 1:
            raise PresentationError("membership expects a homogeneous target")
        if not self.track:
            raise PresentationError("membership needs track=True slices")
        combo: dict = {}
        vec, combo = self._eliminate(self.rows(degs.pop()), target, combo)
        if vec:
            return None
        # target - sum combo = 0, so target = sum of (-combo) entries
        return [(k, f.neg(c)) for k, c in sorted(combo.items())]

"""Base (coefficient) rings: Z, Q and Z/nZ, with exact scalar arithmetic.

Values are plain Python objects in canonical form: ``int`` for Z and Z/nZ
(least non-negative residue), ``fractions.Fraction`` for Q (already reduced,
positive denominator).  The ring object carries the operations, including the
three structural queries the decision procedures lean on:

* unit test with inverse (extended Euclid for Z/nZ),
* minimal nilpotency exponent (a is nilpotent mod n iff every prime of n
  divides a; the exponent is found below bitlength(n)),
* annihilator generator in Z/nZ: {c : c*a = 0} = (n // gcd(n, a)).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ScalarDomainError

INTEGERS = "Z"
RATIONALS = "Q"
INTEGERS_MOD = "Zmod"


class BaseRing:
    """Common interface; concrete rings below."""

    kind: str

    def normalize(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_field(self) -> bool:
        return False

    def inverse_of(self, a):
        """Multiplicative inverse of ``a``, or None if a is not a unit."""
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        return self.inverse_of(a) is not None

    def nilpotency_exponent(self, a):
        """Least k >= 1 with a^k = 0, or None if a is not nilpotent."""
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))


class IntegerRing(BaseRing):
    kind = INTEGERS

    def normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ScalarDomainError(f"{value!r} is not an integer")
        return value

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inverse_of(self, a):
        return a if a in (1, -1) else None

    def nilpotency_exponent(self, a):
        return 1 if a == 0 else None

    def __str__(self):
        return "Z"


class RationalRing(BaseRing):
    kind = RATIONALS

    def normalize(self, value):
        if isinstance(value, bool):
            raise ScalarDomainError(f"{value!r} is not a rational")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, Fraction):
            return value
        raise ScalarDomainError(f"{value!r} is not a rational")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_field(self):
        return True

    def inverse_of(self, a):
        return None if a == 0 else 1 / Fraction(a)

    def nilpotency_exponent(self, a):
        return 1 if a == 0 else None

    def __str__(self):
        return "Q"


class IntegersMod(BaseRing):
    kind = INTEGERS_MOD

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise ScalarDomainError(f"modulus must be an integer >= 2, got {n!r}")
        self.n = n

    def normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ScalarDomainError(f"{value!r} is not an integer residue")
        return value % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def is_field(self):
        return _is_prime(self.n)

    def inverse_of(self, a):
        a %= self.n
        g, x, _ = _xgcd(a, self.n)
        return x % self.n if g == 1 else None

    def nilpotency_exponent(self, a):
        # a^ceil(log2 n) = 0 iff a is nilpotent mod n, so bitlength(n) powers
        # settle the question; the minimal exponent is then found linearly.
        a %= self.n
        cutoff = self.n.bit_length()
        if pow(a, cutoff, self.n) != 0:
            return None
        p, k = a, 1
        while p != 0:
            p = (p * a) % self.n
            k += 1
        return k

    def annihilator_generator(self, a) -> int:
        """Generator of {c : c*a = 0 mod n}; a = 0 gives 1 (everything)."""
        a %= self.n
        return self.n // gcd(self.n, a)

    def elements(self):
        return range(self.n)

    def format(self, a) -> str:
        return str(a % self.n)

    def __str__(self):
        return f"Z/{self.n}"


def _xgcd(a: int, b: int):
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> dict[int, int]:
    """n >= 1 factored as {prime: multiplicity} by trial division."""
    if n < 1:
        raise ScalarDomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def crt(residues: list[int], moduli: list[int]) -> int:
    """Solve x = r_i mod m_i for pairwise coprime m_i; least non-negative x."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        g, inv, _ = _xgcd(m % mi, mi)
        if g != 1:
            raise ScalarDomainError("crt moduli are not coprime")
        x += m * (((r - x) * inv) % mi)
        m *= mi
    return x % m


ZZ = IntegerRing()
QQ = RationalRing()


def Zmod(n: int) -> IntegersMod:
    return IntegersMod(n)

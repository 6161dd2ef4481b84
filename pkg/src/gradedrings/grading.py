"""Grading groups and grades.

Two families of grading groups are supported:

* ``FreeLex(rank)`` — the free abelian group Z^rank, totally ordered
  lexicographically.  Rank 1 is plain Z with its usual order.
* ``Cyclic(m)`` — Z/mZ, a torsion group.  It carries no compatible total
  order, so any comparison raises :class:`UnorderedGradingError`; such groups
  exist here to grade the counterexample rings.

Grades are value objects tied to their group; mixing groups raises
:class:`GroupMismatchError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import GroupMismatchError, UnorderedGradingError

# Free ranks beyond this are refused at construction; raise if you need more.
DEFAULT_MAX_RANK = 8

FREE_LEX = "free_lex"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class GradingGroup:
    """A totally ordered free group Z^rank (lex) or a cyclic torsion group."""

    kind: str
    rank: int = 0      # free rank when kind == FREE_LEX
    modulus: int = 0   # m when kind == CYCLIC

    @staticmethod
    def free_lex(rank: int = 1, max_rank: int = DEFAULT_MAX_RANK) -> "GradingGroup":
        if not 1 <= rank <= max_rank:
            raise ValueError(f"free grading rank must be in 1..{max_rank}, got {rank}")
        return GradingGroup(FREE_LEX, rank=rank)

    @staticmethod
    def cyclic(modulus: int) -> "GradingGroup":
        if modulus < 2:
            raise ValueError(f"cyclic grading modulus must be >= 2, got {modulus}")
        return GradingGroup(CYCLIC, modulus=modulus)

    def is_torsion_free(self) -> bool:
        return self.kind == FREE_LEX

    def grade(self, value) -> "Grade":
        """Canonicalize ``value`` into a Grade of this group."""
        if self.kind == FREE_LEX:
            if isinstance(value, int):
                value = (value,)
            value = tuple(value)
            if len(value) != self.rank or not all(isinstance(v, int) for v in value):
                raise ValueError(f"grade {value!r} does not lie in Z^{self.rank}")
            return Grade(self, value)
        return Grade(self, int(value) % self.modulus)

    def zero(self) -> "Grade":
        if self.kind == FREE_LEX:
            return Grade(self, (0,) * self.rank)
        return Grade(self, 0)

    def add(self, a: "Grade", b: "Grade") -> "Grade":
        self._claim(a), self._claim(b)
        if self.kind == FREE_LEX:
            return Grade(self, tuple(x + y for x, y in zip(a.value, b.value)))
        return Grade(self, (a.value + b.value) % self.modulus)

    def neg(self, a: "Grade") -> "Grade":
        self._claim(a)
        if self.kind == FREE_LEX:
            return Grade(self, tuple(-x for x in a.value))
        return Grade(self, (-a.value) % self.modulus)

    def scale(self, n: int, a: "Grade") -> "Grade":
        self._claim(a)
        if self.kind == FREE_LEX:
            return Grade(self, tuple(n * x for x in a.value))
        return Grade(self, (n * a.value) % self.modulus)

    def compare(self, a: "Grade", b: "Grade") -> int:
        """Lexicographic comparison; -1/0/+1.  Torsion groups are unordered."""
        self._claim(a), self._claim(b)
        if self.kind == CYCLIC:
            raise UnorderedGradingError(
                f"unordered grading group Z/{self.modulus}: grades admit no total order"
            )
        return (a.value > b.value) - (a.value < b.value)

    def _claim(self, g: "Grade") -> None:
        if not isinstance(g, Grade) or g.group != self:
            raise GroupMismatchError(f"grade {g!r} does not belong to group {self!r}")

    def __str__(self) -> str:
        if self.kind == FREE_LEX:
            return "Z" if self.rank == 1 else f"Z^{self.rank} lex"
        return f"Z/{self.modulus}"


@total_ordering
@dataclass(frozen=True)
class Grade:
    """An element of a grading group.  Comparable only within its group."""

    group: GradingGroup
    value: tuple | int

    def __add__(self, other: "Grade") -> "Grade":
        return self.group.add(self, other)

    def __sub__(self, other: "Grade") -> "Grade":
        return self.group.add(self, self.group.neg(other))

    def __neg__(self) -> "Grade":
        return self.group.neg(self)

    def __lt__(self, other: "Grade") -> bool:
        return self.group.compare(self, other) < 0

    def is_zero(self) -> bool:
        return self == self.group.zero()

    def sort_token(self):
        # Deterministic tie-break token valid for both group kinds.
        return self.value if isinstance(self.value, tuple) else (self.value,)

    def __str__(self) -> str:
        if isinstance(self.value, tuple):
            return str(self.value[0]) if len(self.value) == 1 else str(self.value)
        return str(self.value)

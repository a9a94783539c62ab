"""Finite abelian groups in invariant-factor form, with the dual-group pairing.

A group is ``Z/n_1 x ... x Z/n_k`` and an element is a tuple of reduced
residues.  The dual group of characters is canonically identified with the
group itself: the character with residues ``t`` sends ``alpha`` to the root
of unity with exponent ``sum_i t_i * alpha_i / n_i`` mod 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import lcm, prod

import numpy as np

from .errors import StructuralError
from .unitscalar import UnitScalar

GroupElt = tuple[int, ...]
#: Dual characters use the same residue tuples as group elements.
DualChar = tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """``Z/n_1 x ... x Z/n_k`` with componentwise arithmetic."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if not factors:
            raise StructuralError("at least one invariant factor is required")
        if any(n < 1 for n in factors):
            raise StructuralError(f"invariant factors must be >= 1, got {factors}")
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def zero(self) -> GroupElt:
        return (0,) * self.rank

    @property
    def exponent(self) -> int:
        return lcm(*self.factors)

    def element(self, residues) -> GroupElt:
        """Reduce arbitrary integer residues to the canonical tuple."""
        residues = tuple(int(r) for r in residues)
        if len(residues) != self.rank:
            raise StructuralError(
                f"element has {len(residues)} residues, group has rank {self.rank}"
            )
        return tuple(r % n for r, n in zip(residues, self.factors))

    def check(self, a: GroupElt) -> GroupElt:
        if len(a) != self.rank or any(not 0 <= r < n for r, n in zip(a, self.factors)):
            raise StructuralError(f"{a} is not a reduced element of {self}")
        return a

    def add(self, a: GroupElt, b: GroupElt) -> GroupElt:
        self.check(a), self.check(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def neg(self, a: GroupElt) -> GroupElt:
        self.check(a)
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def scale(self, k: int, a: GroupElt) -> GroupElt:
        self.check(a)
        return tuple((k * x) % n for x, n in zip(a, self.factors))

    def elements(self):
        """All elements in lexicographic order (the canonical enumeration)."""
        return (tuple(t) for t in product(*(range(n) for n in self.factors)))

    def index(self, a: GroupElt) -> int:
        """Position of ``a`` in the lexicographic enumeration (mixed radix)."""
        self.check(a)
        idx = 0
        for r, n in zip(a, self.factors):
            idx = idx * n + r
        return idx

    def element_at(self, idx: int) -> GroupElt:
        if not 0 <= idx < self.order:
            raise StructuralError(f"index {idx} out of range for order {self.order}")
        residues = []
        for n in reversed(self.factors):
            residues.append(idx % n)
            idx //= n
        return tuple(reversed(residues))

    @cached_property
    def add_index_table(self) -> np.ndarray:
        """``(order, order)`` table of ``index(a + b)``, used by vectorized checks."""
        elts = list(self.elements())
        table = np.empty((self.order, self.order), dtype=np.int64)
        for i, a in enumerate(elts):
            for j, b in enumerate(elts):
                table[i, j] = self.index(self.add(a, b))
        table.setflags(write=False)
        return table

    @cached_property
    def neg_index_table(self) -> np.ndarray:
        table = np.array([self.index(self.neg(a)) for a in self.elements()], dtype=np.int64)
        table.setflags(write=False)
        return table

    def pairing_exponent(self, chi: DualChar, alpha: GroupElt) -> Fraction:
        """Exponent of ``chi(alpha)``: ``sum_i t_i * alpha_i / n_i`` mod 1."""
        self.check(chi), self.check(alpha)
        total = sum(
            (Fraction(t * a, n) for t, a, n in zip(chi, alpha, self.factors)),
            Fraction(0),
        )
        return total % 1

    def pairing(self, chi: DualChar, alpha: GroupElt) -> UnitScalar:
        """Evaluate the dual character ``chi`` on ``alpha``."""
        return UnitScalar(self.pairing_exponent(chi, alpha))

    def dual_generators(self) -> list[DualChar]:
        """One generator per invariant factor: the standard basis tuples."""
        gens = []
        for i in range(self.rank):
            g = [0] * self.rank
            g[i] = 1 % self.factors[i]
            gens.append(tuple(g))
        return gens

    def __str__(self) -> str:
        return " x ".join(f"Z/{n}" for n in self.factors)

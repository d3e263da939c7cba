"""Finite abelian groups Z_{d1} x ... x Z_{dr} and their characters.

Character values are never complex floats.  A value is the integer exponent
``a`` of a fixed primitive e-th root of unity ``zeta``, where e is the group
exponent, so ``chi(g) = zeta**a``.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

GroupElement = tuple[int, ...]


class InvalidGroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteAbelianGroup:
    cyclic_orders: tuple[int, ...]
    exponent: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cyclic_orders", tuple(int(d) for d in self.cyclic_orders))
        if not self.cyclic_orders:
            raise InvalidGroupError("a group needs at least one cyclic factor")
        if any(d < 2 for d in self.cyclic_orders):
            raise InvalidGroupError(f"cyclic orders must be >= 2, got {self.cyclic_orders}")
        object.__setattr__(self, "exponent", math.lcm(*self.cyclic_orders))

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    def __len__(self) -> int:
        return self.order

    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def element(self, coords: Sequence[int]) -> GroupElement:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(int(c) % d for c, d in zip(coords, self.cyclic_orders))

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % d for a, b, d in zip(g, h, self.cyclic_orders))

    def neg(self, g: GroupElement) -> GroupElement:
        return tuple(-a % d for a, d in zip(g, self.cyclic_orders))

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic order of coordinates."""
        return itertools.product(*(range(d) for d in self.cyclic_orders))

    def element_array(self) -> np.ndarray:
        """Elements as rows of an (order, rank) integer array, lexicographic."""
        return np.array(list(self.elements()), dtype=np.int64).reshape(self.order, self.rank)

    def index(self, g: GroupElement) -> int:
        idx = 0
        for a, d in zip(g, self.cyclic_orders):
            idx = idx * d + a
        return idx

    def element_order(self, g: GroupElement) -> int:
        return math.lcm(*(d // math.gcd(a, d) for a, d in zip(g, self.cyclic_orders)))

    def generators(self) -> list[GroupElement]:
        """The standard generators, one per cyclic factor."""
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def scales(self) -> np.ndarray:
        """Multipliers e/d_i turning Z_{d_i} coordinates into Z_e exponents."""
        return np.array([self.exponent // d for d in self.cyclic_orders], dtype=np.int64)


def make_group(orders: Sequence[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))


def is_elementary_2(group: FiniteAbelianGroup) -> bool:
    """True iff every non-identity element has order two."""
    return all(d == 2 for d in group.cyclic_orders)


@dataclass(frozen=True)
class Character:
    """The character chi_h(g) = zeta_e ** sum_i h_i g_i (e / d_i)."""

    group: FiniteAbelianGroup
    exponent_vector: GroupElement

    def __call__(self, g: GroupElement) -> int:
        e = self.group.exponent
        return sum(h * a * (e // d) for h, a, d in
                   zip(self.exponent_vector, g, self.group.cyclic_orders)) % e

    def __mul__(self, other: Character) -> Character:
        if other.group != self.group:
            return NotImplemented
        return Character(self.group, self.group.add(self.exponent_vector, other.exponent_vector))

    def conjugate(self) -> Character:
        return Character(self.group, self.group.neg(self.exponent_vector))

    def is_trivial(self) -> bool:
        return not any(self.exponent_vector)


def characters(group: FiniteAbelianGroup) -> list[Character]:
    """All |G| characters, indexed by exponent vectors in lexicographic order."""
    return [Character(group, h) for h in group.elements()]


def character_table(group: FiniteAbelianGroup, elements: np.ndarray | None = None) -> np.ndarray:
    """Exponent table T[h, g] = chi_h(g) mod e.

    Rows follow the character order of :func:`characters`; columns follow
    ``elements`` (default: all group elements in lexicographic order).
    """
    chars = group.element_array()
    if elements is None:
        elements = chars
    elements = np.asarray(elements, dtype=np.int64).reshape(-1, group.rank)
    return (chars * group.scales()) @ elements.T % group.exponent

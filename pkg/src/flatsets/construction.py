"""Flat unit vectors from characters restricted to a difference set.

A vector is stored as exponents a_1..a_k modulo the root order e; its entries
are zeta_e**a_j / sqrt(k).  Inner products are sums of roots of unity, so
every angle |x* y|^2 is an exact rational.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from flatsets import cyclo
from flatsets.graphs import Action, BipartiteGraph, regular_action_difference_set, verify_distance_regular
from flatsets.groups import FiniteAbelianGroup, character_table
from flatsets.spectra import Spectrum, spectrum_from_array

PAIR_BLOCK = 256


@dataclass(frozen=True, eq=False)
class FlatVectorSet:
    dimension: int
    root_order: int
    vectors: np.ndarray
    alpha: Fraction | None = None

    def __post_init__(self) -> None:
        vecs = np.asarray(self.vectors, dtype=np.int64).reshape(-1, self.dimension) % self.root_order
        vecs.setflags(write=False)
        object.__setattr__(self, "vectors", vecs)

    def __len__(self) -> int:
        return self.vectors.shape[0]

    @property
    def n(self) -> int:
        return len(self)

    def to_complex(self) -> np.ndarray:
        """Floating-point view, for display only."""
        return np.exp(2j * np.pi * self.vectors / self.root_order) / np.sqrt(self.dimension)


def godsil_roy(graph: BipartiteGraph, group: FiniteAbelianGroup, action: Action, y: int, z: int,
               spectrum: Spectrum | None = None) -> FlatVectorSet:
    """Characters of ``group`` restricted to D = {g : z^g ~ y}, normalised.

    Vectors follow the lexicographic order of character exponent vectors and
    coordinates follow the group-element order of D.  ``alpha`` is
    theta_1^2 / k^2, computed from the verified intersection numbers unless a
    spectrum is supplied.
    """
    diff = regular_action_difference_set(graph, group, action, y, z)
    if spectrum is None:
        spectrum = spectrum_from_array(verify_distance_regular(graph))
    table = character_table(group, np.array(diff, dtype=np.int64))
    return FlatVectorSet(len(diff), group.exponent, table, spectrum.nontrivial_angle())


def _one_hot(vectors: np.ndarray, e: int) -> np.ndarray:
    return (vectors[:, :, None] == np.arange(e)).astype(np.int64)


def inner_product_counts(left: np.ndarray, right: np.ndarray, e: int) -> np.ndarray:
    """counts[x, y, r] = #{j : right[y, j] - left[x, j] = r mod e}.

    k * x*y equals sum_r counts[x, y, r] zeta**r.
    """
    lo, ro = _one_hot(left, e), _one_hot(right, e)
    counts = np.zeros((left.shape[0], right.shape[0], e), dtype=np.int64)
    for r in range(e):
        for s in range(e):
            counts[:, :, r] += lo[:, :, s] @ ro[:, :, (s + r) % e].T
    return counts


def gram_coordinates(s: FlatVectorSet) -> np.ndarray:
    """k times the Gram matrix, as coordinates over Z in the basis 1, zeta, ..."""
    return cyclo.reduce_counts(inner_product_counts(s.vectors, s.vectors, s.root_order), s.root_order)


def angle_numerators(s: FlatVectorSet) -> np.ndarray:
    """k^2 |x* y|^2 for every ordered pair, as an integer matrix."""
    n, e = s.n, s.root_order
    out = np.empty((n, n), dtype=np.int64)
    for start in range(0, n, PAIR_BLOCK):
        block = s.vectors[start:start + PAIR_BLOCK]
        out[start:start + block.shape[0]] = cyclo.abs2(inner_product_counts(block, s.vectors, e), e)
    return out


def angle_set(s: FlatVectorSet) -> set[Fraction]:
    """Distinct angles |x* y|^2 over pairs of distinct vectors."""
    if s.n < 2:
        return set()
    nums = angle_numerators(s)
    off = nums[~np.eye(s.n, dtype=bool)]
    k2 = s.dimension**2
    return {Fraction(int(v), k2) for v in np.unique(off)}


def norms_squared(s: FlatVectorSet) -> list[Fraction]:
    nums = angle_numerators(s) if s.n else np.zeros((0, 0), dtype=np.int64)
    return [Fraction(int(nums[i, i]), s.dimension**2) for i in range(s.n)]


def is_real(s: FlatVectorSet) -> bool:
    """True iff every entry is +-1/sqrt(k)."""
    return bool(np.all(2 * s.vectors % s.root_order == 0))


def is_zero_alpha_set(s: FlatVectorSet, alpha: Fraction | None = None) -> bool:
    alpha = s.alpha if alpha is None else alpha
    return angle_set(s) <= {Fraction(0), alpha}


def unbiased_bases(s: FlatVectorSet) -> list[list[int]] | None:
    """Split the set into mutually unbiased orthonormal bases, if it is one.

    In a union of mutually unbiased bases, two vectors are orthogonal exactly
    when they lie in the same basis, so the bases are the components of the
    orthogonality graph.  Returns None when the set is not of this form.
    """
    k, n = s.dimension, s.n
    if n == 0 or n % k:
        return None
    nums = angle_numerators(s)
    orth = nums == 0
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in np.nonzero(orth[u])[0]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(int(v))
        parts.append(sorted(comp))
    for part in parts:
        if len(part) != k or not orth[np.ix_(part, part)][~np.eye(k, dtype=bool)].all():
            return None
    label = np.empty(n, dtype=np.int64)
    for i, part in enumerate(parts):
        label[part] = i
    across = label[:, None] != label[None, :]
    # |x* y|^2 = 1/k between bases, i.e. numerator k
    if not np.all(nums[across] == k):
        return None
    return parts


def format_vectors(s: FlatVectorSet) -> str:
    alpha = s.alpha if s.alpha is not None else "none"
    if isinstance(alpha, Fraction):
        alpha = f"{alpha.numerator}/{alpha.denominator}"
    lines = [f"n={s.n} k={s.dimension} e={s.root_order} alpha={alpha}"]
    lines += [" ".join(map(str, row)) for row in s.vectors.tolist()]
    return "\n".join(lines) + "\n"


def parse_vectors(text: str) -> FlatVectorSet:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = dict(part.split("=") for part in lines[0].split())
    n, k, e = int(header["n"]), int(header["k"]), int(header["e"])
    alpha = None if header["alpha"] == "none" else Fraction(header["alpha"])
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != k for r in rows):
        raise ValueError("vector file body does not match its header")
    return FlatVectorSet(k, e, np.array(rows, dtype=np.int64).reshape(n, k), alpha)


def _normalised(vectors: np.ndarray, e: int, phases: bool) -> list[tuple[int, ...]]:
    """Rows as tuples; with ``phases`` each row is rotated to start at exponent 0."""
    if phases:
        vectors = (vectors - vectors[:, :1]) % e
    return [tuple(r) for r in vectors.tolist()]


def find_permutation_match(left: FlatVectorSet, right: FlatVectorSet, phases: bool = False
                           ) -> tuple[list[int], list[int]] | None:
    """Row and coordinate permutations taking ``right`` onto ``left``, if any.

    Returns (rows, cols) with right.vectors[rows][:, cols] equal to
    left.vectors, up to a root-of-unity factor per vector when ``phases`` is
    set.  Coordinates are searched exhaustively, so keep the dimension small.
    """
    if (left.n, left.dimension, left.root_order) != (right.n, right.dimension, right.root_order):
        return None
    e = left.root_order
    target = _normalised(left.vectors, e, phases)
    for cols in itertools.permutations(range(left.dimension)):
        keys = _normalised(right.vectors[:, list(cols)], e, phases)
        if sorted(keys) != sorted(target):
            continue
        pool: dict[tuple[int, ...], list[int]] = {}
        for i, key in enumerate(keys):
            pool.setdefault(key, []).append(i)
        return [pool[key].pop() for key in target], list(cols)
    return None

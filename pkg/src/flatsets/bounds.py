"""Size bounds for {0, alpha}-sets and the tensor rank check behind the flat ones.

For a flat unit vector x in C^m, v_x = x (x) x (x) conj(x) has equal entries at
indices (i,j,j) and (j,i,j), and equal entries at (i,j,k) and (j,i,k).  For
real x the entries are symmetric under all index permutations.  The Gram
matrix of the v_x is positive definite when alpha < 1, so |S| equals the rank
of the v_x, which is at most the number of independent coordinates left.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from flatsets import cyclo
from flatsets.construction import FlatVectorSet, angle_set, is_real
from flatsets.linalg import integer_rank, rank_mod_prime

# Matrices with more entries than this use the modular rank certificate.
BAREISS_LIMIT = 200_000


class DomainError(ValueError):
    pass


class TensorRankError(ArithmeticError):
    pass


def dgs_bounds(m: int) -> tuple[int, int]:
    """(complex, real) bounds for {0, alpha}-sets in dimension m."""
    if m < 1:
        raise ValueError("dimension must be positive")
    return (m + 1) * m * m // 2, (m + 2) * (m + 1) * m // 6


def flat_bounds(m: int) -> tuple[int, int]:
    """(complex, real) bounds for flat {0, alpha}-sets in dimension m."""
    if m < 1:
        raise ValueError("dimension must be positive")
    return (m * m - m + 2) * m // 2, (m * m - 3 * m + 8) * m // 6


@dataclass(frozen=True)
class BoundEvaluation:
    m: int
    n: int
    real: bool
    dgs_complex: int
    dgs_real: int
    flat_complex: int
    flat_real: int
    tight_against: str | None

    def as_dict(self) -> dict:
        return {
            "m": self.m, "n": self.n, "real": self.real,
            "dgs_complex": self.dgs_complex, "dgs_real": self.dgs_real,
            "flat_complex": self.flat_complex, "flat_real": self.flat_real,
            "tight_against": self.tight_against,
        }


def evaluate_bounds(m: int, n: int, real: bool) -> BoundEvaluation:
    dc, dr = dgs_bounds(m)
    fc, fr = flat_bounds(m)
    candidates = [("flat_real", fr), ("flat_complex", fc), ("dgs_real", dr), ("dgs_complex", dc)]
    if not real:
        candidates = [c for c in candidates if c[0].endswith("complex")]
    tight = next((name for name, value in candidates if value == n), None)
    return BoundEvaluation(m, n, real, dc, dr, fc, fr, tight)


def tensor_index_classes(m: int, real: bool) -> np.ndarray:
    """Class label for each index (i, j, k) of the flattened m^3 tensor.

    Indices whose entries agree for every flat vector share a label; labels
    are 0..cap-1 in order of first appearance.
    """
    parent = list(range(m**3))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    def flat(i: int, j: int, k: int) -> int:
        return (i * m + j) * m + k

    for i in range(m):
        for j in range(m):
            # entries x_i/m
            union(flat(i, j, j), flat(i, i, i))
            union(flat(j, i, j), flat(i, i, i))
            if real:
                union(flat(j, j, i), flat(i, i, i))
            for k in range(m):
                union(flat(i, j, k), flat(j, i, k))
                if real:
                    union(flat(i, j, k), flat(i, k, j))
    roots = [find(a) for a in range(m**3)]
    relabel: dict[int, int] = {}
    return np.array([relabel.setdefault(r, len(relabel)) for r in roots], dtype=np.int64)


def _class_representatives(labels: np.ndarray) -> np.ndarray:
    """First flat index of each class, ordered by label."""
    return np.unique(labels, return_index=True)[1]


def tensor_exponents(s: FlatVectorSet) -> np.ndarray:
    """Exponents of m^(3/2) v_x: entry (i,j,k) is zeta**(a_i + a_j - a_k)."""
    a = s.vectors
    m = s.dimension
    t = a[:, :, None, None] + a[:, None, :, None] - a[:, None, None, :]
    return (t % s.root_order).reshape(s.n, m**3)


def check_coordinate_collapse(s: FlatVectorSet, real: bool | None = None) -> bool:
    """Entries of every v_x are constant on each index class, and the class of
    (i, i, i) carries zeta**a_i (that is, x_i / m before scaling)."""
    if real is None:
        real = is_real(s)
    m = s.dimension
    labels = tensor_index_classes(m, real)
    tensor = tensor_exponents(s)
    reps = _class_representatives(labels)
    if not np.array_equal(tensor, tensor[:, reps][:, labels]):
        return False
    diag = [(i * m + i) * m + i for i in range(m)]
    return bool(np.array_equal(tensor[:, diag], s.vectors))


def _realify(exponents: np.ndarray, e: int, real: bool) -> np.ndarray:
    """Integer rows spanning the same Q(zeta)-space, expressed over Q.

    Real sets use the rational coordinate only.  Otherwise each vector v
    contributes rows for v and zeta*v, whose Q-span has dimension twice the
    Q(zeta)-rank.
    """
    red = cyclo.reduction_matrix(e)
    if real:
        return red[0][exponents]
    rows = [red[:, exponents].transpose(1, 2, 0).reshape(exponents.shape[0], -1),
            red[:, (exponents + 1) % e].transpose(1, 2, 0).reshape(exponents.shape[0], -1)]
    return np.vstack(rows)


def exact_rank(mat: np.ndarray) -> int:
    """Rational rank; large matrices first try a modular full-rank certificate."""
    if mat.size > BAREISS_LIMIT:
        r = rank_mod_prime(mat)
        if r == min(mat.shape):
            return r
    return integer_rank(mat.tolist())


def tensor_rank_check(s: FlatVectorSet) -> tuple[int, int]:
    """Rank of {v_x} over the field of the vectors, and the coordinate cap.

    Raises TensorRankError if the span leaves the reduced coordinate subspace
    or the rank differs from |S|.
    """
    if s.alpha is not None and s.alpha >= 1:
        raise DomainError(f"alpha = {s.alpha} must be below 1")
    if Fraction(1) in angle_set(s):
        raise DomainError("set contains parallel vectors (angle 1)")
    real = is_real(s)
    m = s.dimension
    labels = tensor_index_classes(m, real)
    cap = int(labels.max()) + 1
    if not check_coordinate_collapse(s, real):
        raise TensorRankError("tensor entries are not constant on index classes")
    reduced = tensor_exponents(s)[:, _class_representatives(labels)]
    mat = _realify(reduced, s.root_order, real)
    rank = exact_rank(mat)
    if not real:
        if rank % 2:
            raise TensorRankError("odd rational rank for a complex span")
        rank //= 2
    if rank > cap:
        raise TensorRankError(f"rank {rank} exceeds cap {cap}")
    if rank != s.n:
        raise TensorRankError(f"rank {rank} differs from |S| = {s.n}")
    return rank, cap

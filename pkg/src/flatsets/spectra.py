"""Eigenvalues of bipartite distance-regular graphs of diameter four.

The nontrivial eigenvalue theta_1 is carried as its square, so every check
here is an identity between integer polynomials or integer matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

from flatsets.graphs import Graph, InfeasibleArrayError, IntersectionArray


class SpectralMismatchError(ArithmeticError):
    def __init__(self, message: str, witness: tuple[int, int, int] | None = None) -> None:
        super().__init__(message if witness is None else f"{message} (entry {witness})")
        self.witness = witness


def _sqrt_str(square: int) -> str:
    root = math.isqrt(square)
    return str(root) if root * root == square else f"sqrt({square})"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues +-k, +-theta_1 and 0."""

    k: int
    theta1_squared: int

    def __post_init__(self) -> None:
        if self.theta1_squared <= 0:
            raise InfeasibleArrayError(f"theta_1^2 = {self.theta1_squared} is not positive")
        if self.theta1_squared >= self.k**2:
            raise InfeasibleArrayError(f"theta_1^2 = {self.theta1_squared} is not below k^2")

    @property
    def theta1(self) -> int | None:
        """theta_1 when it is an integer, else None."""
        root = math.isqrt(self.theta1_squared)
        return root if root * root == self.theta1_squared else None

    def eigenvalues(self) -> tuple[str, ...]:
        t = _sqrt_str(self.theta1_squared)
        return str(self.k), t, "0", f"-{t}", f"-{self.k}"

    def annihilating_polynomial(self) -> list[int]:
        """Coefficients (lowest first) of x (x^2 - theta^2)(x^2 - k^2)."""
        k2, t2 = self.k**2, self.theta1_squared
        return [0, k2 * t2, 0, -(k2 + t2), 0, 1]

    def nontrivial_angle(self) -> Fraction:
        return Fraction(self.theta1_squared, self.k**2)


def tridiagonal_matrix(ia: IntersectionArray) -> list[list[int]]:
    """The 5x5 matrix with c_i above, a_i on and b_i below the diagonal."""
    k, c2, c3 = ia.triple
    return [
        [0, 1, 0, 0, 0],
        [k, 0, c2, 0, 0],
        [0, k - 1, 0, c3, 0],
        [0, 0, k - c2, 0, k],
        [0, 0, 0, k - c3, 0],
    ]


def characteristic_polynomial(mat: list[list[int]]) -> list[int]:
    """det(xI - M), lowest coefficient first, by Faddeev-LeVerrier.

    For an integer matrix every intermediate is integral and each division
    by the step number is exact.
    """
    n = len(mat)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    prod = [[0] * n for _ in range(n)]  # M @ aux from the previous step
    for step in range(1, n + 1):
        aux = [row[:] for row in prod]
        for i in range(n):
            aux[i][i] += coeffs[n - step + 1]
        prod = [[sum(mat[i][t] * aux[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(prod[i][i] for i in range(n))
        if trace % step:
            raise ArithmeticError("non-integral characteristic polynomial")
        coeffs[n - step] = -trace // step
    return coeffs


def theta1_squared(ia: IntersectionArray) -> int:
    k, c2, c3 = ia.triple
    return k + c2 * (k - c3 - 1)


def spectrum_from_array(ia: IntersectionArray) -> Spectrum:
    t2 = theta1_squared(ia)
    if t2 <= 0:
        raise InfeasibleArrayError(f"theta_1^2 = {t2} <= 0 for {ia.triple}")
    spectrum = Spectrum(ia.k, t2)
    charpoly = characteristic_polynomial(tridiagonal_matrix(ia))
    if charpoly != spectrum.annihilating_polynomial():
        raise SpectralMismatchError(f"characteristic polynomial {charpoly} does not factor as expected")
    return spectrum


def vertex_count_fraction(k: int, c2: int, c3: int) -> Fraction:
    return Fraction(k * (k * k - (c2 + 1) * k + c2 * (c3 + 1)), c2 * c3)


def vertex_count(ia: IntersectionArray) -> int:
    """n, half the number of vertices, from the intersection numbers."""
    n = vertex_count_fraction(*ia.triple)
    if n.denominator != 1:
        raise InfeasibleArrayError(f"n = {n} is not an integer for {ia.triple}")
    return int(n)


def adjacency_matrix(graph: Graph) -> sp.csr_matrix:
    rows = np.repeat(np.arange(graph.vertex_count), [len(a) for a in graph.adjacency])
    cols = np.fromiter((v for a in graph.adjacency for v in a), dtype=np.int64, count=rows.size)
    data = np.ones(rows.size, dtype=np.int64)
    n = graph.vertex_count
    return sp.csr_matrix((data, (rows, cols)), shape=(n, n), dtype=np.int64)


def spectral_residual_witness(graph: Graph, spectrum: Spectrum, block: int = 512
                              ) -> tuple[int, int, int] | None:
    """First nonzero entry (row, col, value) of A (A^2 - theta^2 I)(A^2 - k^2 I), if any."""
    adj = adjacency_matrix(graph)
    n = graph.vertex_count
    t2, k2 = spectrum.theta1_squared, spectrum.k**2
    for start in range(0, n, block):
        cols = np.arange(start, min(start + block, n))
        x = np.zeros((n, cols.size), dtype=np.int64)
        x[cols, np.arange(cols.size)] = 1
        y = adj @ (adj @ x) - t2 * x
        y = adj @ (adj @ y) - k2 * y
        y = adj @ y
        nz = np.argwhere(y)
        if nz.size:
            r, c = nz[0]
            return int(r), int(cols[c]), int(y[r, c])
    return None


def verify_spectral_identity(graph: Graph, spectrum: Spectrum, strict: bool = False) -> bool:
    """Exact check that the adjacency spectrum lies in {0, +-theta_1, +-k}."""
    witness = spectral_residual_witness(graph, spectrum)
    if witness is not None and strict:
        raise SpectralMismatchError("A(A^2 - theta^2)(A^2 - k^2) != 0", witness)
    return witness is None

"""Exact arithmetic in the cyclotomic integers Z[zeta_e].

An element is given by its exponent counts: ``counts[r]`` is the multiplicity
of ``zeta_e**r`` in a sum of roots of unity.  Reduction modulo the cyclotomic
polynomial gives a canonical coordinate vector in the basis
``1, zeta, ..., zeta**(phi(e) - 1)``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _divisors(e: int) -> list[int]:
    return [d for d in range(1, e + 1) if e % d == 0]


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (lowest degree first); ``den`` is monic."""
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        coef = num[shift + len(den) - 1]
        quot[shift] = coef
        for i, d in enumerate(den):
            num[shift + i] -= coef * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, lowest degree first."""
    if e < 1:
        raise ValueError(f"cyclotomic order must be positive, got {e}")
    poly = [-1] + [0] * (e - 1) + [1]
    for d in _divisors(e)[:-1]:
        poly = _exact_divide(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def totient(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def reduction_matrix(e: int) -> np.ndarray:
    """Integer matrix R with R[:, r] = coordinates of zeta**r, shape (phi(e), e)."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    mat = np.zeros((deg, e), dtype=np.int64)
    power = [1] + [0] * (deg - 1) if deg else []
    for r in range(e):
        mat[:, r] = power
        # multiply by x and reduce modulo phi
        carry = power[-1]
        power = [0] + power[:-1]
        power = [p - carry * c for p, c in zip(power, phi[:-1])]
    mat.setflags(write=False)
    return mat


def reduce_counts(counts: np.ndarray, e: int) -> np.ndarray:
    """Map exponent counts of shape (..., e) to coordinates of shape (..., phi(e))."""
    return np.asarray(counts, dtype=np.int64) @ reduction_matrix(e).T


def is_zero(counts, e: int) -> bool:
    return not reduce_counts(np.asarray(counts), e).any()


@lru_cache(maxsize=None)
def trace_constant(e: int) -> int:
    """zeta + zeta**-1 as an integer; only defined when phi(e) <= 2."""
    if totient(e) > 2:
        raise ValueError(f"zeta_{e} + conj(zeta_{e}) is irrational")
    counts = np.zeros(e, dtype=np.int64)
    counts[1 % e] += 1
    counts[-1 % e] += 1
    coords = reduce_counts(counts, e)
    if coords[1:].any():
        raise ArithmeticError("trace did not reduce to a rational integer")
    return int(coords[0])


def abs2(counts, e: int) -> np.ndarray:
    """Exact squared modulus of the element(s) described by ``counts``.

    Works elementwise over leading axes.  Supported for e in {1, 2, 3, 4, 6},
    where Q(zeta_e) has rational real subfield.
    """
    coords = reduce_counts(np.asarray(counts), e)
    a = coords[..., 0]
    if coords.shape[-1] == 1:
        return a * a
    if coords.shape[-1] != 2:
        raise ValueError(f"exact modulus unsupported for root order {e}")
    b = coords[..., 1]
    return a * a + trace_constant(e) * a * b + b * b

"""Cyclotomic integers, finite fields and exact rank, against independent oracles."""

import itertools

import numpy as np
import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given
from hypothesis import strategies as st

from flatsets import cyclo
from flatsets.fields import CONWAY_POLYNOMIALS_2, FiniteField, gf2
from flatsets.linalg import integer_rank, nullspace_mod_p, rank_mod_p, rank_mod_prime, rref_mod_p

X = sympy.Symbol("x")


@pytest.mark.parametrize("e", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(e):
    expected = sympy.Poly(sympy.cyclotomic_poly(e, X), X).all_coeffs()[::-1]
    assert list(cyclo.cyclotomic_polynomial(e)) == [int(c) for c in expected]


def test_trace_constants():
    assert cyclo.trace_constant(3) == -1
    assert cyclo.trace_constant(4) == 0
    assert cyclo.trace_constant(6) == 1
    with pytest.raises(ValueError):
        cyclo.trace_constant(5)


@given(st.sampled_from([2, 3, 4, 6]), st.lists(st.integers(0, 5), min_size=6, max_size=6))
def test_abs2_matches_complex(e, raw):
    counts = np.array(raw[:e])
    z = sum(c * np.exp(2j * np.pi * r / e) for r, c in enumerate(counts))
    assert cyclo.abs2(counts, e) == round(abs(z) ** 2)


def test_sum_of_all_roots_is_zero():
    for e in range(2, 20):
        assert cyclo.is_zero(np.ones(e, dtype=np.int64), e)
        assert not cyclo.is_zero(np.eye(e, dtype=np.int64)[1], e)


def _clmul_mod(a: int, b: int, modulus: int, degree: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> degree & 1:
            a ^= modulus
    return out


@pytest.mark.parametrize("degree", range(1, 7))
def test_field_axioms_exhaustive(degree):
    f = gf2(degree)
    els = list(f.elements())
    for a, b in itertools.product(els, els):
        if degree > 1:
            assert f.mul(a, b) == _clmul_mod(a, b, f.modulus, degree)
        else:
            assert f.mul(a, b) == a * b % 2
        assert f.add(a, b) == f.add(b, a)
        assert f.add(f.frobenius(a), f.frobenius(b)) == f.frobenius(f.add(a, b))
    for a in els[1:]:
        assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_field(p):
    f = FiniteField(p)
    for a in range(1, p):
        assert f.mul(a, f.inv(a)) == 1
    assert f.order == p and f.bits(1) == [1]


@pytest.mark.parametrize("degree", sorted(CONWAY_POLYNOMIALS_2))
def test_conway_polynomials_irreducible(degree):
    mask = CONWAY_POLYNOMIALS_2[degree]
    coeffs = [mask >> i & 1 for i in range(degree, -1, -1)]
    assert sympy.Poly(coeffs, X, modulus=2).is_irreducible


@pytest.mark.parametrize("big", range(2, 13))
def test_conway_compatibility(big):
    """For d | D, x^((2^D - 1)/(2^d - 1)) in GF(2^D) is a root of the degree-d polynomial."""
    f = gf2(big)
    for d in range(1, big):
        if big % d:
            continue
        root = f.pow(2, (2**big - 1) // (2**d - 1))
        mask = CONWAY_POLYNOMIALS_2[d]
        value = 0
        for i in range(d + 1):
            if mask >> i & 1:
                value ^= f.pow(root, i)
        assert value == 0, (big, d)


def test_unsupported_fields():
    with pytest.raises(ValueError):
        FiniteField(4)
    with pytest.raises(ValueError):
        FiniteField(3, 2)
    with pytest.raises(ValueError):
        gf2(13)


matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@given(matrices)
def test_integer_rank_matches_sympy(rows):
    assert integer_rank(rows) == sympy.Matrix(rows).rank()


@given(matrices, st.sampled_from([2, 3, 5]))
def test_rank_mod_p_matches_sympy(rows, p):
    assert rank_mod_p(rows, p) == _sympy_rank_mod(rows, p)
    assert rank_mod_prime(np.array(rows)) <= integer_rank(rows)


def _sympy_rank_mod(rows, p):
    field = sympy.GF(p)
    return DomainMatrix([[field(x) for x in r] for r in rows], (len(rows), len(rows[0])), field).rank()


@given(matrices, st.sampled_from([2, 3]))
def test_nullspace_mod_p(rows, p):
    mat = np.array(rows)
    basis = nullspace_mod_p(mat, p)
    assert not (mat @ basis.T % p).any()
    assert basis.shape[0] == mat.shape[1] - rank_mod_p(mat, p)


def test_rref_pivots():
    red, piv = rref_mod_p([[0, 1, 1], [0, 2, 2], [1, 0, 1]], 3)
    assert piv == [0, 1]
    assert red.tolist() == [[1, 0, 1], [0, 1, 1]]


def test_blocked_rank_with_deficient_panels():
    rng = np.random.default_rng(7)
    for _ in range(20):
        r, c = rng.integers(60, 200, 2)
        k = int(rng.integers(0, min(r, c) + 1))
        m = rng.integers(-2, 3, (r, k)) @ rng.integers(-2, 3, (k, c))
        m[:, rng.integers(0, c, c // 3)] = 0
        assert rank_mod_prime(m) == integer_rank(m.tolist())

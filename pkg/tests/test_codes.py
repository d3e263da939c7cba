import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from flatsets.codes import (
    GOLAY_A,
    CodeSizeError,
    CosetSpace,
    DegenerateCodeError,
    KasamiParameterError,
    KasamiParams,
    LinearCode,
    StructureError,
    coset_graph,
    even_coset_subgroup,
    golay_code,
    kasami_code,
    vls_code,
    weight,
)
from flatsets.fields import CONWAY_POLYNOMIALS_2
from flatsets.graphs import verify_distance_regular

from conftest import K42, K82


def _gf2m_mul(a, b, degree):
    modulus = CONWAY_POLYNOMIALS_2[degree]
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> degree & 1:
            a ^= modulus
    return out


def _gf2m_pow(a, n, degree):
    out = 1
    for _ in range(n):
        out = _gf2m_mul(out, a, degree)
    return out


def _in_kasami(x, s, t):
    """Direct test of the defining equations over GF(s), coordinates indexed by field elements."""
    degree = s.bit_length() - 1
    if sum(x) % 2:
        return False
    lin = cub = 0
    for a, bit in enumerate(x):
        if bit:
            lin ^= a
            cub ^= _gf2m_pow(a, t + 1, degree)
    return lin == 0 and cub == 0


def _golay_codewords_direct():
    a = np.array([[int(c) for c in row] for row in GOLAY_A])
    gen = np.hstack([np.eye(12, dtype=np.int64), a])
    coeffs = np.array(list(itertools.product((0, 1), repeat=12)))
    return coeffs @ gen % 2


def test_golay_weights_exhaustive():
    words = _golay_codewords_direct()
    weights = words.sum(axis=1)
    assert len({tuple(w) for w in words.tolist()}) == 4096
    assert (weights % 4 == 0).all()
    assert weights[weights > 0].min() == 8
    assert golay_code().weight_distribution() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_golay_dimensions():
    c = golay_code()
    assert (c.length, c.dimension, c.num_cosets) == (24, 12, 4096)
    direct = _golay_codewords_direct()
    assert all(c.contains(w) for w in direct[::97])


def test_vls_code():
    c = vls_code()
    assert (c.length, c.dimension, c.num_cosets) == (6, 1, 243)
    space = CosetSpace(c)
    sums = space.coordinate_sums()
    assert np.bincount(sums).tolist() == [81, 81, 81]
    assert sums[space.index([0] * 6)] == 0


@pytest.mark.parametrize("params, s, t", [(K42, 4, 2), (K82, 8, 2)])
def test_kasami_matches_brute_force(params, s, t):
    brute = {x for x in itertools.product((0, 1), repeat=s) if _in_kasami(x, s, t)}
    code = kasami_code(params)
    assert {tuple(w) for w in code.codewords().tolist()} == brute


def test_kasami_small_cases():
    assert kasami_code(K42).dimension == 0
    words = kasami_code(K82).codewords().tolist()
    assert sorted(words) == [[0] * 8, [1] * 8]


def test_kasami_closure_sampled():
    code = kasami_code(KasamiParams(2, "i", j=2, m=1))
    rng = np.random.default_rng(3)
    for _ in range(40):
        x = rng.integers(0, 2, code.dimension) @ code.generator % 2
        y = rng.integers(0, 2, code.dimension) @ code.generator % 2
        assert _in_kasami(x.tolist(), 32, 2) and _in_kasami(y.tolist(), 32, 2)
        z = (x + y) % 2
        assert _in_kasami(z.tolist(), 32, 2)
        assert weight(z) == 0 or weight(z) >= 4


@pytest.mark.parametrize("kwargs", [
    dict(q=3, variant="ii"),
    dict(q=2, variant="i"),
    dict(q=2, variant="i", j=1, m=2),
    dict(q=2, variant="i", j=4, m=3),
    dict(q=2, variant="ii", j=1, m=1),
    dict(q=2, variant="iii"),
])
def test_kasami_params_rejected(kwargs):
    with pytest.raises(KasamiParameterError):
        KasamiParams(**kwargs)


def test_kasami_size_cap():
    with pytest.raises(CodeSizeError):
        kasami_code(KasamiParams(2, "i", j=4, m=1))


def test_kasami_expected_parameters():
    assert K42.expected_parameters() == (8, 4, 2, 3)
    assert K82.expected_parameters() == (64, 8, 2, 3)
    assert (K42.s, K42.t, K82.s, K82.t) == (4, 2, 8, 2)


def test_kasami_coset_graph_is_4_cube():
    code = kasami_code(K42)
    g = coset_graph(code)
    assert g.vertex_count == 16 and g.valency == 4
    assert verify_distance_regular(g).triple == (4, 2, 3)


def _leader_brute(code, v):
    words = code.codewords()
    members = (np.asarray(v) + words) % code.q
    return min((weight(m), tuple(m)) for m in members.tolist())[1]


def test_canonical_is_minimum_weight_then_lex_exhaustive_vls():
    code = vls_code()
    space = CosetSpace(code)
    for v in itertools.product(range(3), repeat=6):
        rep = space.canonical(v)
        assert rep == _leader_brute(code, v)
        assert space.canonical(rep) == rep


def test_canonical_idempotent_golay_all_cosets():
    code = golay_code()
    space = CosetSpace(code)
    reps = np.array(space.representatives)
    assert space.representatives == sorted(space.representatives)
    assert [space.index(r) for r in reps] == list(range(4096))
    sample = reps[np.linspace(0, 4095, 24).astype(int)]
    for r in sample:
        assert tuple(r) == _leader_brute(code, r)
    weights = reps.sum(axis=1)
    assert np.bincount(weights).tolist() == [1, 24, 276, 2024, 1771]


@given(st.lists(st.integers(0, 1), min_size=24, max_size=24), st.integers(0, 4095))
def test_canonical_constant_on_golay_cosets(v, which):
    code = golay_code()
    space = _golay_space()
    coeffs = np.array([which >> i & 1 for i in range(12)])
    c = coeffs @ code.generator % 2
    w = (np.array(v) + c) % 2
    assert space.canonical(v) == space.canonical(w)
    assert space.canonical(space.canonical(v)) == space.canonical(v)
    assert weight(space.canonical(v)) <= weight(v)


_SPACES = {}


def _golay_space():
    if "golay" not in _SPACES:
        _SPACES["golay"] = CosetSpace(golay_code())
    return _SPACES["golay"]


def test_coset_graphs():
    g = coset_graph(golay_code(), _golay_space())
    assert g.vertex_count == 4096 and g.valency == 24
    vls_space = CosetSpace(vls_code())
    gv = coset_graph(vls_code(), vls_space)
    assert gv.vertex_count == 243 and gv.valency == 12
    sums = vls_space.coordinate_sums()
    # tripartite by coordinate sum
    assert all(sums[u] != sums[v] for u, v in gv.edges())


def test_degenerate_code():
    code = LinearCode.from_generators([[1, 0, 0]], 2)
    with pytest.raises(DegenerateCodeError):
        coset_graph(code)


def test_even_coset_subgroups():
    group, mapping = even_coset_subgroup(golay_code(), _golay_space())
    assert group.cyclic_orders == (2,) * 11
    assert len(set(mapping.values())) == 2048
    assert all(sum(r) % 2 == 0 for r in mapping.values())
    group, mapping = even_coset_subgroup(vls_code())
    assert group.cyclic_orders == (3,) * 4
    assert all(sum(r) % 3 == 0 for r in mapping.values())
    assert even_coset_subgroup(kasami_code(K42))[0].order == 8


def test_even_coset_subgroup_is_homomorphic():
    code = vls_code()
    space = CosetSpace(code)
    group, mapping = even_coset_subgroup(code, space)
    elems = list(group.elements())
    for g, h in zip(elems[::7], elems[3::11]):
        total = (np.array(mapping[g]) + np.array(mapping[h])) % 3
        assert space.canonical(total) == mapping[group.add(g, h)]


def test_structure_error_on_odd_codeword():
    code = LinearCode.from_generators([[1, 1, 1, 0]], 2)
    with pytest.raises(StructureError):
        even_coset_subgroup(code)

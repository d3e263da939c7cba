"""The six graph families together with their regular abelian actions.

Each ``setup_*`` function returns a :class:`Setup` bundling the graph, the
abelian group acting regularly on both colour classes, the action, the base
vertices y and z, and the intersection numbers and nontrivial eigenvalue
recorded in the literature for that family.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from flatsets.codes import (
    CosetSpace,
    KasamiParams,
    LinearCode,
    coset_graph,
    even_coset_subgroup,
    golay_code,
    kasami_code,
    vls_code,
)
from flatsets.graphs import (
    BipartiteGraph,
    IntersectionArray,
    build_4_cube,
    build_8_cycle,
    build_folded_8_cube,
)
from flatsets.groups import FiniteAbelianGroup, GroupElement, make_group

FAMILIES = ("8-cycle", "4-cube", "folded-8-cube", "vls", "golay", "kasami")


@dataclass(frozen=True, eq=False)
class Setup:
    name: str
    graph: BipartiteGraph
    group: FiniteAbelianGroup
    action: Callable[[GroupElement], np.ndarray]
    y: int
    z: int
    expected: IntersectionArray
    expected_theta1_squared: int


def _translation_action(graph: BipartiteGraph, group: FiniteAbelianGroup,
                        basis: np.ndarray) -> Callable[[GroupElement], np.ndarray]:
    """Action on binary-tuple vertices by adding sum_i g_i * basis[i]."""
    labels = np.array(graph.labels, dtype=np.int64)
    weights = 2 ** np.arange(labels.shape[1] - 1, -1, -1)
    # labels are all binary tuples in lex order, so a label's index is its value
    assert np.array_equal(labels @ weights, np.arange(len(labels)))

    def act(g: GroupElement) -> np.ndarray:
        shift = np.array(g, dtype=np.int64) @ basis % 2
        return (labels ^ shift) @ weights

    return act


def _adjacent_pairs_basis(length: int) -> np.ndarray:
    """e_i + e_{i+1}: a basis of the even-weight subspace of F_2^length."""
    basis = np.zeros((length - 1, length), dtype=np.int64)
    for i in range(length - 1):
        basis[i, i] = basis[i, i + 1] = 1
    return basis


def setup_8_cycle() -> Setup:
    graph = build_8_cycle()
    group = make_group([4])

    def act(g: GroupElement) -> np.ndarray:
        return np.array([graph.index[(x, (y + g[0]) % 4)] for x, y in graph.labels])

    return Setup("8-cycle", graph, group, act, y=graph.index[(0, 0)], z=graph.index[(1, 0)],
                 expected=IntersectionArray(2, 1, 1), expected_theta1_squared=2)


def setup_4_cube() -> Setup:
    graph = build_4_cube()
    group = make_group([2, 2, 2])
    act = _translation_action(graph, group, _adjacent_pairs_basis(4))
    return Setup("4-cube", graph, group, act, y=graph.index[(0, 0, 0, 1)],
                 z=graph.index[(0, 0, 0, 0)], expected=IntersectionArray(4, 2, 3),
                 expected_theta1_squared=4)


def setup_folded_8_cube() -> Setup:
    graph = build_folded_8_cube()
    group = make_group([2] * 6)
    act = _translation_action(graph, group, _adjacent_pairs_basis(7))
    return Setup("folded-8-cube", graph, group, act, y=graph.index[(0,) * 6 + (1,)],
                 z=graph.index[(0,) * 7], expected=IntersectionArray(8, 2, 3),
                 expected_theta1_squared=16)


def _coset_setup(name: str, code: LinearCode, expected: IntersectionArray,
                 theta1_squared: int) -> Setup:
    """Coset graph restricted to the cosets of coordinate sum 0 and 1.

    For binary codes with only even codewords this is the whole coset graph,
    split into even and odd cosets.  The sum-zero cosets act by translation.
    """
    space = CosetSpace(code)
    full = coset_graph(code, space)
    sums = space.coordinate_sums()
    keep = np.nonzero(sums <= 1)[0]
    graph = full if keep.size == len(space) else full.induced(keep)
    graph = BipartiteGraph(graph.labels, graph.adjacency, tuple(int(s) for s in sums[keep]))
    new_index = np.full(len(space), -1, dtype=np.int64)
    new_index[keep] = np.arange(keep.size)
    group, mapping = even_coset_subgroup(code, space)

    def act(g: GroupElement) -> np.ndarray:
        perm = space.translate(code.syndrome(mapping[g]))
        return new_index[perm[keep]]

    zero = graph.index[(0,) * code.length]
    y = graph.colour_class(1)[0]
    return Setup(name, graph, group, act, y=y, z=zero, expected=expected,
                 expected_theta1_squared=theta1_squared)


def setup_vls() -> Setup:
    return _coset_setup("vls", vls_code(), IntersectionArray(6, 1, 2), 9)


def setup_golay() -> Setup:
    return _coset_setup("golay", golay_code(), IntersectionArray(24, 2, 3), 64)


def setup_kasami(params: KasamiParams) -> Setup:
    _, k, c2, c3 = params.expected_parameters()
    return _coset_setup(f"kasami({params.label()})", kasami_code(params),
                        IntersectionArray(k, c2, c3), params.expected_theta1() ** 2)


def build_vls_incidence() -> BipartiteGraph:
    """Incidence graph of the van Lint-Schrijver partial geometry (162 vertices)."""
    return setup_vls().graph


def build_golay_coset_graph() -> BipartiteGraph:
    return setup_golay().graph


def build_kasami_coset_graph(params: KasamiParams) -> BipartiteGraph:
    return setup_kasami(params).graph


def get_setup(name: str, kasami: KasamiParams | None = None) -> Setup:
    builders = {
        "8-cycle": setup_8_cycle,
        "4-cube": setup_4_cube,
        "folded-8-cube": setup_folded_8_cube,
        "vls": setup_vls,
        "golay": setup_golay,
    }
    if name == "kasami":
        if kasami is None:
            raise ValueError("the kasami family needs parameters")
        return setup_kasami(kasami)
    if name not in builders:
        raise ValueError(f"unknown graph {name!r}; choose from {', '.join(FAMILIES)}")
    return builders[name]()

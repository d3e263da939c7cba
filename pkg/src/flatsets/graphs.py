"""Bipartite graphs, distance-regularity checks and regular group actions."""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from flatsets.groups import FiniteAbelianGroup, GroupElement

# Graphs up to this size are checked from every vertex.
EXHAUSTIVE_LIMIT = 512

Action = Callable[[GroupElement], Sequence[int]]


class GraphError(ValueError):
    pass


class VerificationError(GraphError):
    """A graph failed a distance-regularity check at the pair ``witness``."""

    def __init__(self, message: str, witness: tuple[int, int] | None = None) -> None:
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


class ActionError(GraphError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


class InfeasibleArrayError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with sorted neighbour lists."""

    labels: tuple[Hashable, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        adj = tuple(tuple(sorted(int(x) for x in nbrs)) for nbrs in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if len(self.labels) != len(adj):
            raise GraphError("one label per vertex required")
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise GraphError(f"loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"repeated neighbour at vertex {v}")
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if v not in adj[u]:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def __len__(self) -> int:
        return self.vertex_count

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_regular(self) -> bool:
        return len({len(n) for n in self.adjacency}) <= 1

    @property
    def valency(self) -> int:
        if not self.is_regular():
            raise GraphError("graph is not regular")
        return len(self.adjacency[0]) if self.adjacency else 0

    @cached_property
    def neighbour_array(self) -> np.ndarray:
        """(vertex_count, valency) array of sorted neighbours; regular graphs only."""
        arr = np.array(self.adjacency, dtype=np.int64).reshape(self.vertex_count, self.valency)
        arr.setflags(write=False)
        return arr

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def distances_from(self, source: int) -> list[int]:
        dist = [-1] * self.vertex_count
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def is_connected(self) -> bool:
        return self.vertex_count == 0 or min(self.distances_from(0)) >= 0

    def two_colouring(self) -> tuple[int, ...] | None:
        colour = [-1] * self.vertex_count
        for start in range(self.vertex_count):
            if colour[start] >= 0:
                continue
            colour[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if colour[v] < 0:
                        colour[v] = 1 - colour[u]
                        queue.append(v)
                    elif colour[v] == colour[u]:
                        return None
        return tuple(colour)

    def induced(self, vertices: Sequence[int]) -> Graph:
        keep = sorted(vertices)
        new_index = {v: i for i, v in enumerate(keep)}
        adj = [[new_index[u] for u in self.adjacency[v] if u in new_index] for v in keep]
        return Graph(tuple(self.labels[v] for v in keep), tuple(tuple(a) for a in adj))


@dataclass(frozen=True, eq=False)
class BipartiteGraph(Graph):
    """Connected bipartite graph; ``colour[v]`` is 0 or 1."""

    colour: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        super().__post_init__()
        colour = tuple(int(c) for c in self.colour)
        object.__setattr__(self, "colour", colour)
        if len(colour) != self.vertex_count or not set(colour) <= {0, 1}:
            raise GraphError("colour must assign 0 or 1 to every vertex")
        for u, v in self.edges():
            if colour[u] == colour[v]:
                raise GraphError(f"edge ({u}, {v}) inside a colour class")
        if not self.is_connected():
            raise GraphError("graph is not connected")

    def colour_class(self, c: int) -> list[int]:
        return [v for v, col in enumerate(self.colour) if col == c]


def as_bipartite(graph: Graph, colour: Sequence[int] | None = None) -> BipartiteGraph:
    if colour is None:
        colour = graph.two_colouring()
        if colour is None:
            raise GraphError("graph is not bipartite")
    return BipartiteGraph(graph.labels, graph.adjacency, tuple(colour))


@dataclass(frozen=True)
class IntersectionArray:
    """Intersection numbers of a bipartite distance-regular graph of diameter 4."""

    k: int
    c2: int
    c3: int

    def __post_init__(self) -> None:
        if min(self.k, self.c2, self.c3) < 1:
            raise InfeasibleArrayError(f"intersection numbers must be positive: {self.triple}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.k, self.c2, self.c3

    @property
    def c(self) -> tuple[int, ...]:
        """c_0, ..., c_4 (c_0 = 0 by convention)."""
        return 0, 1, self.c2, self.c3, self.k

    @property
    def b(self) -> tuple[int, ...]:
        """b_0, ..., b_4."""
        return tuple(self.k - ci for ci in self.c[:4]) + (0,)

    @property
    def a(self) -> tuple[int, ...]:
        return (0,) * 5

    def shell_fractions(self) -> tuple[Fraction, ...]:
        shells = [Fraction(1)]
        for i in range(1, 5):
            shells.append(shells[-1] * self.b[i - 1] / self.c[i])
        return tuple(shells)

    @property
    def shells(self) -> tuple[int, ...]:
        """k_0, ..., k_4."""
        fr = self.shell_fractions()
        if any(s.denominator != 1 for s in fr):
            raise InfeasibleArrayError(f"non-integral shell sizes for {self.triple}: {fr}")
        return tuple(int(s) for s in fr)

    @property
    def n(self) -> int:
        """Half the vertex count."""
        total = sum(self.shells)
        if total % 2:
            raise InfeasibleArrayError(f"odd vertex count {total} for {self.triple}")
        return total // 2


def default_sources(graph: Graph) -> tuple[list[int], str]:
    """Source vertices for distance-regularity checks, and a description."""
    if graph.vertex_count <= EXHAUSTIVE_LIMIT or not isinstance(graph, BipartiteGraph):
        return list(range(graph.vertex_count)), "all vertices"
    return graph.colour_class(0), "colour class 0 (other class by transitivity)"


def _bfs_layers(nbr: np.ndarray, source: int) -> np.ndarray:
    dist = np.full(nbr.shape[0], -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source])
    d = 0
    while frontier.size:
        d += 1
        cand = nbr[frontier].ravel()
        cand = np.unique(cand[dist[cand] < 0])
        dist[cand] = d
        frontier = cand
    return dist


def verify_distance_regular(graph: Graph, sources: Sequence[int] | None = None) -> IntersectionArray:
    """Check that ``graph`` is bipartite distance-regular of diameter 4.

    For every source u and every vertex v, counts the neighbours of v at
    distance d(u,v) - 1, d(u,v) and d(u,v) + 1 from u, and requires these to
    depend only on d(u,v).
    """
    n_vertices = graph.vertex_count
    if n_vertices == 0:
        raise VerificationError("empty graph")
    if not graph.is_connected():
        unreachable = graph.distances_from(0).index(-1)
        raise VerificationError("graph is not connected", (0, unreachable))
    if not graph.is_regular():
        for u, v in graph.edges():
            if graph.degree(u) != graph.degree(v):
                raise VerificationError("graph is not regular", (u, v))
    if sources is None:
        sources, _ = default_sources(graph)
    nbr = graph.neighbour_array
    k = nbr.shape[1]
    reference: dict[int, tuple[int, int, int, int]] = {}
    for u in sources:
        dist = _bfs_layers(nbr, u)
        ecc = int(dist.max())
        if ecc != 4:
            far = int(np.argmax(dist))
            raise VerificationError(f"eccentricity of vertex {u} is {ecc}, not 4", (u, far))
        dn = dist[nbr]
        dv = dist[:, None]
        c = (dn == dv - 1).sum(axis=1)
        a = (dn == dv).sum(axis=1)
        b = (dn == dv + 1).sum(axis=1)
        for i in range(5):
            members = np.nonzero(dist == i)[0]
            triple = np.stack([c[members], a[members], b[members]], axis=1)
            first = tuple(int(x) for x in triple[0]) + (int(members.size),)
            bad = np.nonzero((triple != triple[0]).any(axis=1))[0]
            if bad.size:
                raise VerificationError(f"intersection numbers vary at distance {i}",
                                        (u, int(members[bad[0]])))
            if reference.setdefault(i, first) != first:
                raise VerificationError(f"intersection numbers at distance {i} depend on the source",
                                        (u, int(members[0])))
            if first[1] != 0:
                raise VerificationError(f"a_{i} = {first[1]} is nonzero; graph is not bipartite",
                                        (u, int(members[0])))
    c1, c2, c3, c4 = (reference[i][0] for i in range(1, 5))
    if c1 != 1 or c4 != k:
        raise VerificationError(f"unexpected c_1 = {c1} or c_4 = {c4}")
    ia = IntersectionArray(k, c2, c3)
    if sum(ia.shells) != n_vertices:
        raise VerificationError(f"shell sizes {ia.shells} do not sum to {n_vertices}")
    return ia


def _as_permutation(action: Action, g: GroupElement, n: int) -> np.ndarray:
    perm = np.asarray(action(g), dtype=np.int64)
    if perm.shape != (n,) or not np.array_equal(np.sort(perm), np.arange(n)):
        raise ActionError(f"element {g} does not act as a permutation of the vertices")
    return perm


def check_action(graph: BipartiteGraph, group: FiniteAbelianGroup, action: Action,
                 sample: int | None = None) -> np.ndarray:
    """Verify that ``action`` is a homomorphism into Aut(graph), regular on each
    colour class.  Returns the (|G|, vertex_count) table of permutations.
    """
    n = graph.vertex_count
    elements = list(group.elements())
    perms = np.stack([_as_permutation(action, g, n) for g in elements])
    if not np.array_equal(perms[0], np.arange(n)):
        raise ActionError("identity does not act trivially", (group.identity(), None))
    nbr = graph.neighbour_array
    for gen in group.generators():
        p = perms[group.index(gen)]
        if not np.array_equal(np.sort(p[nbr], axis=1), nbr[p]):
            bad = int(np.nonzero((np.sort(p[nbr], axis=1) != nbr[p]).any(axis=1))[0][0])
            raise ActionError(f"generator {gen} is not an automorphism", (gen, bad))
        # v^(g + gen) == (v^g)^gen for all g
        shifted = [group.index(group.add(g, gen)) for g in elements]
        composed = p[perms]
        mismatch = np.nonzero((perms[shifted] != composed).any(axis=1))[0]
        if mismatch.size:
            raise ActionError("action is not a homomorphism", (elements[mismatch[0]], gen))
    for cls in (0, 1):
        members = np.array(graph.colour_class(cls), dtype=np.int64)
        if members.size != group.order:
            raise ActionError(f"colour class {cls} has {members.size} vertices, |G| = {group.order}")
        bases = members
        if sample is not None and members.size > sample:
            bases = members[np.linspace(0, members.size - 1, sample).astype(np.int64)]
        for u in bases:
            image = np.sort(perms[:, u])
            if not np.array_equal(image, members):
                missing = np.setdiff1d(members, image)
                witness = int(missing[0]) if missing.size else int(u)
                raise ActionError(f"action is not regular on colour class {cls}", (int(u), witness))
    return perms


def regular_action_difference_set(graph: BipartiteGraph, group: FiniteAbelianGroup,
                                  action: Action, y: int, z: int,
                                  sample: int | None = None) -> tuple[GroupElement, ...]:
    """D = {g in G : z^g is adjacent to y}, in group-element order."""
    if graph.colour[y] == graph.colour[z]:
        raise ActionError("y and z must lie in different colour classes", (y, z))
    if sample is None and graph.vertex_count > 2 * EXHAUSTIVE_LIMIT:
        sample = 64
    perms = check_action(graph, group, action, sample=sample)
    nbrs_y = set(graph.adjacency[y])
    diff = tuple(g for g, p in zip(group.elements(), perms) if int(p[z]) in nbrs_y)
    if len(diff) != graph.valency:
        raise ActionError(f"|D| = {len(diff)} differs from the valency {graph.valency}")
    return diff


def _hamming_graph(length: int, distances: set[int]) -> BipartiteGraph:
    labels = list(itertools.product((0, 1), repeat=length))
    index = {v: i for i, v in enumerate(labels)}
    adjacency = []
    for v in labels:
        nbrs = []
        for u in labels:
            if sum(a != b for a, b in zip(u, v)) in distances:
                nbrs.append(index[u])
        adjacency.append(tuple(nbrs))
    colour = tuple(sum(v) % 2 for v in labels)
    return BipartiteGraph(tuple(labels), tuple(adjacency), colour)


def build_8_cycle() -> BipartiteGraph:
    """The 8-cycle on Z_2 x Z_4: (0, a) ~ (1, b) iff b - a in {0, 1} (mod 4)."""
    labels = [(x, y) for x in range(2) for y in range(4)]
    index = {v: i for i, v in enumerate(labels)}
    adjacency = []
    for x, y in labels:
        if x == 0:
            nbrs = [(1, y), (1, (y + 1) % 4)]
        else:
            nbrs = [(0, y), (0, (y - 1) % 4)]
        adjacency.append(tuple(index[v] for v in nbrs))
    return BipartiteGraph(tuple(labels), tuple(adjacency), tuple(x for x, _ in labels))


def build_4_cube() -> BipartiteGraph:
    return _hamming_graph(4, {1})


def build_folded_8_cube() -> BipartiteGraph:
    """Z_2^7 with adjacency at Hamming distance 1 or 7."""
    return _hamming_graph(7, {1, 7})


def format_adjacency(graph: Graph) -> str:
    lines = [f"2n={graph.vertex_count} k={graph.valency}"]
    for v, nbrs in enumerate(graph.adjacency):
        lines.append(f"{v}: {' '.join(map(str, nbrs))}")
    return "\n".join(lines) + "\n"


def parse_adjacency(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = dict(part.split("=") for part in lines[0].split())
    adjacency = []
    for i, line in enumerate(lines[1:]):
        idx, _, rest = line.partition(":")
        if int(idx) != i:
            raise ValueError(f"vertex lines out of order at {idx}")
        adjacency.append(tuple(int(x) for x in rest.split()))
    graph = Graph(tuple(range(len(adjacency))), tuple(adjacency))
    if graph.vertex_count != int(header["2n"]) or graph.valency != int(header["k"]):
        raise ValueError("adjacency header does not match the body")
    return graph

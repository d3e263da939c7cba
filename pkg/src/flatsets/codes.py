"""Linear codes over prime fields, their cosets, and coset graphs.

Coset representatives are canonical: the minimum-weight member of the coset,
ties broken by lexicographic order of the coordinate tuple.  Cosets are
keyed internally by syndrome.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from flatsets.fields import FiniteField
from flatsets.groups import FiniteAbelianGroup, GroupElement
from flatsets.linalg import nullspace_mod_p, rank_mod_p, rref_mod_p

MAX_COSETS = 2**16
# Upper limit on vectors examined while searching for coset leaders.
LEADER_SEARCH_BUDGET = 20_000_000

Vector = tuple[int, ...]


class CodeError(ValueError):
    pass


class DegenerateCodeError(CodeError):
    pass


class CodeSizeError(CodeError):
    pass


class KasamiParameterError(CodeError):
    pass


class StructureError(CodeError):
    pass


GOLAY_A = (
    "011111111111",
    "111011100010",
    "110111000101",
    "101110001011",
    "111100010110",
    "111000101101",
    "110001011011",
    "100010110111",
    "100101101110",
    "101011011100",
    "110110111000",
    "101101110001",
)


def weight(v) -> int:
    return int(np.count_nonzero(v))


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A subspace of F_q^length, stored by a reduced generator matrix."""

    field: FiniteField
    length: int
    generator: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        if self.field.degree != 1:
            raise CodeError("codes are defined over prime fields only")
        gen = np.asarray(self.generator, dtype=np.int64).reshape(-1, self.length)
        gen, _ = rref_mod_p(gen, self.q) if gen.size else (gen, [])
        gen.setflags(write=False)
        object.__setattr__(self, "generator", gen)

    @classmethod
    def from_generators(cls, rows, q: int, length: int | None = None, name: str = "") -> LinearCode:
        rows = np.asarray(rows, dtype=np.int64)
        if length is None:
            length = rows.shape[1]
        return cls(FiniteField(q), length, rows.reshape(-1, length), name)

    @classmethod
    def from_parity_check(cls, check, q: int, name: str = "") -> LinearCode:
        check = np.asarray(check, dtype=np.int64)
        return cls(FiniteField(q), check.shape[1], nullspace_mod_p(check, q), name)

    @property
    def q(self) -> int:
        return self.field.characteristic

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    @property
    def redundancy(self) -> int:
        return self.length - self.dimension

    @property
    def num_cosets(self) -> int:
        return self.q**self.redundancy

    @cached_property
    def parity_check(self) -> np.ndarray:
        h = nullspace_mod_p(self.generator, self.q, self.length) if self.dimension \
            else np.eye(self.length, dtype=np.int64)
        h.setflags(write=False)
        return h

    def syndrome(self, v) -> np.ndarray:
        return self.parity_check @ np.asarray(v, dtype=np.int64) % self.q

    def contains(self, v) -> bool:
        return not self.syndrome(v).any()

    def codewords(self) -> np.ndarray:
        coeffs = np.array(list(itertools.product(range(self.q), repeat=self.dimension)),
                          dtype=np.int64).reshape(self.q**self.dimension, self.dimension)
        return coeffs @ self.generator % self.q

    def weight_distribution(self) -> dict[int, int]:
        weights = np.count_nonzero(self.codewords(), axis=1)
        values, counts = np.unique(weights, return_counts=True)
        return {int(w): int(c) for w, c in zip(values, counts)}

    def minimum_weight(self) -> int:
        nonzero = [w for w in self.weight_distribution() if w > 0]
        return min(nonzero) if nonzero else 0

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LinearCode{label} [{self.length},{self.dimension}]_{self.q}>"


def golay_code() -> LinearCode:
    """Extended binary Golay code generated by [I | A]."""
    a = np.array([[int(ch) for ch in row] for row in GOLAY_A], dtype=np.int64)
    return LinearCode.from_generators(np.hstack([np.eye(12, dtype=np.int64), a]), 2, name="golay")


def vls_code() -> LinearCode:
    """The ternary repetition code of length 6 (van Lint-Schrijver)."""
    return LinearCode.from_generators([[1] * 6], 3, name="vls")


@dataclass(frozen=True)
class KasamiParams:
    """Parameters of an extended Kasami code K(s, t).

    variant "i": s = q^(2j+1), t = q^m with m <= j and gcd(m, 2j+1) = 1.
    variant "ii": s = q^2, t = q.
    """

    q: int
    variant: str
    j: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        q = self.q
        if q < 2 or q & (q - 1):
            raise KasamiParameterError(f"q must be a power of 2, got {q}")
        if self.variant == "i":
            if self.j is None or self.m is None:
                raise KasamiParameterError("variant i needs j and m")
            if not 1 <= self.m <= self.j:
                raise KasamiParameterError(f"need 1 <= m <= j, got m={self.m}, j={self.j}")
            if math.gcd(self.m, 2 * self.j + 1) != 1:
                raise KasamiParameterError(f"gcd(m, 2j+1) must be 1, got m={self.m}, j={self.j}")
        elif self.variant == "ii":
            if self.j is not None or self.m is not None:
                raise KasamiParameterError("variant ii takes no j or m")
        else:
            raise KasamiParameterError(f"variant must be 'i' or 'ii', got {self.variant!r}")

    @property
    def s(self) -> int:
        return self.q ** (2 * self.j + 1) if self.variant == "i" else self.q**2

    @property
    def t(self) -> int:
        return self.q**self.m if self.variant == "i" else self.q

    def expected_parameters(self) -> tuple[int, int, int, int]:
        """(n, k, c2, c3) of the coset graph."""
        q, j = self.q, self.j
        if self.variant == "i":
            return q ** (4 * j + 2), q ** (2 * j + 1), q, q ** (2 * j) - 1
        return q**3, q**2, q, q**2 - 1

    def expected_theta1(self) -> int:
        return self.q ** (self.j + 1) if self.variant == "i" else self.q

    def label(self) -> str:
        if self.variant == "i":
            return f"q={self.q},variant=i,j={self.j},m={self.m}"
        return f"q={self.q},variant=ii"


def kasami_check_matrix(params: KasamiParams) -> np.ndarray:
    """Binary parity checks: even weight, sum x_a a = 0, sum x_a a^(t+1) = 0.

    Coordinates are indexed by the field elements 0..s-1 in integer order.
    """
    s, t = params.s, params.t
    deg = s.bit_length() - 1
    field_ = FiniteField(2, deg) if deg > 1 else FiniteField(2)
    rows = [[1] * s]
    lin = [field_.bits(a) for a in range(s)]
    cub = [field_.bits(field_.pow(a, t + 1)) for a in range(s)]
    rows += [list(r) for r in zip(*lin)]
    rows += [list(r) for r in zip(*cub)]
    return np.array(rows, dtype=np.int64)


def kasami_code(params: KasamiParams) -> LinearCode:
    check = kasami_check_matrix(params)
    redundancy = rank_mod_p(check, 2)
    if 2**redundancy > MAX_COSETS:
        raise CodeSizeError(f"K({params.s},{params.t}) has 2^{redundancy} cosets, above 2^16")
    return LinearCode.from_parity_check(check, 2, name=f"kasami({params.s},{params.t})")


def _syndrome_keys(syndromes: np.ndarray, q: int) -> np.ndarray:
    powers = q ** np.arange(syndromes.shape[-1], dtype=np.int64)
    return syndromes @ powers


def _coset_leaders(code: LinearCode) -> dict[int, Vector]:
    """Canonical representative for every coset, keyed by syndrome key."""
    q, m = code.q, code.length
    h = code.parity_check
    total = code.num_cosets
    col_keys = [int(k) for k in _syndrome_keys(h.T, q)]
    r = h.shape[0]
    col_syn = [tuple(int(x) for x in h[:, i]) for i in range(m)]
    leaders: dict[int, Vector] = {}
    examined = 0
    for w in range(m + 1):
        best: dict[int, int] = {}
        for support in itertools.combinations(range(m), w):
            for values in itertools.product(range(1, q), repeat=w):
                examined += 1
                if examined > LEADER_SEARCH_BUDGET:
                    raise CodeSizeError("coset leader search exceeds its budget")
                if q == 2:
                    key = 0
                    for i in support:
                        key ^= col_keys[i]
                else:
                    syn = [0] * r
                    for i, a in zip(support, values):
                        syn = [(x + a * y) % q for x, y in zip(syn, col_syn[i])]
                    key = sum(x * q**i for i, x in enumerate(syn))
                if key in leaders:
                    continue
                # base-q integer read most significant first: orders like the tuple
                code_int = sum(a * q ** (m - 1 - i) for i, a in zip(support, values))
                if key not in best or code_int < best[key]:
                    best[key] = code_int
        for key, code_int in best.items():
            digits = []
            for _ in range(m):
                code_int, d = divmod(code_int, q)
                digits.append(d)
            leaders[key] = tuple(reversed(digits))
        if len(leaders) == total:
            return leaders
    raise StructureError("coset enumeration did not cover the syndrome space")


@dataclass(frozen=True)
class Coset:
    representative: Vector


class CosetSpace:
    """All cosets of a code, indexed by canonical representative in lex order."""

    def __init__(self, code: LinearCode) -> None:
        if code.num_cosets > MAX_COSETS:
            raise CodeSizeError(f"{code.num_cosets} cosets exceeds the 2^16 cap")
        self.code = code
        leaders = _coset_leaders(code)
        self.representatives: list[Vector] = sorted(leaders.values())
        reps = np.array(self.representatives, dtype=np.int64).reshape(-1, code.length)
        self.syndromes = (reps @ code.parity_check.T) % code.q
        self.keys = _syndrome_keys(self.syndromes, code.q)
        self.lookup = np.full(code.num_cosets, -1, dtype=np.int64)
        self.lookup[self.keys] = np.arange(len(self.representatives))

    def __len__(self) -> int:
        return len(self.representatives)

    def index_of_syndrome(self, syndrome) -> int:
        return int(self.lookup[int(_syndrome_keys(np.asarray(syndrome, dtype=np.int64), self.code.q))])

    def index(self, v) -> int:
        return self.index_of_syndrome(self.code.syndrome(v))

    def canonical(self, v) -> Vector:
        return self.representatives[self.index(v)]

    def coset(self, v) -> Coset:
        return Coset(self.canonical(v))

    def translate(self, syndrome) -> np.ndarray:
        """Permutation of coset indices given by adding a fixed syndrome."""
        shifted = (self.syndromes + np.asarray(syndrome, dtype=np.int64)) % self.code.q
        return self.lookup[_syndrome_keys(shifted, self.code.q)]

    def coordinate_sums(self) -> np.ndarray:
        """Coordinate sum mod q of each representative (constant on cosets when
        every codeword has coordinate sum zero)."""
        reps = np.array(self.representatives, dtype=np.int64)
        return reps.sum(axis=1) % self.code.q


def coset_graph(code: LinearCode, space: CosetSpace | None = None):
    """Graph on the cosets; X ~ Y iff X - Y contains a weight-one vector."""
    from flatsets.graphs import Graph

    h = code.parity_check
    if not h.any(axis=0).all():
        raise DegenerateCodeError("code contains a weight-one codeword")
    if space is None:
        space = CosetSpace(code)
    q = code.q
    columns = []
    for i in range(code.length):
        for a in range(1, q):
            columns.append(space.translate(a * h[:, i]))
    nbrs = np.stack(columns, axis=1)
    adjacency = tuple(tuple(int(x) for x in np.unique(row)) for row in nbrs)
    return Graph(labels=tuple(space.representatives), adjacency=adjacency)


def even_coset_subgroup(code: LinearCode, space: CosetSpace | None = None
                        ) -> tuple[FiniteAbelianGroup, dict[GroupElement, Vector]]:
    """Cosets whose members have coordinate sum 0, as Z_q^r.

    For binary codes these are the even cosets.  Returns the group and a map
    from group elements to canonical coset representatives.
    """
    q, m = code.q, code.length
    if (code.generator.sum(axis=1) % q).any():
        raise StructureError("coordinate sum (parity) is not constant on cosets")
    if space is None:
        space = CosetSpace(code)
    spanning = []
    for i in range(1, m):
        v = np.zeros(m, dtype=np.int64)
        v[0], v[i] = 1, q - 1
        spanning.append(v)
    basis: list[np.ndarray] = []
    syndromes: list[np.ndarray] = []
    for v in spanning:
        syn = code.syndrome(v)
        if rank_mod_p(np.array(syndromes + [syn]), q) > len(syndromes):
            basis.append(v)
            syndromes.append(syn)
    if q ** len(basis) * q != code.num_cosets:
        raise StructureError("sum-zero cosets do not form an index-q subgroup")
    group = FiniteAbelianGroup((q,) * len(basis))
    basis_arr = np.array(basis, dtype=np.int64)
    mapping = {g: space.canonical(np.array(g, dtype=np.int64) @ basis_arr % q)
               for g in group.elements()}
    return group, mapping

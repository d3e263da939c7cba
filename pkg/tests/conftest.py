from functools import cache

import numpy as np
import pytest
from hypothesis import settings

from flatsets.codes import KasamiParams
from flatsets.construction import FlatVectorSet, godsil_roy
from flatsets.families import get_setup

settings.register_profile("repo", deadline=None, max_examples=60)
settings.load_profile("repo")

K42 = KasamiParams(2, "ii")
K82 = KasamiParams(2, "i", j=1, m=1)

# The matrices printed for the two smallest families, one vector per row.
PRINTED_8_CYCLE = FlatVectorSet(2, 4, np.array([[0, 0], [1, 3], [0, 1], [1, 0]]))
_cube_signs = np.array([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1],
    [1, -1, 1, -1, 1, -1, 1, -1],
    [1, -1, -1, 1, -1, 1, 1, -1],
])
PRINTED_4_CUBE = FlatVectorSet(4, 2, (_cube_signs.T < 0).astype(np.int64))


@cache
def setup_for(name: str):
    if name == "kasami(4,2)":
        return get_setup("kasami", K42)
    if name == "kasami(8,2)":
        return get_setup("kasami", K82)
    return get_setup(name)


@cache
def vectors_for(name: str) -> FlatVectorSet:
    s = setup_for(name)
    return godsil_roy(s.graph, s.group, s.action, s.y, s.z)


@pytest.fixture
def setup():
    return setup_for


@pytest.fixture
def vectors():
    return vectors_for

import pytest

from cwlattice import Graph

# 6-cycle a-b-c-d-e-f plus the chords bf and ce; m(G) = 3 but im(G) = 2,
# so it is connected yet not Cameron-Walker.
CHORDED_HEXAGON_NAMES = list("abcdef")
CHORDED_HEXAGON_EDGES = [
    ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"),
    ("e", "f"), ("f", "a"), ("b", "f"), ("c", "e"),
]


@pytest.fixture
def chorded_hexagon() -> Graph:
    idx = {name: i for i, name in enumerate(CHORDED_HEXAGON_NAMES)}
    return Graph.from_edges(6, [(idx[a], idx[b]) for a, b in CHORDED_HEXAGON_EDGES])

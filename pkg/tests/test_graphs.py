"""Graph machinery tests: matching brute force, recognition, realization."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cwlattice import (
    ArityMismatchError,
    CwStructure,
    DomainError,
    EdgeListParseError,
    Graph,
    GraphTooLargeError,
    MAX_BRUTE_FORCE_EDGES,
    RealizationKind,
    build_graph,
    edge_ideal_generators,
    enumerate_cwdd_a,
    enumerate_cwdd_b,
    enumerate_cwdd_c,
    format_edge_list,
    induced_matching_number,
    is_cameron_walker,
    is_connected,
    is_star,
    is_star_triangle,
    matching_number,
    parse_edge_list,
    parse_graph,
    realize,
    structure_vertex_names,
)

from conftest import CHORDED_HEXAGON_EDGES


# ---------------------------------------------------------------------------
# subset-enumeration oracles (exponential, for tiny graphs only)
# ---------------------------------------------------------------------------

def oracle_matching(g: Graph) -> int:
    edges = sorted(g.edges)
    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for combo in combinations(edges, r):
            used = [v for e in combo for v in e]
            if len(used) == len(set(used)):
                best = max(best, r)
                break
    return best


def oracle_induced_matching(g: Graph) -> int:
    edges = sorted(g.edges)
    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for combo in combinations(edges, r):
            used = [v for e in combo for v in e]
            if len(used) != len(set(used)):
                continue
            joined = any(
                (min(s, t), max(s, t)) in g.edges
                for e, f in combinations(combo, 2)
                for s in e
                for t in f
            )
            if not joined:
                best = max(best, r)
                break
    return best


# ---------------------------------------------------------------------------
# Graph basics
# ---------------------------------------------------------------------------

def test_from_edges_normalizes_and_deduplicates():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (1, 2)])
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_from_edges_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(vertex_count=0, edges=frozenset())


def test_connectivity():
    assert is_connected(Graph.from_edges(1, []))
    assert not is_connected(Graph.from_edges(2, []))
    assert is_connected(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


# ---------------------------------------------------------------------------
# matching numbers
# ---------------------------------------------------------------------------

def test_matching_examples(chorded_hexagon):
    assert matching_number(chorded_hexagon) == 3
    assert induced_matching_number(chorded_hexagon) == 2
    single = Graph.from_edges(2, [(0, 1)])
    assert matching_number(single) == 1
    assert induced_matching_number(single) == 1
    star4 = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert matching_number(star4) == 1
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert induced_matching_number(p4) == 1
    assert matching_number(p4) == 2


def test_matching_on_assorted_small_graphs():
    cases = [
        Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]),
        Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)]),
    ]
    for g in cases:
        assert matching_number(g) == oracle_matching(g)
        assert induced_matching_number(g) == oracle_induced_matching(g)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs), max_size=9))
    return Graph.from_edges(n, edges)


@given(small_graphs())
@settings(max_examples=120, deadline=None)
def test_matching_matches_subset_oracle(g):
    m = matching_number(g)
    im = induced_matching_number(g)
    assert m == oracle_matching(g)
    assert im == oracle_induced_matching(g)
    assert im <= m <= g.vertex_count // 2


def test_matching_size_cap():
    g = Graph.from_edges(34, [(i, i + 1) for i in range(33)])
    assert len(g.edges) == MAX_BRUTE_FORCE_EDGES + 1
    with pytest.raises(GraphTooLargeError):
        matching_number(g)
    with pytest.raises(GraphTooLargeError):
        induced_matching_number(g)


# ---------------------------------------------------------------------------
# recognition
# ---------------------------------------------------------------------------

def test_star_and_star_triangle_shapes():
    star4 = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert is_star(star4)
    assert not is_star_triangle(star4)
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert is_star_triangle(triangle)
    assert not is_star(triangle)
    # two triangles glued at vertex 0
    bouquet = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert is_star_triangle(bouquet)
    # triangle with one extra leaf is neither
    lollipop = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert not is_star(lollipop)
    assert not is_star_triangle(lollipop)


def test_is_cameron_walker_examples(chorded_hexagon):
    assert is_cameron_walker(build_graph(CwStructure(1, 1, (1,), (1,))))
    assert not is_cameron_walker(Graph.from_edges(5, [(0, i) for i in range(1, 5)]))
    assert not is_cameron_walker(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_cameron_walker(chorded_hexagon)  # m=3 vs im=2
    assert not is_cameron_walker(Graph.from_edges(4, [(0, 1), (2, 3)]))  # disconnected


# ---------------------------------------------------------------------------
# skeletons
# ---------------------------------------------------------------------------

def test_build_graph_five_vertex_examples():
    g = build_graph(CwStructure(1, 1, (1,), (1,)))
    assert g.vertex_count == 5
    assert g.edges == frozenset({(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)})
    g = build_graph(CwStructure(2, 1, (1, 1), (0,)))
    assert g.vertex_count == 5
    assert g.edges == frozenset({(0, 2), (1, 2), (0, 3), (1, 4)})


def test_structure_invariants_rejected():
    with pytest.raises(ValueError):
        CwStructure(1, 1, (0,), (0,))
    with pytest.raises(ValueError):
        CwStructure(0, 1, (), (0,))
    with pytest.raises(ValueError):
        CwStructure(1, 0, (1,), ())
    with pytest.raises(ValueError):
        CwStructure(2, 1, (1,), (0,))
    with pytest.raises(ValueError):
        CwStructure(1, 1, (1,), (-1,))


@st.composite
def small_structures(draw):
    m = draw(st.integers(min_value=1, max_value=3))
    p = draw(st.integers(min_value=1, max_value=3))
    s = tuple(draw(st.integers(min_value=1, max_value=3)) for _ in range(m))
    t = tuple(draw(st.integers(min_value=0, max_value=2)) for _ in range(p))
    return CwStructure(m, p, s, t)


@given(small_structures())
@settings(max_examples=80, deadline=None)
def test_built_graphs_have_equal_matching_numbers(cw):
    g = build_graph(cw)
    if cw.vertex_count > 16:
        return
    assert g.vertex_count == cw.vertex_count
    assert is_connected(g)
    assert matching_number(g) == induced_matching_number(g)
    degenerate_star = cw.m == 1 and sum(cw.t) == 0
    assert is_cameron_walker(g) == (not degenerate_star)


# ---------------------------------------------------------------------------
# edge ideal generators
# ---------------------------------------------------------------------------

def test_edge_ideal_generators_chorded_hexagon(chorded_hexagon):
    gens = edge_ideal_generators(chorded_hexagon, list("abcdef"))
    assert gens == [
        ("a", "b"), ("a", "f"), ("b", "c"), ("b", "f"),
        ("c", "d"), ("c", "e"), ("d", "e"), ("e", "f"),
    ]
    # unordered generator set matches the edge set regardless of spelling
    assert {frozenset(g) for g in gens} == {
        frozenset(e) for e in CHORDED_HEXAGON_EDGES
    }


def test_edge_ideal_generators_defaults_and_errors():
    single = Graph.from_edges(2, [(0, 1)])
    assert edge_ideal_generators(single) == [("x0", "x1")]
    empty = Graph.from_edges(3, [])
    assert edge_ideal_generators(empty) == []
    with pytest.raises(ValueError):
        edge_ideal_generators(single, ["only-one"])


def test_generators_round_trip_to_edges(chorded_hexagon):
    names = list("abcdef")
    gens = edge_ideal_generators(chorded_hexagon, names)
    assert len(gens) == len(chorded_hexagon.edges)
    idx = {name: i for i, name in enumerate(names)}
    rebuilt = Graph.from_edges(6, [(idx[a], idx[b]) for a, b in gens])
    assert rebuilt.edges == chorded_hexagon.edges


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

def test_realize_examples():
    r = realize(10, (4, 4))
    assert r.kind is RealizationKind.CM_DIAGONAL
    assert (r.structure.m, r.structure.p) == (2, 2)
    assert r.structure.s == (1, 1) and r.structure.t == (1, 1)
    assert r.structure.vertex_count == 10

    r = realize(10, (2, 8))
    assert r.kind is RealizationKind.DEPTH2_DIM_N_MINUS_2
    assert (r.structure.m, r.structure.p, r.structure.s, r.structure.t) == (2, 1, (4, 3), (0,))

    r = realize(11, (2, 5))
    assert r.kind is RealizationKind.DEPTH2_DIM_HALF
    assert (r.structure.m, r.structure.p, r.structure.s, r.structure.t) == (1, 1, (1,), (4,))

    r = realize(9, (2, 6))
    assert r.kind is RealizationKind.DEPTH2_DIM_N_MINUS_3
    assert (r.structure.m, r.structure.p, r.structure.s, r.structure.t) == (1, 1, (5,), (1,))


def test_realize_prefers_diagonal_at_n5():
    r = realize(5, (2, 2))
    assert r.kind is RealizationKind.CM_DIAGONAL
    assert (r.structure.m, r.structure.p, r.structure.s, r.structure.t) == (1, 1, (1,), (1,))


def test_realize_unsupported_and_errors():
    assert realize(12, (3, 5)).kind is RealizationKind.UNSUPPORTED
    assert realize(9, (3, 3)).kind is RealizationKind.UNSUPPORTED  # 3b = n fails 3b > n
    assert realize(12, (6, 6)).kind is RealizationKind.UNSUPPORTED  # 2b = n fails 2b < n
    with pytest.raises(DomainError):
        realize(4, (2, 2))
    with pytest.raises(ArityMismatchError):
        realize(10, (2, 8, 8))


def test_diagonal_window_is_exactly_component_b():
    for n in range(5, 41):
        b_points = set(enumerate_cwdd_b(n))
        for b in range(1, n + 1):
            result = realize(n, (b, b))
            if (b, b) in b_points:
                assert result.kind is RealizationKind.CM_DIAGONAL
                assert result.structure.m >= 1 and result.structure.p >= 1
                assert result.structure.vertex_count == n
            else:
                assert result.kind is RealizationKind.UNSUPPORTED


def test_realized_structures_build_cameron_walker_graphs():
    for n in range(5, 15):
        points = set(enumerate_cwdd_a(n)) | set(enumerate_cwdd_b(n))
        for point in points:
            result = realize(n, point)
            assert result.kind is not RealizationKind.UNSUPPORTED
            assert result.structure.vertex_count == n
            g = build_graph(result.structure)
            assert g.vertex_count == n
            assert is_connected(g)
            assert matching_number(g) == induced_matching_number(g)
            assert is_cameron_walker(g)
        for point in enumerate_cwdd_c(n):
            assert realize(n, point).kind is RealizationKind.UNSUPPORTED


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def test_parse_edge_list_basic():
    g, names = parse_edge_list("a b\nb c\n")
    assert g.vertex_count == 3 and len(g.edges) == 2
    assert names == ["a", "b", "c"]


def test_parse_edge_list_comments_blanks_duplicates():
    text = "# heading\n\na b\nb a\n  \nb c\n"
    g, names = parse_edge_list(text)
    assert len(g.edges) == 2
    assert names == ["a", "b", "c"]


def test_parse_edge_list_errors():
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list("a a\n")
    assert info.value.line == 1
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list("a b\nc\n")
    assert info.value.line == 2
    with pytest.raises(EdgeListParseError):
        parse_edge_list("# nothing\n")


def test_parse_graph_drops_names():
    assert parse_graph("a b\nb c\n").vertex_count == 3


def test_format_parse_round_trip():
    cw = CwStructure(2, 2, (1, 2), (1, 0))
    g = build_graph(cw)
    names = structure_vertex_names(cw)
    text = format_edge_list(g, names)
    assert text == format_edge_list(*parse_edge_list(text))
    reparsed, _ = parse_edge_list(text)
    assert len(reparsed.edges) == len(g.edges)
    assert reparsed.vertex_count == g.vertex_count

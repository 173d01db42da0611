"""Cameron-Walker graph structures: construction, recognition, realization.

A Cameron-Walker graph is a finite connected simple graph whose maximum
matching number equals its maximum induced matching number and which is
neither a star nor a star triangle.  Structurally it is a connected
bipartite core on parts {u_1..u_m} and {v_1..v_p} with at least one leaf
hanging from every u_i and any number (possibly zero) of pendant triangles
hanging from each v_j.

This module models that skeleton (:class:`CwStructure`), builds explicit
graphs from it, decides matching invariants by exhaustive search, checks
the Cameron-Walker property, emits edge-ideal generators, and realizes
achievable (depth, dim) lattice points as skeletons.

Matching searches are exact branch-and-bound over edge subsets and are
capped at MAX_BRUTE_FORCE_EDGES edges; beyond the cap a
GraphTooLargeError asks the caller to shrink the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    ArityMismatchError,
    DomainError,
    EdgeListParseError,
    GraphTooLargeError,
)

MAX_BRUTE_FORCE_EDGES = 32


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: a vertex count and a set of unordered pairs.

    Edges are stored as (u, v) with u < v; loops and multi-edges cannot be
    represented.  Vertices are 0 .. vertex_count - 1.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        for u, v in self.edges:
            if not 0 <= u < v < self.vertex_count:
                raise ValueError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        """Build a graph from any iterable of vertex pairs, normalizing order
        and collapsing duplicates; loops are rejected."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        return cls(vertex_count=vertex_count, edges=frozenset(normalized))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability of every vertex from vertex 0."""
    if g.vertex_count == 1:
        return True
    adj = g.adjacency()
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == g.vertex_count


# ---------------------------------------------------------------------------
# matching numbers by branch and bound
# ---------------------------------------------------------------------------

def _largest_conflict_free(conflicts: list[int]) -> int:
    """Max number of items no two of which conflict (masks exclude self).

    Branch and bound over a bitmask of still-available items: take the
    lowest available item or skip it, pruning when even taking everything
    left cannot beat the incumbent.
    """
    best = 0

    def grow(avail: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while avail:
            if size + avail.bit_count() <= best:
                return
            low = avail & -avail
            avail &= ~low
            grow(avail & ~conflicts[low.bit_length() - 1], size + 1)

    grow((1 << len(conflicts)) - 1, 0)
    return best


def _check_size(g: Graph) -> list[tuple[int, int]]:
    if len(g.edges) > MAX_BRUTE_FORCE_EDGES:
        raise GraphTooLargeError(
            f"{len(g.edges)} edges exceeds the exhaustive-search cap of "
            f"{MAX_BRUTE_FORCE_EDGES}; shrink the instance"
        )
    return sorted(g.edges)


def matching_number(g: Graph) -> int:
    """Maximum size of a set of pairwise vertex-disjoint edges (exact)."""
    edges = _check_size(g)
    conflicts = [0] * len(edges)
    for a, (u, v) in enumerate(edges):
        for b in range(a + 1, len(edges)):
            x, y = edges[b]
            if u in (x, y) or v in (x, y):
                conflicts[a] |= 1 << b
                conflicts[b] |= 1 << a
    return _largest_conflict_free(conflicts)


def induced_matching_number(g: Graph) -> int:
    """Maximum matching whose edges are also pairwise unjoined by any edge.

    Two chosen edges conflict when they share a vertex or when some edge of
    the graph connects an endpoint of one to an endpoint of the other.
    """
    edges = _check_size(g)
    edge_set = g.edges
    conflicts = [0] * len(edges)
    for a, (u, v) in enumerate(edges):
        for b in range(a + 1, len(edges)):
            x, y = edges[b]
            if {u, v} & {x, y} or any(
                (min(s, t), max(s, t)) in edge_set for s in (u, v) for t in (x, y)
            ):
                conflicts[a] |= 1 << b
                conflicts[b] |= 1 << a
    return _largest_conflict_free(conflicts)


# ---------------------------------------------------------------------------
# recognition
# ---------------------------------------------------------------------------

def is_star(g: Graph) -> bool:
    """True for K_{1,r}: a connected graph whose edges all share one vertex."""
    if not g.edges or not is_connected(g):
        return False
    common = set(next(iter(g.edges)))
    for u, v in g.edges:
        common &= {u, v}
        if not common:
            return False
    return True


def is_star_triangle(g: Graph) -> bool:
    """True for a bouquet of triangles glued at one shared vertex.

    Characterization used: some center c is adjacent to every other vertex
    and the edges avoiding c form a perfect matching on the remaining
    vertices (each matched pair closes a triangle through c).  A single
    triangle is the degenerate one-triangle case.
    """
    n = g.vertex_count
    if n < 3 or n % 2 == 0:
        return False
    if len(g.edges) != (n - 1) + (n - 1) // 2:
        return False
    adj = g.adjacency()
    for c in range(n):
        if len(adj[c]) != n - 1:
            continue
        matched: set[int] = set()
        ok = True
        for u, v in g.edges:
            if c in (u, v):
                continue
            if u in matched or v in matched:
                ok = False
                break
            matched.update((u, v))
        if ok and len(matched) == n - 1:
            return True
    return False


def is_cameron_walker(g: Graph) -> bool:
    """Connected, matching number equals induced matching number, and
    neither a star nor a star triangle."""
    if not is_connected(g):
        return False
    if matching_number(g) != induced_matching_number(g):
        return False
    return not is_star(g) and not is_star_triangle(g)


# ---------------------------------------------------------------------------
# skeletons and construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CwStructure:
    """Skeleton of a Cameron-Walker graph.

    m, p are the bipartite part sizes; s[i] >= 1 counts the leaves on u_i;
    t[j] >= 0 counts the pendant triangles on v_j.  The built graph has
    m + p + sum(s) + 2 sum(t) vertices.
    """

    m: int
    p: int
    s: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "t", tuple(self.t))
        if self.m < 1 or self.p < 1:
            raise ValueError("both bipartite parts need at least one vertex")
        if len(self.s) != self.m:
            raise ValueError(f"need {self.m} leaf counts, got {len(self.s)}")
        if len(self.t) != self.p:
            raise ValueError(f"need {self.p} triangle counts, got {len(self.t)}")
        if any(si < 1 for si in self.s):
            raise ValueError("every u-vertex needs at least one leaf (s_i >= 1)")
        if any(tj < 0 for tj in self.t):
            raise ValueError("triangle counts must be nonnegative")

    @property
    def vertex_count(self) -> int:
        return self.m + self.p + sum(self.s) + 2 * sum(self.t)


def build_graph(cw: CwStructure) -> Graph:
    """Materialize a skeleton as an explicit graph.

    The bipartite core is the complete bipartite graph K_{m,p} (any
    connected core would do; the complete one guarantees connectivity with
    no case analysis).  Vertex labels: u-vertices 0..m-1, v-vertices
    m..m+p-1, then the leaves grouped by u_i in index order, then the
    triangle vertex pairs grouped by v_j.
    """
    m, p = cw.m, cw.p
    edges: list[tuple[int, int]] = [(ui, vj) for ui in range(m) for vj in range(m, m + p)]
    nxt = m + p
    for i in range(m):
        for _ in range(cw.s[i]):
            edges.append((i, nxt))
            nxt += 1
    for j in range(p):
        vj = m + j
        for _ in range(cw.t[j]):
            w0, w1 = nxt, nxt + 1
            edges.extend([(vj, w0), (vj, w1), (w0, w1)])
            nxt += 2
    return Graph.from_edges(nxt, edges)


def structure_vertex_names(cw: CwStructure) -> list[str]:
    """Human-readable labels matching build_graph's vertex numbering:
    u0.., v0.., leaves l0.., triangle vertices w0.. in construction order."""
    names = [f"u{i}" for i in range(cw.m)] + [f"v{j}" for j in range(cw.p)]
    names += [f"l{i}" for i in range(sum(cw.s))]
    names += [f"w{i}" for i in range(2 * sum(cw.t))]
    return names


# ---------------------------------------------------------------------------
# edge ideal generators
# ---------------------------------------------------------------------------

def edge_ideal_generators(
    g: Graph, names: list[str] | None = None
) -> list[tuple[str, str]]:
    """One generator per edge as a label pair, endpoints in label order,
    the list sorted lexicographically.  Default labels are x0, x1, ..."""
    if names is None:
        names = [f"x{i}" for i in range(g.vertex_count)]
    if len(names) != g.vertex_count:
        raise ValueError(
            f"got {len(names)} labels for {g.vertex_count} vertices"
        )
    gens = [tuple(sorted((names[u], names[v]))) for u, v in g.edges]
    return sorted(gens)


# ---------------------------------------------------------------------------
# realization of (depth, dim) points
# ---------------------------------------------------------------------------

class RealizationKind(Enum):
    CM_DIAGONAL = "CM_diagonal"
    DEPTH2_DIM_N_MINUS_2 = "depth2_dim_n_minus_2"
    DEPTH2_DIM_N_MINUS_3 = "depth2_dim_n_minus_3"
    DEPTH2_DIM_HALF = "depth2_dim_half"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class RealizationResult:
    kind: RealizationKind
    structure: CwStructure | None

    def __post_init__(self):
        if (self.structure is None) != (self.kind is RealizationKind.UNSUPPORTED):
            raise ValueError("structure must be present exactly when supported")


def realize(n: int, point: tuple[int, int]) -> RealizationResult:
    """Produce a skeleton on n vertices achieving the (depth, dim) point.

    Supported points and canonical skeletons:

    * (b, b) with 3b > n and 2b < n: the Cohen-Macaulay skeleton with
      m = 3b - n, p = n - 2b and every s_i = t_j = 1 (so the bipartite part
      has exactly b vertices and 2m + 3p = n).
    * (2, n-2): m = 2, p = 1, no triangles, leaves split as evenly as
      possible (the point only forces m = 2 and t = 0; p = 1 and the
      balanced split are canonical tie-breaks).
    * (2, n-3): m = p = 1, one triangle, n - 4 leaves.
    * (2, (n-1)/2) for odd n >= 7: m = p = 1, one leaf, (n-3)/2 triangles.

    At n = 5 the point (2, 2) is simultaneously diagonal and depth-2; the
    diagonal (Cohen-Macaulay) skeleton is returned.  Any other point,
    including the whole staircase block, is reported unsupported: no
    structural characterization of its realizing graphs is implemented.
    """
    if n < 5:
        raise DomainError(f"realization needs n >= 5, got {n}")
    if len(point) != 2:
        raise ArityMismatchError(f"expected a (depth, dim) pair, got {point!r}")
    a, b = point
    if a == b and 3 * b > n and 2 * b < n:
        m, p = 3 * b - n, n - 2 * b
        return RealizationResult(
            RealizationKind.CM_DIAGONAL, CwStructure(m, p, (1,) * m, (1,) * p)
        )
    if a == 2 and b == n - 2:
        hi, lo = (n - 2) // 2, (n - 3) // 2
        return RealizationResult(
            RealizationKind.DEPTH2_DIM_N_MINUS_2, CwStructure(2, 1, (hi, lo), (0,))
        )
    if a == 2 and b == n - 3:
        return RealizationResult(
            RealizationKind.DEPTH2_DIM_N_MINUS_3, CwStructure(1, 1, (n - 4,), (1,))
        )
    if a == 2 and n % 2 == 1 and 2 * b == n - 1 and n >= 7:
        return RealizationResult(
            RealizationKind.DEPTH2_DIM_HALF, CwStructure(1, 1, (1,), ((n - 3) // 2,))
        )
    return RealizationResult(RealizationKind.UNSUPPORTED, None)


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """Parse edge-list text into a graph plus the vertex labels.

    Format: UTF-8, one edge per line as two whitespace-separated vertex
    tokens; lines starting with '#' and blank lines are ignored.  Vertices
    are numbered in first-appearance order; duplicate edges collapse; a
    loop line is an error.
    """
    index: dict[str, int] = {}
    names: list[str] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two vertex tokens, got {len(tokens)}", line=lineno
            )
        a, b = tokens
        if a == b:
            raise EdgeListParseError(f"loop edge at vertex {a!r}", line=lineno)
        for tok in (a, b):
            if tok not in index:
                index[tok] = len(names)
                names.append(tok)
        edges.append((index[a], index[b]))
    if not names:
        raise EdgeListParseError("no edges found in input")
    return Graph.from_edges(len(names), edges), names


def parse_graph(text: str) -> Graph:
    """Parse edge-list text, discarding the vertex labels."""
    return parse_edge_list(text)[0]


def format_edge_list(g: Graph, names: list[str] | None = None) -> str:
    """Canonical edge-list emission: per-line tokens in label order, lines
    sorted lexicographically, trailing newline."""
    if names is None:
        names = [f"x{i}" for i in range(g.vertex_count)]
    if len(names) != g.vertex_count:
        raise ValueError(f"got {len(names)} labels for {g.vertex_count} vertices")
    lines = sorted(tuple(sorted((names[u], names[v]))) for u, v in g.edges)
    return "".join(f"{a} {b}\n" for a, b in lines)

"""Simple undirected graphs on vertices 1..n.

Parsing and serialization of the edge-list text format, connected
components, induced subgraphs, path/cycle classification, degree-2
smoothing, and small-scale graph generation for tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

from .rng import SplitMix64

Edge = tuple[int, int]


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertices 1..n, edges stored as pairs (u, v) with u < v."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) is not a pair with 1 <= u < v <= {self.n}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from arbitrary vertex pairs, normalizing and rejecting loops/duplicates."""
    seen: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = normalize_edge(u, v)
        if e in seen:
            raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
    return Graph(n, frozenset(seen))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header line "n m", then m lines "u v".

    Lines starting with '#' are comments; blank lines are skipped.  All
    errors report the offending 1-based line number.
    """
    n = m = -1
    edges: set[Edge] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n < 0:
            if len(tokens) != 2:
                raise EdgeListError("expected header 'n m'", lineno)
            try:
                n, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise EdgeListError("header values must be integers", lineno) from None
            if n < 1:
                raise EdgeListError(f"vertex count must be positive, got {n}", lineno)
            if m < 0:
                raise EdgeListError(f"edge count must be nonnegative, got {m}", lineno)
            continue
        if len(edges) == m:
            raise EdgeListError("unexpected data after the last edge", lineno)
        if len(tokens) != 2:
            raise EdgeListError("expected an edge 'u v'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError("edge endpoints must be integers", lineno) from None
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeListError(f"edge ({u}, {v}) out of range 1..{n}", lineno)
        e = normalize_edge(u, v)
        if e in edges:
            raise EdgeListError(f"duplicate edge ({e[0]}, {e[1]})", lineno)
        edges.add(e)
    if n < 0:
        raise EdgeListError("missing header 'n m'", max(lineno, 1))
    if len(edges) != m:
        raise EdgeListError(f"expected {m} edges, found {len(edges)}", max(lineno, 1))
    return Graph(n, frozenset(edges))


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list: header "n m" plus one sorted "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of 1..n into maximal connected sets, ordered by smallest member."""
    adj = g.adjacency()
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for start in g.vertices:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        comp = {start}
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the given vertex set, relabeled to 1..|s|.

    Returns the subgraph together with the relabeling map, new vertex ->
    original vertex (new labels follow the sorted order of the originals).
    """
    s = sorted(set(members))
    if not s:
        raise ValueError("vertex set must be nonempty")
    for v in s:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    to_original = {i + 1: v for i, v in enumerate(s)}
    local = {v: i + 1 for i, v in enumerate(s)}
    keep = set(s)
    edges = frozenset(
        normalize_edge(local[u], local[v]) for u, v in g.edges if u in keep and v in keep
    )
    return Graph(len(s), edges), to_original


class ShapeKind(Enum):
    SINGLE_VERTEX = "single_vertex"
    PATH = "path"
    CYCLE = "cycle"
    OTHER = "other"


@dataclass(frozen=True)
class PathOrCycleShape:
    kind: ShapeKind
    endpoints: tuple[int, int] | None = None


def classify_path_or_cycle(g: Graph) -> PathOrCycleShape:
    """Classify a connected graph as a single vertex, a path, a cycle, or other.

    PATH covers a single edge; endpoints are reported as (min, max).
    OTHER means some vertex has degree 3 or more.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if g.n == 1:
        return PathOrCycleShape(ShapeKind.SINGLE_VERTEX)
    deg = g.degrees()
    if any(d >= 3 for d in deg.values()):
        return PathOrCycleShape(ShapeKind.OTHER)
    ends = sorted(v for v, d in deg.items() if d == 1)
    if not ends:
        return PathOrCycleShape(ShapeKind.CYCLE)
    return PathOrCycleShape(ShapeKind.PATH, (ends[0], ends[1]))


def smooth_degree2(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Suppress degree-2 vertices until none remain.

    Each step removes one degree-2 vertex and joins its two neighbors
    directly.  Fails if the joining edge already exists (this can only
    happen on graphs with cycles).  Returns the smoothed graph relabeled
    to 1..k and the provenance map, new vertex -> original vertex.
    """
    adj = g.adjacency()
    alive = set(g.vertices)
    while True:
        target = min((v for v in alive if len(adj[v]) == 2), default=None)
        if target is None:
            break
        u, w = sorted(adj[target])
        if w in adj[u]:
            raise ValueError(
                f"smoothing vertex {target} would create a duplicate edge ({u}, {w})"
            )
        adj[u].discard(target)
        adj[w].discard(target)
        adj[u].add(w)
        adj[w].add(u)
        alive.remove(target)
        del adj[target]
    survivors = sorted(alive)
    local = {v: i + 1 for i, v in enumerate(survivors)}
    edges = frozenset(
        normalize_edge(local[u], local[v]) for u in survivors for v in adj[u] if u < v
    )
    return Graph(len(survivors), edges), {i + 1: v for i, v in enumerate(survivors)}


def subgraph_embedding_problems(g: Graph, host: Graph, mapping: dict[int, int]) -> list[str]:
    """Check that mapping is an injective, edge-preserving map of g into host."""
    problems: list[str] = []
    for v in g.vertices:
        if v not in mapping:
            problems.append(f"vertex {v} has no image")
        elif not 1 <= mapping[v] <= host.n:
            problems.append(f"vertex {v} maps to {mapping[v]}, outside the host graph")
    images: dict[int, int] = {}
    for v in sorted(mapping):
        img = mapping[v]
        if img in images:
            problems.append(f"vertices {images[img]} and {v} both map to {img}")
        images[img] = v
    if problems:
        return problems
    for u, v in sorted(g.edges):
        if not host.has_edge(mapping[u], mapping[v]):
            problems.append(
                f"edge ({u}, {v}) maps to ({mapping[u]}, {mapping[v]}), not a host edge"
            )
    return problems


MAX_ENUMERATION_N = 7


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled simple graphs on vertices 1..n, in a fixed order."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"refusing to enumerate n={n} > {MAX_ENUMERATION_N}")
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Independent-edge random graph, deterministic for a fixed seed."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = SplitMix64(seed)
    edges = frozenset(
        p for p in combinations(range(1, n + 1), 2) if rng.chance(edge_probability)
    )
    return Graph(n, edges)

"""Caterpillar host trees for width-2 trees.

The target family is the caterpillar on 3n-4 vertices: a spine path of n
vertices whose n-2 interior vertices each carry two pendant leaves.  A
tree with cutwidth at most 2 embeds into a chain of cycles; because the
tree is acyclic, each cycle has an unused edge that can be cut open,
leaving a tree whose junctions line up on a spine with pendant paths
hanging off them.  Padding interior junctions up to two pendants yields a
subdivision of the caterpillar, recognized by smoothing degree-2 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from .chains import ChainOfCycles, Embedding, build_chain, underlying_graph, verify_embedding
from .graphs import (
    Edge,
    Graph,
    connected_components,
    normalize_edge,
    smooth_degree2,
    subgraph_embedding_problems,
)
from .layouts import find_width2_layout


@dataclass(frozen=True)
class GnGraph:
    """The caterpillar target with spine length parameter n (vertices: 3n-4)."""

    n: int
    graph: Graph
    spine: tuple[int, ...]
    pendants: dict[int, tuple[int, int]]


def make_gn(n: int) -> GnGraph:
    """Spine 1..n; interior spine vertex i owns pendant leaves n+2(i-2)+1, n+2(i-2)+2.

    For n = 2 there are no interior vertices and the graph is a single edge.
    """
    if n < 2:
        raise ValueError(f"spine parameter must be at least 2, got {n}")
    edges = [(i, i + 1) for i in range(1, n)]
    pendants: dict[int, tuple[int, int]] = {}
    nxt = n + 1
    for i in range(2, n):
        pendants[i] = (nxt, nxt + 1)
        edges.append((i, nxt))
        edges.append((i, nxt + 1))
        nxt += 2
    return GnGraph(n, Graph(3 * n - 4, frozenset(edges)), tuple(range(1, n + 1)), pendants)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and len(connected_components(g)) == 1


@dataclass(frozen=True)
class OpenedChain:
    """A chain cut open along an embedded tree: one edge deleted per cycle.

    graph is the resulting tree in the underlying graph's labels;
    junctions lists the junction vertices in chain order; pendants maps a
    junction to the pendant paths hanging off it (each path listed from
    the junction outward); chain_to_graph carries the chain-id relabeling.
    """

    graph: Graph
    junctions: tuple[int, ...]
    pendants: dict[int, tuple[tuple[int, ...], ...]]
    deleted_edges: tuple[Edge, ...]
    chain_to_graph: dict[int, int]

    @property
    def spine_endpoints(self) -> tuple[int, int]:
        return self.junctions[0], self.junctions[-1]


def _cycle_arcs(cyc) -> tuple[list[int], list[int]]:
    """Both a-to-b arcs of a cycle, endpoints included."""
    vs = list(cyc.vertices)
    start = vs.index(cyc.a)
    vs = vs[start:] + vs[:start]
    split = vs.index(cyc.b)
    forward = vs[: split + 1]
    backward = [cyc.a] + vs[: split - 1 : -1]
    return forward, backward


def open_chain(chain: ChainOfCycles, tree: Graph, embedding: Embedding) -> OpenedChain:
    """Delete one unused edge per cycle, turning the chain into a tree host.

    The tree is acyclic, so its image cannot cover all edges of any cycle;
    among the unused edges of each cycle the deletion that splits the
    broken arc most evenly is chosen, ties broken by smallest edge.
    """
    problems = verify_embedding(tree, chain, embedding)
    if problems:
        raise ValueError(f"embedding does not verify: {problems[0]}")
    comps = connected_components(tree)
    if tree.m != tree.n - len(comps):
        raise ValueError("input graph contains a cycle")

    used = {normalize_edge(embedding[u], embedding[v]) for u, v in tree.edges}
    host, to_vertex = underlying_graph(chain)

    deleted: list[Edge] = []
    pendant_lists: dict[int, list[tuple[int, ...]]] = {}
    for cyc in chain.cycles:
        best = None
        for arc in _cycle_arcs(cyc):
            for s in range(len(arc) - 1):
                edge = normalize_edge(arc[s], arc[s + 1])
                if edge in used:
                    continue
                near = arc[1 : s + 1]
                far = arc[s + 1 : -1][::-1]
                key = (abs(len(near) - len(far)), edge)
                if best is None or key < best[0]:
                    best = (key, edge, near, far)
        assert best is not None, "a tree cannot use every edge of a cycle"
        _, edge, near, far = best
        deleted.append(edge)
        if near:
            pendant_lists.setdefault(to_vertex[cyc.a], []).append(
                tuple(to_vertex[x] for x in near)
            )
        if far:
            pendant_lists.setdefault(to_vertex[cyc.b], []).append(
                tuple(to_vertex[x] for x in far)
            )

    removed = {normalize_edge(to_vertex[u], to_vertex[v]) for u, v in deleted}
    opened = Graph(host.n, host.edges - removed)
    assert is_tree(opened), "opening must leave a connected acyclic graph"

    junction_ids = [chain.cycles[0].a] + [cyc.b for cyc in chain.cycles]
    return OpenedChain(
        graph=opened,
        junctions=tuple(to_vertex[cid] for cid in junction_ids),
        pendants={j: tuple(paths) for j, paths in pendant_lists.items()},
        deleted_edges=tuple(deleted),
        chain_to_graph=to_vertex,
    )


def pad_to_gn(opened: OpenedChain) -> tuple[Graph, int, Embedding]:
    """Add fresh leaves so every interior junction carries exactly two pendants.

    Junction endpoints are left alone: an endpoint with a pendant has
    degree 2 and smooths into the spine.  Returns the host graph, the
    spine parameter (junction count), and the inclusion of the opened
    tree into the host.
    """
    fresh = count(opened.graph.n + 1)
    extra: list[Edge] = []
    for junction in opened.junctions[1:-1]:
        have = len(opened.pendants.get(junction, ()))
        assert have <= 2, f"junction {junction} has {have} pendant paths"
        for _ in range(2 - have):
            extra.append(normalize_edge(junction, next(fresh)))
    host = Graph(opened.graph.n + len(extra), opened.graph.edges | frozenset(extra))
    inclusion = {v: v for v in opened.graph.vertices}
    return host, len(opened.junctions), inclusion


def is_homeomorphic_to_gn(h: Graph) -> int | None:
    """The spine parameter n if h is a subdivision of the caterpillar target.

    Smooths all degree-2 vertices and matches the result against the
    pattern: every branch vertex has degree exactly 4 and the branch
    vertices lie on one path, each carrying its remaining neighbors as
    leaves.  Returns None for anything else; only trees qualify.
    """
    if len(connected_components(h)) != 1:
        raise ValueError("graph must be connected")
    if h.m != h.n - 1:
        return None
    smoothed, _ = smooth_degree2(h)
    if smoothed.n == 1:
        return None
    if smoothed.n == 2:
        return 2
    adj = smoothed.adjacency()
    internal = {v for v in smoothed.vertices if len(adj[v]) >= 3}
    for v in internal:
        if len(adj[v]) != 4:
            return None
        if len(adj[v] & internal) > 2:
            return None
    return len(internal) + 2


def tree_to_gn(tree: Graph) -> tuple[Graph, int, Embedding] | None:
    """Embed a width-2 tree into a subdivision-of-caterpillar host.

    Returns (host graph, spine parameter, embedding), or None when the
    tree's cutwidth exceeds 2.  The result is re-verified before returning.
    """
    if not is_tree(tree):
        raise ValueError("input graph is not a tree")
    if tree.n == 1:
        return make_gn(2).graph, 2, {1: 1}
    layout = find_width2_layout(tree)
    if layout is None:
        return None
    chain, chain_embedding = build_chain(tree, layout)
    opened = open_chain(chain, tree, chain_embedding)
    host, spine_parameter, _ = pad_to_gn(opened)
    embedding = {v: opened.chain_to_graph[chain_embedding[v]] for v in tree.vertices}
    problems = subgraph_embedding_problems(tree, host, embedding)
    assert not problems, f"host embedding does not verify: {problems[0]}"
    assert is_homeomorphic_to_gn(host) == spine_parameter
    return host, spine_parameter, embedding

"""Chains of cycles and the two directions of the width-2 characterization.

A chain is a sequence of simple cycles Z_1..Z_k with designated junctions
a_j, b_j on each cycle: consecutive cycles share exactly the one vertex
b_{j-1} = a_j, and non-consecutive cycles are disjoint.  Every subgraph
of a chain has cutwidth at most 2 (canonical_layout exhibits the layout),
and every graph with a width-2 layout embeds into a chain (build_chain
constructs it).  verify_embedding checks the subgraph relation literally,
independent of how a chain was produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterator

from .graphs import Edge, Graph, is_connected, normalize_edge
from .layouts import LinearLayout, cut_profile, layout_positions
from .rng import SplitMix64

Embedding = dict[int, int]


class ChainError(ValueError):
    """A chain failed validation where a valid one was required."""

    def __init__(self, violations: list[str]) -> None:
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class Cycle:
    """One cycle of a chain: vertex ids in cyclic order plus junctions a and b."""

    vertices: tuple[int, ...]
    a: int
    b: int

    def edge_set(self) -> set[Edge]:
        k = len(self.vertices)
        return {
            normalize_edge(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)
        }


@dataclass(frozen=True)
class ChainOfCycles:
    cycles: tuple[Cycle, ...]

    def vertex_ids(self) -> set[int]:
        ids: set[int] = set()
        for cyc in self.cycles:
            ids.update(cyc.vertices)
        return ids

    def edge_set(self) -> set[Edge]:
        edges: set[Edge] = set()
        for cyc in self.cycles:
            edges.update(cyc.edge_set())
        return edges


def validate_chain(chain: ChainOfCycles) -> list[str]:
    """All chain invariants; returns the (possibly empty) list of violations."""
    violations: list[str] = []
    if not chain.cycles:
        violations.append("chain has no cycles")
        return violations
    sets: list[set[int]] = []
    for j, cyc in enumerate(chain.cycles, start=1):
        vs = set(cyc.vertices)
        sets.append(vs)
        if len(cyc.vertices) < 3:
            violations.append(f"cycle {j} has {len(cyc.vertices)} vertices, need at least 3")
        if len(vs) != len(cyc.vertices):
            violations.append(f"cycle {j} repeats a vertex")
        if any(v < 1 for v in cyc.vertices):
            violations.append(f"cycle {j} has a non-positive vertex id")
        if cyc.a not in vs:
            violations.append(f"cycle {j}: junction a={cyc.a} is not on the cycle")
        if cyc.b not in vs:
            violations.append(f"cycle {j}: junction b={cyc.b} is not on the cycle")
        if cyc.a == cyc.b:
            violations.append(f"cycle {j}: junctions a and b coincide at {cyc.a}")
    for i in range(len(chain.cycles)):
        for j in range(i + 1, len(chain.cycles)):
            shared = sets[i] & sets[j]
            if j - i > 1:
                if shared:
                    violations.append(
                        f"cycles {i + 1} and {j + 1} must be disjoint, share {sorted(shared)}"
                    )
                continue
            b_prev = chain.cycles[i].b
            a_next = chain.cycles[j].a
            if b_prev != a_next:
                violations.append(
                    f"cycle {i + 1} ends at b={b_prev} but cycle {j + 1} starts at a={a_next}"
                )
            if shared != {b_prev}:
                violations.append(
                    f"cycles {i + 1} and {j + 1} must intersect exactly in {{{b_prev}}},"
                    f" got {sorted(shared)}"
                )
    return violations


def _require_valid(chain: ChainOfCycles) -> None:
    violations = validate_chain(chain)
    if violations:
        raise ChainError(violations)


def underlying_graph(chain: ChainOfCycles) -> tuple[Graph, dict[int, int]]:
    """The chain as a plain graph, renumbered to 1..N.

    Returns the graph and the renumbering map, chain id -> graph vertex
    (chain ids are assigned 1..N in increasing order).
    """
    _require_valid(chain)
    ids = sorted(chain.vertex_ids())
    to_vertex = {cid: i + 1 for i, cid in enumerate(ids)}
    edges = frozenset(
        normalize_edge(to_vertex[u], to_vertex[v]) for u, v in chain.edge_set()
    )
    return Graph(len(ids), edges), to_vertex


def _arc_interiors(cyc: Cycle) -> tuple[list[int], list[int]]:
    """Interior vertices of the two a-b arcs, each listed walking from a to b."""
    vs = list(cyc.vertices)
    start = vs.index(cyc.a)
    vs = vs[start:] + vs[:start]
    split = vs.index(cyc.b)
    forward = vs[1:split]
    backward = vs[:split:-1]
    return forward, backward


def canonical_layout(chain: ChainOfCycles) -> LinearLayout:
    """A width-2 layout of underlying_graph(chain).

    Cycle by cycle: place a_j, then one a-b arc interior in arc order,
    then the other arc interior, then b_j (shared junctions are placed
    once).  Every gap is crossed by at most one open edge per arc.
    """
    _require_valid(chain)
    seq: list[int] = []
    for idx, cyc in enumerate(chain.cycles):
        if idx == 0:
            seq.append(cyc.a)
        forward, backward = _arc_interiors(cyc)
        seq.extend(forward)
        seq.extend(backward)
        seq.append(cyc.b)
    _, to_vertex = underlying_graph(chain)
    return LinearLayout(tuple(to_vertex[cid] for cid in seq))


def verify_embedding(g: Graph, chain: ChainOfCycles, embedding: Embedding) -> list[str]:
    """Check the subgraph relation: injective, total on g, edges land on chain edges."""
    problems: list[str] = []
    ids = chain.vertex_ids()
    for v in g.vertices:
        if v not in embedding:
            problems.append(f"vertex {v} has no image")
        elif embedding[v] not in ids:
            problems.append(f"vertex {v} maps to {embedding[v]}, which is not on the chain")
    images: dict[int, int] = {}
    for v in sorted(embedding):
        img = embedding[v]
        if img in images:
            problems.append(f"vertices {images[img]} and {v} both map to chain vertex {img}")
        images[img] = v
    if problems:
        return problems
    chain_edges = chain.edge_set()
    for u, v in sorted(g.edges):
        img = normalize_edge(embedding[u], embedding[v])
        if img not in chain_edges:
            problems.append(
                f"edge ({u}, {v}) maps to ({img[0]}, {img[1]}), which is not a chain edge"
            )
    return problems


def _interval_separators(adj: dict[int, set[int]], lo: int, hi: int) -> list[int]:
    """Separating positions of the block [lo, hi], in increasing order."""
    separating = {i: True for i in range(lo, hi + 1)}
    for u in range(lo, hi + 1):
        for v in adj[u]:
            if u < v <= hi:
                for i in range(u + 1, v):
                    separating[i] = False
    return [i for i in range(lo, hi + 1) if separating[i]]


def _walk_order(adj: dict[int, set[int]], start: int, lo: int, hi: int) -> list[int]:
    """Walk a path or cycle block from start, preferring smaller neighbors."""
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = min(
            (w for w in adj[cur] if lo <= w <= hi and w != prev and w != start),
            default=None,
        )
        if nxt is None:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _base_cycle(adj: dict[int, set[int]], lo: int, hi: int, fresh: Iterator[int]) -> Cycle:
    """Close a two-separator block into one cycle with junctions lo and hi.

    The block is guaranteed (by the width-2 hypothesis) to be a connected
    path or cycle; a violation here is a bug, not bad input.
    """
    block = range(lo, hi + 1)
    local_deg = {v: sum(1 for w in adj[v] if lo <= w <= hi) for v in block}
    assert all(d <= 2 for d in local_deg.values()), (
        f"block [{lo}, {hi}] contains a vertex of degree 3 or more"
    )
    if hi - lo + 1 == 2:
        assert hi in adj[lo], f"block [{lo}, {hi}] is disconnected"
        return Cycle((lo, hi, next(fresh)), lo, hi)
    ends = sorted(v for v in block if local_deg[v] <= 1)
    if ends:
        assert len(ends) == 2 and local_deg[ends[0]] == 1 and local_deg[ends[1]] == 1, (
            f"block [{lo}, {hi}] is disconnected"
        )
        tour = _walk_order(adj, ends[0], lo, hi)
    else:
        tour = _walk_order(adj, lo, lo, hi)
    assert len(tour) == hi - lo + 1, f"block [{lo}, {hi}] is disconnected"
    return Cycle(tuple(tour), lo, hi)


def build_chain(g: Graph, layout: LinearLayout) -> tuple[ChainOfCycles, Embedding]:
    """Embed a connected graph with a width-2 layout into a chain of cycles.

    Working in position space (vertex = its layout position): with k
    separating positions, the block between consecutive separators up to
    the smallest one past the start is closed into a single cycle, and the
    rest is handled the same way, giving exactly k-1 cycles whose shared
    junctions are the separators.  A block that is a path is closed by the
    edge between its own endpoints; a two-vertex block borrows one fresh
    dummy vertex to reach cycle length 3.  Dummy ids start at n+1.

    Returns the chain plus the embedding keyed by original vertex ids;
    the image of the position-1 vertex is a_1 and the image of the
    position-n vertex is b_{k-1}.
    """
    pos = layout_positions(g, layout)
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    width = max(cut_profile(g, layout), default=0)
    if width > 2:
        raise ValueError(f"layout has width {width}, need at most 2")

    adj: dict[int, set[int]] = {p: set() for p in range(1, g.n + 1)}
    for u, v in g.edges:
        adj[pos[u]].add(pos[v])
        adj[pos[v]].add(pos[u])

    fresh = count(g.n + 1)
    cycles: list[Cycle] = []
    lo, hi = 1, g.n
    while True:
        separators = _interval_separators(adj, lo, hi)
        if len(separators) == 2:
            cycles.append(_base_cycle(adj, lo, hi, fresh))
            break
        x = separators[1]
        cycles.append(_base_cycle(adj, lo, x, fresh))
        lo = x
    embedding = {v: pos[v] for v in g.vertices}
    return ChainOfCycles(tuple(cycles)), embedding


@dataclass(frozen=True)
class ComponentPart:
    """One connected component prepared for assembly.

    graph is the component relabeled to 1..m; host_vertices[i-1] is the
    original id of local vertex i.  chain and embedding are None exactly
    for a single isolated vertex, which has no chain of its own.
    """

    graph: Graph
    host_vertices: tuple[int, ...]
    chain: ChainOfCycles | None
    embedding: Embedding | None


def assemble_components(parts: list[ComponentPart]) -> tuple[ChainOfCycles, Embedding]:
    """Concatenate per-component chains into one chain for the whole graph.

    Identifying junctions across components would merge distinct graph
    vertices, so consecutive chains are joined by a spacer triangle made
    of the preceding chain's last junction, one fresh dummy, and the
    following chain's first junction.  An isolated vertex rides as the
    non-junction vertex of its own spacer cycle.  In the assembled chain
    every real vertex keeps its host id; dummies get ids above all of
    them.  A single non-isolated part is returned unchanged.
    """
    if not parts:
        raise ValueError("need at least one component")
    _check_parts(parts)
    if len(parts) == 1 and parts[0].chain is not None:
        part = parts[0]
        assert part.embedding is not None
        return part.chain, {
            part.host_vertices[v - 1]: cid for v, cid in part.embedding.items()
        }

    fresh = count(max(max(p.host_vertices) for p in parts) + 1)
    cycles: list[Cycle] = []
    combined: Embedding = {}
    b_last: int | None = None
    for part in parts:
        if part.chain is None:
            host = part.host_vertices[0]
            combined[host] = host
            first = next(fresh) if b_last is None else b_last
            last = next(fresh)
            cycles.append(Cycle((first, host, last), first, last))
            b_last = last
            continue
        assert part.embedding is not None
        remap: dict[int, int] = {
            cid: part.host_vertices[v - 1] for v, cid in part.embedding.items()
        }
        for cid in sorted(part.chain.vertex_ids()):
            if cid not in remap:
                remap[cid] = next(fresh)
        renamed = [
            Cycle(tuple(remap[x] for x in cyc.vertices), remap[cyc.a], remap[cyc.b])
            for cyc in part.chain.cycles
        ]
        if b_last is not None:
            a_next = renamed[0].a
            cycles.append(Cycle((b_last, next(fresh), a_next), b_last, a_next))
        cycles.extend(renamed)
        b_last = renamed[-1].b
        for v, cid in part.embedding.items():
            combined[part.host_vertices[v - 1]] = remap[cid]
    chain = ChainOfCycles(tuple(cycles))
    violations = validate_chain(chain)
    assert not violations, f"assembly produced an invalid chain: {violations}"
    return chain, combined


def _check_parts(parts: list[ComponentPart]) -> None:
    seen: set[int] = set()
    for idx, part in enumerate(parts, start=1):
        if len(part.host_vertices) != part.graph.n:
            raise ValueError(f"part {idx}: host vertex list does not match the graph size")
        overlap = seen.intersection(part.host_vertices)
        if overlap or len(set(part.host_vertices)) != len(part.host_vertices):
            raise ValueError(f"part {idx}: overlapping vertex ids {sorted(overlap)}")
        seen.update(part.host_vertices)
        if part.graph.n == 1:
            if part.chain is not None or part.embedding is not None:
                raise ValueError(f"part {idx}: an isolated vertex must not carry a chain")
            continue
        if part.chain is None or part.embedding is None:
            raise ValueError(f"part {idx}: missing chain or embedding")
        violations = validate_chain(part.chain)
        if violations:
            raise ValueError(f"part {idx}: invalid chain: {violations[0]}")
        problems = verify_embedding(part.graph, part.chain, part.embedding)
        if problems:
            raise ValueError(f"part {idx}: embedding does not verify: {problems[0]}")


def random_chain(cycle_count: int, max_cycle_len: int, seed: int) -> ChainOfCycles:
    """A valid random chain: cycle lengths uniform in [3, max_cycle_len],
    junctions distinct within each cycle, deterministic for a fixed seed."""
    if cycle_count < 1:
        raise ValueError(f"cycle count must be positive, got {cycle_count}")
    if max_cycle_len < 3:
        raise ValueError(f"max cycle length must be at least 3, got {max_cycle_len}")
    rng = SplitMix64(seed)
    fresh = count(1)
    cycles: list[Cycle] = []
    a = next(fresh)
    for _ in range(cycle_count):
        length = 3 + rng.below(max_cycle_len - 2)
        vertices = (a, *(next(fresh) for _ in range(length - 1)))
        b = vertices[1 + rng.below(length - 1)]
        cycles.append(Cycle(vertices, a, b))
        a = b
    return ChainOfCycles(tuple(cycles))


def random_subgraph(chain: ChainOfCycles, keep_probability: float, seed: int) -> Graph:
    """Spanning random subgraph of the underlying graph: every vertex kept,
    each edge kept independently with the given probability."""
    if not 0.0 <= keep_probability <= 1.0:
        raise ValueError(f"keep probability must lie in [0, 1], got {keep_probability}")
    g, _ = underlying_graph(chain)
    rng = SplitMix64(seed)
    kept = frozenset(e for e in sorted(g.edges) if rng.chance(keep_probability))
    return Graph(g.n, kept)

"""Linear layouts and cutwidth.

A layout numbers the vertices by positions 1..n.  The cut profile counts,
for each gap i between positions i and i+1, the edges with one endpoint
at position <= i and the other at position > i.  The exact optimum is
computed by dynamic programming over vertex subsets; a dedicated pruned
search decides the width-2 question for graphs far beyond the DP cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, connected_components

DEFAULT_DP_CAP = 22


@dataclass(frozen=True)
class LinearLayout:
    """A permutation of the vertices: order[p-1] is the vertex at position p."""

    order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    def positions(self) -> dict[int, int]:
        """Inverse view: vertex -> position."""
        return {v: p for p, v in enumerate(self.order, start=1)}


def layout_positions(g: Graph, layout: LinearLayout) -> dict[int, int]:
    """Validate that layout is a permutation of g's vertices; return vertex -> position."""
    if sorted(layout.order) != list(g.vertices):
        raise ValueError("layout is not a permutation of the graph's vertices")
    return layout.positions()


def cut_profile(g: Graph, layout: LinearLayout) -> tuple[int, ...]:
    """Crossing-edge counts c_1..c_{n-1}; empty for a single vertex."""
    pos = layout_positions(g, layout)
    cuts = [0] * (g.n - 1)
    for u, v in g.edges:
        lo, hi = sorted((pos[u], pos[v]))
        for i in range(lo, hi):
            cuts[i - 1] += 1
    return tuple(cuts)


def layout_width(g: Graph, layout: LinearLayout) -> int:
    return max(cut_profile(g, layout), default=0)


def separating_vertices(g: Graph, layout: LinearLayout) -> frozenset[int]:
    """Positions i such that no edge joins a vertex before i to one after i.

    Positions 1 and n qualify vacuously and are always included.
    """
    pos = layout_positions(g, layout)
    separating = [True] * (g.n + 1)
    for u, v in g.edges:
        lo, hi = sorted((pos[u], pos[v]))
        for i in range(lo + 1, hi):
            separating[i] = False
    return frozenset(i for i in range(1, g.n + 1) if separating[i])


@dataclass(frozen=True)
class CutwidthResult:
    width: int
    layout: LinearLayout


def exact_cutwidth(g: Graph, max_n: int = DEFAULT_DP_CAP) -> CutwidthResult:
    """Exact cutwidth by subset DP, with a deterministic witness layout.

    best(S) is the cheapest achievable maximum cut over all orderings that
    place exactly the set S first; it satisfies best(S) = max(boundary(S),
    min over v in S of best(S minus v)), where boundary(S) counts edges
    leaving S.  Memory grows as 2^n, hence the cap.
    """
    if g.n > max_n:
        raise ValueError(f"vertex count {g.n} exceeds the DP cap {max_n}")
    n = g.n
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u - 1] |= 1 << (v - 1)
        adj_mask[v - 1] |= 1 << (u - 1)
    deg = [mask.bit_count() for mask in adj_mask]

    size = 1 << n
    boundary = [0] * size
    best = [0] * size
    last = [0] * size
    for s in range(1, size):
        low = s & -s
        i = low.bit_length() - 1
        rest = s ^ low
        boundary[s] = boundary[rest] + deg[i] - 2 * (adj_mask[i] & rest).bit_count()
        best_prev = None
        arg = i
        t = s
        while t:
            bit = t & -t
            v = bit.bit_length() - 1
            t ^= bit
            cand = best[s ^ bit]
            if best_prev is None or cand < best_prev:
                best_prev = cand
                arg = v
        best[s] = max(boundary[s], best_prev)
        last[s] = arg

    order = [0] * n
    s = size - 1
    for p in range(n, 0, -1):
        v = last[s]
        order[p - 1] = v + 1
        s ^= 1 << v
    return CutwidthResult(best[size - 1], LinearLayout(tuple(order)))


def find_width2_layout(g: Graph) -> LinearLayout | None:
    """A layout of width at most 2 if one exists, else None.

    Searches each connected component separately (a gap between components
    carries no edges, so the concatenated width is the maximum over
    components).  Within a component the search extends prefixes, prunes
    any prefix whose boundary cut exceeds 2, memoizes failed prefix sets,
    and always tries the smallest unplaced vertex first, which makes the
    result deterministic.
    """
    adj = g.adjacency()
    order: list[int] = []
    for comp in connected_components(g):
        comp_order = _width2_component_order(sorted(comp), adj)
        if comp_order is None:
            return None
        order.extend(comp_order)
    return LinearLayout(tuple(order))


def _width2_component_order(vertices: list[int], adj: dict[int, set[int]]) -> list[int] | None:
    m = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    masks = [0] * m
    for v in vertices:
        i = index[v]
        for w in adj[v]:
            masks[i] |= 1 << index[w]
    degs = [mask.bit_count() for mask in masks]

    full = (1 << m) - 1
    dead: set[int] = set()
    chosen: list[int] = []
    cuts = [0]
    next_try = [0]
    placed = 0
    while True:
        if placed == full:
            return [vertices[i] for i in chosen]
        depth = len(chosen)
        i = next_try[depth]
        moved = False
        while i < m:
            bit = 1 << i
            if not placed & bit:
                new_cut = cuts[-1] + degs[i] - 2 * (masks[i] & placed).bit_count()
                if new_cut <= 2 and (placed | bit) not in dead:
                    next_try[depth] = i + 1
                    chosen.append(i)
                    placed |= bit
                    cuts.append(new_cut)
                    next_try.append(0)
                    moved = True
                    break
            i += 1
        if moved:
            continue
        if not chosen:
            return None
        dead.add(placed)
        lastv = chosen.pop()
        placed ^= 1 << lastv
        cuts.pop()
        next_try.pop()

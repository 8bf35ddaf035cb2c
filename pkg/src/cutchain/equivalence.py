"""Equivalence harness: both directions of the width-2 characterization.

The forward sweep enumerates every labeled graph up to max_n, compares
the width-2 search against the subset-DP optimum, and runs the full
certificate pipeline (per-component construction, assembly, independent
verification, and the structural invariants of the construction).  The
converse sweep draws random chains, checks the canonical layout, and
confirms that random spanning subgraphs still have cutwidth at most 2.
Failures are data, not exceptions, and carry a replayable edge list.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .certificates import Certificate, component_parts, verify_certificate
from .chains import (
    ChainOfCycles,
    Embedding,
    assemble_components,
    canonical_layout,
    random_chain,
    random_subgraph,
    underlying_graph,
    validate_chain,
    verify_embedding,
)
from .graphs import Graph, connected_components, enumerate_labeled_graphs, induced_subgraph, serialize_edge_list
from .layouts import (
    LinearLayout,
    exact_cutwidth,
    find_width2_layout,
    layout_width,
    separating_vertices,
)
from .rng import SplitMix64

HARNESS_MAX_N = 7


@dataclass(frozen=True)
class Failure:
    graph: str
    stage: str
    detail: str


@dataclass
class EquivalenceReport:
    checked: int
    failures: list[Failure]
    seed: int
    max_n: int
    elapsed: float = 0.0

    def to_document(self) -> dict:
        return {
            "checked": self.checked,
            "failures": [
                {"graph": f.graph, "stage": f.stage, "detail": f.detail}
                for f in self.failures
            ],
            "seed": self.seed,
            "max_n": self.max_n,
        }


def component_invariant_problems(
    piece: Graph, layout: LinearLayout, chain: ChainOfCycles, embedding: Embedding
) -> list[str]:
    """Structural facts the construction must satisfy on one connected piece.

    The chain has one cycle fewer than there are separating positions; the
    first and last placed vertices map to the outer junctions; a piece
    whose only separators are the two ends has maximum degree 2; and both
    sides of every separating position induce connected subgraphs.
    """
    problems: list[str] = []
    seps = separating_vertices(piece, layout)
    if {1, piece.n} - seps:
        problems.append("positions 1 and n must be separating")
    if len(chain.cycles) != len(seps) - 1:
        problems.append(
            f"chain has {len(chain.cycles)} cycles for {len(seps)} separating positions"
        )
    if embedding.get(layout.order[0]) != chain.cycles[0].a:
        problems.append("first placed vertex does not map to the first junction")
    if embedding.get(layout.order[-1]) != chain.cycles[-1].b:
        problems.append("last placed vertex does not map to the last junction")
    if seps == {1, piece.n} and piece.n >= 2:
        if max(piece.degrees().values()) > 2:
            problems.append("two-separator piece contains a vertex of degree 3 or more")
    for x in sorted(seps):
        for side in (layout.order[:x], layout.order[x - 1 :]):
            sub, _ = induced_subgraph(piece, side)
            if len(connected_components(sub)) != 1:
                problems.append(f"side of separating position {x} is disconnected")
    return problems


def check_theorem_equivalence(
    max_n: int,
    random_trials: int,
    seed: int,
    *,
    max_cycles: int = 8,
    max_cycle_len: int = 9,
    dp_cross_check_cap: int = 14,
) -> EquivalenceReport:
    """Run both sweeps; the report is deterministic for fixed arguments."""
    if max_n > HARNESS_MAX_N:
        raise ValueError(f"max_n {max_n} exceeds the harness cap {HARNESS_MAX_N}")
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    if random_trials < 0:
        raise ValueError(f"trial count must be nonnegative, got {random_trials}")
    started = time.monotonic()
    failures: list[Failure] = []
    checked = 0

    for n in range(1, max_n + 1):
        for g in enumerate_labeled_graphs(n):
            checked += 1
            failures.extend(_check_forward(g))

    rng = SplitMix64(seed)
    for _ in range(random_trials):
        checked += 1
        cycles = 1 + rng.below(max_cycles)
        chain_seed = rng.next_u64()
        subgraph_seeds = [rng.next_u64() for _ in range(3)]
        failures.extend(
            _check_converse(cycles, max_cycle_len, chain_seed, subgraph_seeds, dp_cross_check_cap)
        )

    return EquivalenceReport(
        checked=checked,
        failures=failures,
        seed=seed,
        max_n=max_n,
        elapsed=time.monotonic() - started,
    )


def _check_forward(g: Graph) -> list[Failure]:
    serialized = serialize_edge_list(g)

    def fail(stage: str, detail: str) -> Failure:
        return Failure(serialized, stage, detail)

    optimum = exact_cutwidth(g).width
    layout = find_width2_layout(g)
    if optimum > 2:
        if layout is not None:
            return [fail("recognition", f"optimum is {optimum} but the search found a layout")]
        return []
    if layout is None:
        return [fail("recognition", f"optimum is {optimum} but the search found nothing")]
    if layout_width(g, layout) > 2:
        return [fail("layout", f"search produced a layout of width {layout_width(g, layout)}")]

    failures: list[Failure] = []
    try:
        parts = component_parts(g, layout)
    except (ValueError, AssertionError) as exc:
        return [fail("chain", f"construction failed: {exc}")]
    for part in parts:
        if part.chain is None:
            continue
        assert part.embedding is not None
        local = {orig: i for i, orig in enumerate(part.host_vertices, start=1)}
        comp = set(part.host_vertices)
        sub_layout = LinearLayout(tuple(local[v] for v in layout.order if v in comp))
        for problem in validate_chain(part.chain):
            failures.append(fail("chain", problem))
        for problem in verify_embedding(part.graph, part.chain, part.embedding):
            failures.append(fail("chain", problem))
        for problem in component_invariant_problems(
            part.graph, sub_layout, part.chain, part.embedding
        ):
            failures.append(fail("invariants", problem))
    try:
        chain, embedding = assemble_components(parts)
    except (ValueError, AssertionError) as exc:
        failures.append(fail("certificate", f"assembly failed: {exc}"))
        return failures
    cert = Certificate(g, layout, layout_width(g, layout), chain, embedding)
    for problem in verify_certificate(cert):
        failures.append(fail("certificate", problem))
    return failures


def _check_converse(
    cycles: int,
    max_cycle_len: int,
    chain_seed: int,
    subgraph_seeds: list[int],
    dp_cross_check_cap: int,
) -> list[Failure]:
    chain = random_chain(cycles, max_cycle_len, chain_seed)
    host, _ = underlying_graph(chain)
    serialized = serialize_edge_list(host)

    def fail(stage: str, detail: str) -> Failure:
        return Failure(serialized, stage, detail)

    violations = validate_chain(chain)
    if violations:
        return [fail("chain-generation", violations[0])]
    width = layout_width(host, canonical_layout(chain))
    if width > 2:
        return [fail("canonical-layout", f"canonical layout has width {width}")]

    failures: list[Failure] = []
    probabilities = (0.3, 0.6, 0.9)
    for probability, sg_seed in zip(probabilities, subgraph_seeds):
        sub = random_subgraph(chain, probability, sg_seed)
        witness = find_width2_layout(sub)
        if witness is None:
            failures.append(
                fail("subgraph", f"subgraph (p={probability}) reported as cutwidth > 2")
            )
            continue
        if layout_width(sub, witness) > 2:
            failures.append(fail("subgraph", "witness layout exceeds width 2"))
        if sub.n <= dp_cross_check_cap and exact_cutwidth(sub).width > 2:
            failures.append(fail("subgraph", "DP disagrees: cutwidth above 2"))
    return failures

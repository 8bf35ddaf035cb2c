"""Serializable width-2 certificates.

A certificate bundles the graph, a claimed width-2 layout, a chain of
cycles, and the embedding of the graph into it.  verify_certificate is a
standalone re-checking path that touches only validators (cut profile,
chain validation, embedding verification) and never the builders, so a
certificate is evidence rather than trust.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .chains import (
    ChainOfCycles,
    ComponentPart,
    Cycle,
    Embedding,
    assemble_components,
    build_chain,
    validate_chain,
    verify_embedding,
)
from .graphs import Graph, connected_components, induced_subgraph, make_graph
from .layouts import LinearLayout, cut_profile, find_width2_layout


class CertificateFormatError(ValueError):
    """The document is not structurally a certificate (bad JSON shape or types)."""


@dataclass
class Certificate:
    graph: Graph
    layout: LinearLayout
    width: int
    chain: ChainOfCycles
    embedding: Embedding


def component_parts(g: Graph, layout: LinearLayout) -> list[ComponentPart]:
    """Split g along connected components and build a chain for each.

    The component keeps the ordering the global layout induces on it; a
    restricted layout can only lose crossings, so its width stays at most 2.
    """
    parts: list[ComponentPart] = []
    for comp in connected_components(g):
        piece, to_original = induced_subgraph(g, comp)
        host = tuple(to_original[i] for i in range(1, piece.n + 1))
        if piece.n == 1:
            parts.append(ComponentPart(piece, host, None, None))
            continue
        local = {orig: i for i, orig in enumerate(host, start=1)}
        sub_order = tuple(local[v] for v in layout.order if v in comp)
        chain, embedding = build_chain(piece, LinearLayout(sub_order))
        parts.append(ComponentPart(piece, host, chain, embedding))
    return parts


def certify(g: Graph) -> Certificate | None:
    """Full pipeline: find a width-2 layout, build and assemble the chain.

    Returns None when the graph has cutwidth greater than 2.
    """
    layout = find_width2_layout(g)
    if layout is None:
        return None
    parts = component_parts(g, layout)
    chain, embedding = assemble_components(parts)
    width = max(cut_profile(g, layout), default=0)
    return Certificate(g, layout, width, chain, embedding)


def verify_certificate(cert: Certificate) -> list[str]:
    """Re-check every claim in the certificate; empty list means it holds."""
    problems: list[str] = []
    if sorted(cert.layout.order) != list(cert.graph.vertices):
        problems.append("layout is not a permutation of the graph's vertices")
        return problems
    width = max(cut_profile(cert.graph, cert.layout), default=0)
    if width != cert.width:
        problems.append(f"stated width {cert.width}, but the layout has width {width}")
    if width > 2:
        problems.append(f"layout width {width} exceeds 2")
    problems.extend(f"chain: {v}" for v in validate_chain(cert.chain))
    problems.extend(
        f"embedding: {v}" for v in verify_embedding(cert.graph, cert.chain, cert.embedding)
    )
    return problems


def graph_to_document(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in sorted(g.edges)]}


def chain_to_document(chain: ChainOfCycles) -> dict:
    return {
        "cycles": [
            {"vertices": list(cyc.vertices), "a": cyc.a, "b": cyc.b}
            for cyc in chain.cycles
        ]
    }


def certificate_to_document(cert: Certificate) -> dict:
    return {
        "graph": graph_to_document(cert.graph),
        "layout": list(cert.layout.order),
        "width": cert.width,
        "chain": chain_to_document(cert.chain),
        "embedding": [[v, cid] for v, cid in sorted(cert.embedding.items())],
    }


def _as_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise CertificateFormatError(f"{what} must be an integer, got {value!r}")
    return value


def _as_pairs(value, what: str) -> list[tuple[int, int]]:
    if not isinstance(value, list):
        raise CertificateFormatError(f"{what} must be a list of pairs")
    pairs = []
    for item in value:
        if not isinstance(item, list) or len(item) != 2:
            raise CertificateFormatError(f"{what} entries must be pairs, got {item!r}")
        pairs.append((_as_int(item[0], what), _as_int(item[1], what)))
    return pairs


def graph_from_document(doc, what: str = "graph") -> Graph:
    if not isinstance(doc, dict):
        raise CertificateFormatError(f"{what} must be an object")
    n = _as_int(doc.get("n"), f"{what}.n")
    try:
        return make_graph(n, _as_pairs(doc.get("edges"), f"{what}.edges"))
    except ValueError as exc:
        raise CertificateFormatError(f"{what}: {exc}") from None


def chain_from_document(doc) -> ChainOfCycles:
    if not isinstance(doc, dict) or not isinstance(doc.get("cycles"), list):
        raise CertificateFormatError("chain must be an object with a 'cycles' list")
    cycles = []
    for entry in doc["cycles"]:
        if not isinstance(entry, dict):
            raise CertificateFormatError(f"chain cycle must be an object, got {entry!r}")
        raw = entry.get("vertices")
        if not isinstance(raw, list):
            raise CertificateFormatError("cycle 'vertices' must be a list")
        vertices = tuple(_as_int(v, "cycle vertex") for v in raw)
        cycles.append(
            Cycle(vertices, _as_int(entry.get("a"), "junction a"), _as_int(entry.get("b"), "junction b"))
        )
    return ChainOfCycles(tuple(cycles))


def certificate_from_document(doc) -> Certificate:
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    graph = graph_from_document(doc.get("graph"))
    layout_raw = doc.get("layout")
    if not isinstance(layout_raw, list):
        raise CertificateFormatError("layout must be a list of vertices")
    layout = LinearLayout(tuple(_as_int(v, "layout entry") for v in layout_raw))
    width = _as_int(doc.get("width"), "width")
    chain = chain_from_document(doc.get("chain"))
    embedding = dict(_as_pairs(doc.get("embedding"), "embedding"))
    return Certificate(graph, layout, width, chain, embedding)


def to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_document(cert), indent=2) + "\n"


def from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from None
    return certificate_from_document(doc)

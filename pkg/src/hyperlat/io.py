"""Reading hypergraphs and writing posets and graphs as JSON or DOT."""

from __future__ import annotations

import json
import re
import sys
from typing import Any, Sequence

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    IntervalHypergraph,
    make_hypergraph,
    make_interval_hypergraph,
    vertices_of,
)
from .poset import FinitePoset


def hypergraph_from_obj(obj: Any) -> Hypergraph:
    """Accepts ``{"n": 4, "edges": [[1,2,3], ...]}`` or ``{"n": 4, "intervals": [[1,3], ...]}``."""
    if not isinstance(obj, dict) or "n" not in obj:
        raise HypergraphError('hypergraph JSON needs an object with key "n"')
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise HypergraphError('"n" must be an integer')
    has_edges, has_intervals = "edges" in obj, "intervals" in obj
    if has_edges and has_intervals:
        raise HypergraphError('give either "edges" or "intervals", not both')
    if has_intervals:
        ivs = obj["intervals"]
        if not isinstance(ivs, list) or not all(isinstance(p, list) and len(p) == 2 for p in ivs):
            raise HypergraphError('"intervals" must be a list of [lo, hi] pairs')
        return make_interval_hypergraph(n, [(int(a), int(b)) for a, b in ivs])
    edges = obj.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError('"edges" must be a list of vertex lists')
    for e in edges:
        for v in e:
            if isinstance(v, bool) or not isinstance(v, int):
                raise HypergraphError(f"vertex {v!r} is not an integer")
    return make_hypergraph(n, edges)


def parse_hypergraph_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"invalid JSON: {exc}") from None
    return hypergraph_from_obj(obj)


def parse_compact_hypergraph(text: str) -> Hypergraph:
    """Compact form ``"4:123,134"`` (digits as vertices; ``"4:"`` for singletons only).

    Braced edges allow multi-digit vertices: ``"10:{1,10},23"``.
    """
    m = re.fullmatch(r"\s*(\d+)\s*:\s*(.*?)\s*", text)
    if not m:
        raise HypergraphError(f"malformed hypergraph {text!r}; expected e.g. 4:123,134")
    n = int(m.group(1))
    body = m.group(2)
    edges = []
    for token in re.findall(r"\{[^}]*\}|[^,]+", body):
        token = token.strip()
        if not token:
            continue
        if token.startswith("{"):
            edges.append([int(x) for x in token[1:-1].split(",") if x.strip()])
        elif token.isdigit():
            edges.append([int(c) for c in token])
        else:
            raise HypergraphError(f"malformed edge {token!r}")
    return make_hypergraph(n, edges)


def load_hypergraph(path: str) -> Hypergraph:
    """Read hypergraph JSON from ``path``; ``"-"`` reads standard input."""
    if path == "-":
        return parse_hypergraph_json(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph_json(fh.read())


def hypergraph_to_obj(H: Hypergraph) -> dict:
    """Non-singleton edges only; singletons are implicit on reading."""
    if isinstance(H, IntervalHypergraph):
        return {"n": H.n, "intervals": [[a, b] for a, b in H.intervals if a < b]}
    return {"n": H.n, "edges": [list(vertices_of(e)) for e in H.nonsingletons]}


# ---------------------------------------------------------------------------
# graph export


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(labels: Sequence[str], edges: Sequence[tuple[int, int]], *, name: str = "P",
                 edge_labels: Sequence[str] | None = None) -> str:
    """A digraph drawn bottom to top, so arrows point upward."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, lab in enumerate(labels):
        lines.append(f"  n{k} [label={_quote(lab)}];")
    for idx, (a, b) in enumerate(edges):
        extra = f" [label={_quote(edge_labels[idx])}]" if edge_labels else ""
        lines.append(f"  n{a} -> n{b}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*n(\d+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$')
_EDGE = re.compile(r"^\s*n(\d+)\s*->\s*n(\d+)\b.*;\s*$")


def parse_dot(text: str) -> tuple[list[str], list[tuple[int, int]]]:
    """Inverse of :func:`graph_to_dot` for its own output."""
    nodes: dict[int, str] = {}
    edges = []
    for line in text.splitlines():
        m = _NODE.match(line)
        if m:
            nodes[int(m.group(1))] = re.sub(r"\\(.)", r"\1", m.group(2))
            continue
        m = _EDGE.match(line)
        if m:
            edges.append((int(m.group(1)), int(m.group(2))))
    if sorted(nodes) != list(range(len(nodes))):
        raise ValueError("node ids are not consecutive")
    return [nodes[k] for k in range(len(nodes))], edges


def poset_to_obj(P: FinitePoset) -> dict:
    return {"elements": list(P.labels), "covers": [list(c) for c in P.covers()]}


def poset_to_json(P: FinitePoset) -> str:
    return json.dumps(poset_to_obj(P), indent=2) + "\n"


def poset_to_dot(P: FinitePoset, *, name: str = "P") -> str:
    return graph_to_dot(P.labels, P.covers(), name=name)


__all__ = [
    "graph_to_dot",
    "hypergraph_from_obj",
    "hypergraph_to_obj",
    "load_hypergraph",
    "parse_dot",
    "parse_hypergraph_json",
    "parse_compact_hypergraph",
    "poset_to_dot",
    "poset_to_json",
    "poset_to_obj",
]

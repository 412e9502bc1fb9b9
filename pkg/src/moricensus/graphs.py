"""Labelled multigraphs, canonical forms, and isomorphism testing.

Canonicalization is brute force (ordering search with colour-partition
pruning) and bounded at MAX_NODES nodes; the models under study have
two or three components, so desk scale needs nothing cleverer.  The
search kernel has a compiled twin: ``moricensus._canon_cy`` is used
when the extension built, unless MORICENSUS_PURE=1 forces the
pure-Python version.

Graph file format (UTF-8, line-oriented; ``#`` starts a comment):

    node <id> label=<int>
    edge <id> <id> label=<int> [mult=<int>]

Node ids are arbitrary word tokens, unique per file; mult defaults to 1.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ConfigError, SizeLimitError

if os.environ.get("MORICENSUS_PURE") == "1":
    from ._canon_py import canonical_sequence as _canonical_sequence
else:
    try:
        from ._canon_cy import canonical_sequence as _canonical_sequence
    except ImportError:
        from ._canon_py import canonical_sequence as _canonical_sequence

__all__ = [
    "LabeledGraph",
    "MAX_NODES",
    "canonical_backend",
    "canonical_graph",
    "iso",
    "parse_graph_file",
]

MAX_NODES = 12


def canonical_backend() -> str:
    """Which kernel is active: ``compiled`` or ``pure``."""
    return "compiled" if _canonical_sequence.__module__.endswith("_cy") else "pure"


@dataclass(frozen=True, slots=True)
class LabeledGraph:
    """Immutable labelled multigraph on nodes 0..n-1.

    ``node_labels[k]`` is the integer label of node k.  ``edges`` holds
    normalized entries ``(u, v, label, mult)`` with u < v, unique
    (u, v, label), mult >= 1, sorted; parallel same-label edges are
    represented by mult.  Use :meth:`build` to normalize raw edge data.
    """

    node_labels: tuple[int, ...]
    edges: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        n = len(self.node_labels)
        prev = None
        for entry in self.edges:
            u, v, label, mult = entry
            if not 0 <= u < v < n:
                raise ValueError(f"bad edge endpoints {entry} for {n} nodes")
            if mult < 1:
                raise ValueError(f"edge multiplicity must be >= 1: {entry}")
            key = (u, v, label)
            if prev is not None and key <= prev:
                raise ValueError("edges must be sorted with unique (u, v, label)")
            prev = key

    @classmethod
    def build(
        cls,
        node_labels: Iterable[int],
        edges: Iterable[tuple[int, ...]] = (),
    ) -> "LabeledGraph":
        """Normalize raw edges: orient pairs, merge multiplicities, sort.

        Edge tuples are ``(u, v, label)`` or ``(u, v, label, mult)``.
        """
        labels = tuple(int(x) for x in node_labels)
        n = len(labels)
        merged: dict[tuple[int, int, int], int] = {}
        for raw in edges:
            if len(raw) == 3:
                u, v, label = raw
                mult = 1
            elif len(raw) == 4:
                u, v, label, mult = raw
            else:
                raise ValueError(f"edge must have 3 or 4 fields: {raw!r}")
            if u == v:
                raise ValueError(f"self-loop on node {u} not supported")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {raw!r}")
            if mult < 1:
                raise ValueError(f"edge multiplicity must be >= 1: {raw!r}")
            key = (min(u, v), max(u, v), label)
            merged[key] = merged.get(key, 0) + mult
        normalized = tuple(
            (u, v, label, mult) for (u, v, label), mult in sorted(merged.items())
        )
        return cls(node_labels=labels, edges=normalized)

    @property
    def n(self) -> int:
        return len(self.node_labels)


def canonical_graph(g: LabeledGraph, *, max_nodes: int = MAX_NODES) -> bytes:
    """Canonical form: equal byte strings iff isomorphic labelled multigraphs."""
    if g.n > max_nodes:
        raise SizeLimitError(g.n, max_nodes)
    seq = _canonical_sequence(g.n, g.node_labels, g.edges)
    return ",".join(map(str, seq)).encode("ascii")


def iso(g1: LabeledGraph, g2: LabeledGraph, *, max_nodes: int = MAX_NODES) -> bool:
    """Isomorphism test by canonical-form comparison."""
    return canonical_graph(g1, max_nodes=max_nodes) == canonical_graph(
        g2, max_nodes=max_nodes
    )


_NODE_RE = re.compile(r"node\s+(\S+)\s+label=(-?\d+)\s*$")
_EDGE_RE = re.compile(
    r"edge\s+(\S+)\s+(\S+)\s+label=(-?\d+)(?:\s+mult=(\d+))?\s*$"
)


def parse_graph_file(text: str) -> LabeledGraph:
    """Parse the line-oriented graph format into a normalized graph.

    Raises ConfigError with a line number on malformed input, unknown
    node references, or duplicate node ids.
    """
    ids: dict[str, int] = {}
    labels: list[int] = []
    raw_edges: list[tuple[int, int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("node"):
            m = _NODE_RE.match(line)
            if not m:
                raise ConfigError("malformed node line", line=lineno)
            name, label = m.group(1), int(m.group(2))
            if name in ids:
                raise ConfigError(f"duplicate node id {name!r}", line=lineno,
                                  field="node")
            ids[name] = len(labels)
            labels.append(label)
        elif line.startswith("edge"):
            m = _EDGE_RE.match(line)
            if not m:
                raise ConfigError("malformed edge line", line=lineno)
            a, b = m.group(1), m.group(2)
            for name in (a, b):
                if name not in ids:
                    raise ConfigError(
                        f"edge references unknown node {name!r}",
                        line=lineno,
                        field="edge",
                    )
            if a == b:
                raise ConfigError("self-loops are not supported", line=lineno,
                                  field="edge")
            mult = int(m.group(4)) if m.group(4) else 1
            raw_edges.append((ids[a], ids[b], int(m.group(3)), mult))
        else:
            raise ConfigError(
                f"expected 'node' or 'edge', got {line.split()[0]!r}", line=lineno
            )
    try:
        return LabeledGraph.build(labels, raw_edges)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

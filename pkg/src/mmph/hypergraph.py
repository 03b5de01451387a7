"""The MMP hypergraph value type and its structural edits.

An MMP hypergraph (MMPH) is an ordered list of hyperedges over vertex
labels; dimension n is the largest edge size and every edge must have
between 2 and n members. Values are immutable: every edit returns a new
hypergraph.
"""

from __future__ import annotations

import json
import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import UnknownVertexError, ValidationError


class MMPH:
    """A k-l MMP hypergraph. Edges keep document order; identity ignores it."""

    __slots__ = ("edges", "vertices", "vertex_index", "multiplicity", "incident", "_edge_sets")

    def __init__(self, edges: Iterable[Sequence[str]]):
        edge_list: list[tuple[str, ...]] = []
        seen_edges: set[frozenset[str]] = set()
        order: dict[str, None] = {}
        incident: dict[str, list[int]] = {}
        for i, raw in enumerate(edges):
            edge = tuple(raw)
            if len(edge) < 2:
                raise ValidationError(f"hyperedge {i} has {len(edge)} vertices; at least 2 required")
            if len(set(edge)) != len(edge):
                raise ValidationError(f"hyperedge {i} repeats a vertex: {''.join(map(str, edge))}")
            key = frozenset(edge)
            if key in seen_edges:
                raise ValidationError(f"duplicate hyperedge at index {i}: {''.join(map(str, edge))}")
            seen_edges.add(key)
            for v in edge:
                order.setdefault(v, None)
                incident.setdefault(v, []).append(i)
            edge_list.append(edge)
        self.edges: tuple[tuple[str, ...], ...] = tuple(edge_list)
        self.vertices: tuple[str, ...] = tuple(order)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.multiplicity = {v: len(incident[v]) for v in self.vertices}
        self.incident = {v: tuple(incident[v]) for v in self.vertices}
        self._edge_sets = seen_edges

    @property
    def k(self) -> int:
        return len(self.vertices)

    @property
    def l(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def kappa(self, i: int) -> int:
        return len(self.edges[i])

    def contains_edge(self, members: Iterable[str]) -> bool:
        return frozenset(members) in self._edge_sets

    def __eq__(self, other) -> bool:
        if not isinstance(other, MMPH):
            return NotImplemented
        return self._edge_sets == other._edge_sets

    def __hash__(self) -> int:
        return hash(frozenset(self._edge_sets))

    def __repr__(self) -> str:
        return f"MMPH(k={self.k}, l={self.l}, n={self.n})"


@dataclass
class StatsReport:
    k: int
    l: int
    n: int
    kappa_histogram: dict[int, int]
    multiplicity_histogram: dict[int, int]
    complete_bases: int
    edges: list[list[str]]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "n": self.n,
            "kappa_histogram": {str(s): c for s, c in sorted(self.kappa_histogram.items())},
            "multiplicity_histogram": {str(m): c for m, c in sorted(self.multiplicity_histogram.items())},
            "complete_bases": self.complete_bases,
            "edges": self.edges,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"


def stats(h: MMPH) -> StatsReport:
    """Structural statistics: sizes, histograms, complete-basis count."""
    n = h.n
    kappa_hist = Counter(len(e) for e in h.edges)
    mult_hist = Counter(h.multiplicity.values())
    return StatsReport(
        k=h.k,
        l=h.l,
        n=n,
        kappa_histogram=dict(kappa_hist),
        multiplicity_histogram=dict(mult_hist),
        complete_bases=sum(1 for e in h.edges if len(e) == n),
        edges=[list(e) for e in h.edges],
    )


def strip_mult1(h: MMPH) -> MMPH:
    """Remove every multiplicity-1 vertex from its (unique) hyperedge.

    Edges falling below 2 members are dropped with a warning. One pass is a
    fixpoint: surviving vertices keep their multiplicities.
    """
    new_edges = []
    for i, edge in enumerate(h.edges):
        kept = tuple(v for v in edge if h.multiplicity[v] > 1)
        if len(kept) >= 2:
            new_edges.append(kept)
        else:
            warnings.warn(
                f"stripping dropped hyperedge {i} ({''.join(edge)}): "
                f"{len(kept)} vertex(es) left",
                stacklevel=2,
            )
    if not new_edges:
        raise ValidationError("stripping multiplicity-1 vertices left an empty hypergraph")
    return MMPH(new_edges)


def delete_vertex(h: MMPH, v: str) -> MMPH:
    """Weak vertex deletion: remove v from every edge, keeping the edges."""
    if v not in h.vertex_index:
        raise UnknownVertexError(f"vertex {v!r} not in hypergraph")
    new_edges = []
    for i, edge in enumerate(h.edges):
        kept = tuple(u for u in edge if u != v)
        if len(kept) < len(edge) and len(kept) < 2:
            raise ValidationError(
                f"deleting {v!r} would shrink hyperedge {i} ({''.join(edge)}) below 2 vertices"
            )
        new_edges.append(kept)
    return MMPH(new_edges)


def remove_hyperedge(h: MMPH, i: int) -> MMPH:
    """Drop edge i; vertices left in no edge disappear from the vertex set."""
    if not 0 <= i < h.l:
        raise IndexError(f"hyperedge index {i} out of range (l={h.l})")
    return MMPH(h.edges[:i] + h.edges[i + 1 :])


def induced_by_edges(h: MMPH, indices: Iterable[int]) -> MMPH:
    """Sub-hypergraph made of the selected edges (in document order)."""
    idx = sorted(set(indices))
    if any(i < 0 or i >= h.l for i in idx):
        raise IndexError("hyperedge index out of range")
    return MMPH(h.edges[i] for i in idx)

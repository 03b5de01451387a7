"""Canonical labeling and isomorphism for MMP hypergraphs.

Iterated partition refinement on vertex invariants (multiplicity,
incident edge sizes, neighbor colors), followed by backtracking over the
residual symmetry. The certificate is the minimum relabeled edge list
over all discrete refinements, so equal certificates coincide with
isomorphism. Automorphisms discovered along the way prune the root-level
candidates by orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import ALPHABET
from .errors import BudgetExceededError
from .hypergraph import MMPH

DEFAULT_CANON_BUDGET = 200_000


@dataclass
class CanonicalForm:
    mmph: MMPH
    certificate: str
    order: tuple[str, ...]  # original labels in canonical rank order

    @property
    def relabeling(self) -> dict[str, str]:
        labels = _canonical_labels(len(self.order))
        return {v: labels[i] for i, v in enumerate(self.order)}


def _canonical_labels(k: int) -> list[str]:
    if k <= len(ALPHABET):
        return list(ALPHABET[:k])
    return [f"v{i:03d}" for i in range(k)]


class _Canonicalizer:
    def __init__(self, h: MMPH, budget: int):
        self.h = h
        self.budget = budget
        self.nodes = 0
        self.vids = list(range(h.k))
        self.edges = [tuple(h.vertex_index[v] for v in e) for e in h.edges]
        self.incident: list[list[int]] = [[] for _ in range(h.k)]
        for ei, e in enumerate(self.edges):
            for v in e:
                self.incident[v].append(ei)
        self.kappa = [len(e) for e in self.edges]
        self.best_cert: tuple | None = None
        self.best_order: list[int] | None = None
        # union-find over vertices for root-level orbit pruning
        self.orbit = list(range(h.k))

    def _find(self, x: int) -> int:
        while self.orbit[x] != x:
            self.orbit[x] = self.orbit[self.orbit[x]]
            x = self.orbit[x]
        return x

    def _union(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self.orbit[rb] = ra

    def _initial_colors(self) -> list:
        inv = [
            (self.h.multiplicity[self.h.vertices[v]], tuple(sorted(self.kappa[e] for e in self.incident[v])))
            for v in self.vids
        ]
        return self._rank(inv)

    def _rank(self, sigs: list) -> list[int]:
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        return [ranking[s] for s in sigs]

    def _refine(self, colors: list[int]) -> list[int]:
        ncolors = len(set(colors))
        while True:
            sigs = []
            for v in self.vids:
                neigh = tuple(
                    sorted(
                        (self.kappa[e], tuple(sorted(colors[u] for u in self.edges[e] if u != v)))
                        for e in self.incident[v]
                    )
                )
                sigs.append((colors[v], neigh))
            colors = self._rank(sigs)
            new_ncolors = len(set(colors))
            if new_ncolors == ncolors:
                return colors
            ncolors = new_ncolors

    def _target_cell(self, colors: list[int]) -> list[int]:
        cells: dict[int, list[int]] = {}
        for v, c in zip(self.vids, colors):
            cells.setdefault(c, []).append(v)
        for c in sorted(cells):
            if len(cells[c]) > 1:
                return cells[c]
        return []

    def _leaf(self, colors: list[int]) -> None:
        order = sorted(self.vids, key=lambda v: colors[v])
        rank = {v: i for i, v in enumerate(order)}
        cert = tuple(sorted(tuple(sorted(rank[v] for v in e)) for e in self.edges))
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert = cert
            self.best_order = order
        elif cert == self.best_cert:
            # two discrete refinements delivering the same certificate
            # compose to an automorphism of the hypergraph
            for a, b in zip(self.best_order, order):
                self._union(a, b)

    def _search(self, colors: list[int], depth: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"canonical labeling exceeded its {self.budget}-node budget"
            )
        cell = self._target_cell(colors)
        if not cell:
            self._leaf(colors)
            return
        tried_roots: set[int] = set()
        for v in cell:
            if depth == 0:
                root = self._find(v)
                if root in tried_roots:
                    continue
                tried_roots.add(root)
            split = [(colors[u], 1 if u != v else 0) for u in self.vids]
            self._search(self._refine(self._rank(split)), depth + 1)
            if depth == 0:
                tried_roots = {self._find(r) for r in tried_roots}

    def run(self) -> tuple[tuple, list[int]]:
        colors = self._refine(self._initial_colors())
        self._search(colors, 0)
        assert self.best_cert is not None and self.best_order is not None
        return self.best_cert, self.best_order


def canonical_form(h: MMPH, budget: int = DEFAULT_CANON_BUDGET) -> CanonicalForm:
    """Relabel into canonical form and produce the isomorphism certificate."""
    if h.l == 0:
        return CanonicalForm(h, "k=0;", ())
    cert, order = _Canonicalizer(h, budget).run()
    labels = _canonical_labels(h.k)
    rank = {h.vertices[v]: i for i, v in enumerate(order)}
    new_edges = sorted(tuple(sorted(rank[v] for v in e)) for e in h.edges)
    relabeled = MMPH(tuple(labels[i] for i in e) for e in new_edges)
    cert_str = f"k={h.k};" + ";".join(",".join(map(str, e)) for e in cert)
    return CanonicalForm(relabeled, cert_str, tuple(h.vertices[i] for i in order))


def certificate(h: MMPH, budget: int = DEFAULT_CANON_BUDGET) -> str:
    return canonical_form(h, budget).certificate


def find_isomorphism(a: MMPH, b: MMPH, budget: int = DEFAULT_CANON_BUDGET) -> dict[str, str] | None:
    """A vertex bijection mapping edges onto edges, or None."""
    if a.k != b.k or a.l != b.l:
        return None
    if sorted(map(len, a.edges)) != sorted(map(len, b.edges)):
        return None
    if sorted(a.multiplicity.values()) != sorted(b.multiplicity.values()):
        return None
    ca = canonical_form(a, budget)
    cb = canonical_form(b, budget)
    if ca.certificate != cb.certificate:
        return None
    mapping = {va: vb for va, vb in zip(ca.order, cb.order)}
    image = {frozenset(mapping[v] for v in e) for e in a.edges}
    target = {frozenset(e) for e in b.edges}
    assert image == target, "certificate collision without edge preservation"
    return mapping


def is_isomorphic(a: MMPH, b: MMPH, budget: int = DEFAULT_CANON_BUDGET) -> bool:
    if a.l == 0 and b.l == 0:
        return True
    return find_isomorphism(a, b, budget) is not None

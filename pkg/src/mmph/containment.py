"""Sub-hypergraph containment: embed one MMPH into another.

An embedding is an injective vertex map under which every pattern
hyperedge lands inside some target hyperedge (not necessarily onto it,
so stripped or vertex-deleted derivatives still count as contained).
Backtracking with invariant-based candidate filtering; the search is
budgeted, and running out of budget is reported as indeterminate rather
than as absence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .hypergraph import MMPH

DEFAULT_EMBED_BUDGET = 2_000_000


@dataclass
class Embedding:
    mapping: dict[str, str]
    nodes: int

    def to_dict(self) -> dict:
        return {"mapping": self.mapping, "nodes": self.nodes}


def _cooccurrence(h: MMPH) -> dict[str, set[str]]:
    co: dict[str, set[str]] = {v: set() for v in h.vertices}
    for e in h.edges:
        for v in e:
            co[v].update(e)
    for v in h.vertices:
        co[v].discard(v)
    return co


def find_embedding(
    pattern: MMPH, target: MMPH, budget: int = DEFAULT_EMBED_BUDGET
) -> Embedding | None:
    """Search for an embedding of pattern into target.

    Returns a verified Embedding, or None when the full search space was
    exhausted. Raises BudgetExceededError when the node budget ran out
    first (the answer is then unknown).
    """
    if pattern.l == 0:
        return Embedding({}, 0)
    if pattern.k > target.k or pattern.l == 0:
        return None
    co_p = _cooccurrence(pattern)
    co_t = _cooccurrence(target)
    max_edge_p = {v: max(len(pattern.edges[i]) for i in pattern.incident[v]) for v in pattern.vertices}
    max_edge_t = {v: max(len(target.edges[i]) for i in target.incident[v]) for v in target.vertices}

    base_candidates = {
        u: [
            w
            for w in target.vertices
            if len(co_p[u]) <= len(co_t[w]) and max_edge_p[u] <= max_edge_t[w]
        ]
        for u in pattern.vertices
    }
    if any(not c for c in base_candidates.values()):
        return None

    # most-constrained-first: greedy order maximizing links into the prefix
    order: list[str] = []
    placed: set[str] = set()
    remaining = set(pattern.vertices)
    while remaining:
        u = min(
            remaining,
            key=lambda x: (
                -len(co_p[x] & placed),
                len(base_candidates[x]),
                -len(co_p[x]),
                pattern.vertex_index[x],
            ),
        )
        order.append(u)
        placed.add(u)
        remaining.remove(u)

    target_incident_sets = [frozenset(e) for e in target.edges]
    pattern_edges = [frozenset(e) for e in pattern.edges]
    nodes = 0
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def edge_feasible(u: str) -> bool:
        # every pattern edge at u must still fit inside some target edge
        for ei in pattern.incident[u]:
            img = {mapping[v] for v in pattern_edges[ei] if v in mapping}
            if not any(img <= te for te in target_incident_sets):
                return False
        return True

    def assign(pos: int) -> bool:
        nonlocal nodes
        if pos == len(order):
            return True
        u = order[pos]
        cands = [w for w in base_candidates[u] if w not in used]
        for v in co_p[u]:
            if v in mapping:
                cands = [w for w in cands if w in co_t[mapping[v]]]
        for w in cands:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"embedding search exceeded its {budget}-node budget"
                )
            mapping[u] = w
            used.add(w)
            if edge_feasible(u) and assign(pos + 1):
                return True
            del mapping[u]
            used.remove(w)
        return False

    if not assign(0):
        return None
    # re-verify the subset condition edge by edge before returning
    for e in pattern_edges:
        img = {mapping[v] for v in e}
        assert any(img <= te for te in target_incident_sets), "unverified embedding"
    return Embedding(dict(mapping), nodes)


def is_subhypergraph(
    pattern: MMPH, target: MMPH, budget: int = DEFAULT_EMBED_BUDGET
) -> Embedding | None:
    """Alias of find_embedding; the classic SUBGRAPH question."""
    return find_embedding(pattern, target, budget)

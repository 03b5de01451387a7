"""Criticality, reduction to critical sets, extensions, and subset search.

Reduction removes random hyperedges while contextuality survives, so the
endpoint is always critical; weak extension completes deficient edges
with fresh multiplicity-1 vertices computed exactly from the
coordinatization, and strong extension additionally merges vertices
carrying proportional rays.
"""

from __future__ import annotations

import itertools
import random
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .canon import certificate
from .codec import Coordinatization, next_free_labels
from .coloring import is_contextual, solve_exact_cover
from .errors import CoordinatizationError, ValidationError
from .generate import completion
from .hypergraph import MMPH, StatsReport, remove_hyperedge, stats
from .ring import Ray, hermitian_inner


def _parallel_map(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def criticality_probes(h: MMPH, threads: int = 1) -> list[bool]:
    """For each hyperedge, whether its removal keeps the set contextual."""
    return _parallel_map(lambda i: is_contextual(remove_hyperedge(h, i)), range(h.l), threads)


def is_critical(h: MMPH, threads: int = 1) -> bool:
    """Contextual, and removing any one hyperedge destroys contextuality."""
    if not is_contextual(h):
        return False
    return not any(criticality_probes(h, threads))


@dataclass
class ReductionTrace:
    seed: int
    removed: list[tuple[int, str]]  # (index at removal time, edge members)
    final: MMPH
    final_stats: StatsReport

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "removed": [{"index": i, "edge": e} for i, e in self.removed],
            "final_stats": self.final_stats.to_dict(),
        }


def reduce_to_critical(h: MMPH, seed: int) -> ReductionTrace:
    """Strip random removable hyperedges until the set is critical."""
    if not is_contextual(h):
        raise ValidationError("reduction requires a contextual hypergraph")
    rng = random.Random(seed)
    cur = h
    removed: list[tuple[int, str]] = []
    while True:
        order = list(range(cur.l))
        rng.shuffle(order)
        for i in order:
            candidate = remove_hyperedge(cur, i)
            if is_contextual(candidate):
                removed.append((i, "".join(cur.edges[i])))
                cur = candidate
                break
        else:
            break
    return ReductionTrace(seed, removed, cur, stats(cur))


def reduction_survey(h: MMPH, seeds, threads: int = 1) -> list[ReductionTrace]:
    """Independent seeded reductions, merged in seed order."""
    return _parallel_map(lambda s: reduce_to_critical(h, s), list(seeds), threads)


def _check_edge_orthogonal(edge, coord: Coordinatization) -> None:
    for u, v in itertools.combinations(edge, 2):
        if not hermitian_inner(coord.rays[u], coord.rays[v]).is_zero():
            raise CoordinatizationError(
                f"edge {''.join(edge)} is inconsistent: {u} and {v} are not orthogonal"
            )


def _deficient_edges(h: MMPH, coord: Coordinatization, warn: bool = True) -> list[int]:
    """Indices of size n-1 edges; smaller edges only get a warning."""
    missing = coord.uncoordinatized(h)
    if missing:
        raise CoordinatizationError(f"vertices without rays: {', '.join(missing)}")
    n = h.n
    deficient = []
    for i, edge in enumerate(h.edges):
        if len(edge) == n - 1:
            deficient.append(i)
        elif len(edge) < n - 1 and warn:
            warnings.warn(
                f"edge {''.join(edge)} has {len(edge)} < n-1 vertices; "
                "completion is not unique, leaving it untouched",
                stacklevel=3,
            )
    return deficient


def _extend_edges(
    h: MMPH, coord: Coordinatization, edge_indices: list[int]
) -> tuple[MMPH, Coordinatization]:
    """Add the unique completion vertex to each selected size n-1 edge."""
    for i, edge in enumerate(h.edges):
        _check_edge_orthogonal(edge, coord)
    fresh = next_free_labels(h.vertices, len(edge_indices))
    label_for = dict(zip(edge_indices, fresh))
    new_edges = []
    new_rays = dict(coord.rays)
    for i, edge in enumerate(h.edges):
        if i in label_for:
            ray = completion([coord.rays[v] for v in edge])
            v = label_for[i]
            new_rays[v] = ray
            new_edges.append(edge + (v,))
        else:
            new_edges.append(edge)
    return MMPH(new_edges), Coordinatization(new_rays)


def weak_extend(h: MMPH, coord: Coordinatization) -> tuple[MMPH, Coordinatization]:
    """Complete every size n-1 edge with a fresh multiplicity-1 vertex."""
    return _extend_edges(h, coord, _deficient_edges(h, coord))


def strong_extend(h: MMPH, coord: Coordinatization) -> tuple[MMPH, Coordinatization]:
    """Weak extension followed by merging vertices with proportional rays."""
    ext, ext_coord = weak_extend(h, coord)
    rep_for_ray: dict[Ray, str] = {}
    rep: dict[str, str] = {}
    for v in ext.vertices:
        ray = ext_coord.rays[v]
        rep[v] = rep_for_ray.setdefault(ray, v)
    new_edges = []
    seen = set()
    for edge in ext.edges:
        merged = tuple(dict.fromkeys(rep[v] for v in edge))
        if len(merged) != len(edge):
            raise CoordinatizationError(
                f"edge {''.join(edge)} carries proportional rays; it cannot be orthogonal"
            )
        key = frozenset(merged)
        if key in seen:
            warnings.warn(f"merging made edge {''.join(edge)} a duplicate; dropping it", stacklevel=2)
            continue
        seen.add(key)
        new_edges.append(merged)
    merged_h = MMPH(new_edges)
    merged_coord = Coordinatization(
        {v: ext_coord.rays[v] for v in merged_h.vertices}
    )
    return merged_h, merged_coord


@dataclass
class PartialExtension:
    kept_deficient: tuple[int, ...]  # edge indices left unextended
    mmph: MMPH
    contextual: bool
    complete_bases: int


def partial_extension_search(
    h: MMPH,
    coord: Coordinatization,
    keep_deficient: int,
    seed: int = 0,
    max_choices: int | None = None,
) -> list[PartialExtension]:
    """Extend all but ``keep_deficient`` of the deficient edges, every way.

    All choices are enumerated in deterministic order unless max_choices
    forces seeded sampling. Each result records contextuality and the
    complete-basis count.
    """
    deficient = _deficient_edges(h, coord)
    if keep_deficient > len(deficient):
        raise ValueError(f"cannot keep {keep_deficient} of {len(deficient)} deficient edges")
    choices = list(itertools.combinations(deficient, keep_deficient))
    if max_choices is not None and len(choices) > max_choices:
        rng = random.Random(seed)
        choices = rng.sample(choices, max_choices)
    results = []
    for kept in choices:
        extend_set = [i for i in deficient if i not in kept]
        ext, _ = _extend_edges(h, coord, extend_set)
        st = stats(ext)
        results.append(
            PartialExtension(
                kept_deficient=tuple(kept),
                mmph=ext,
                contextual=is_contextual(ext),
                complete_bases=st.complete_bases,
            )
        )
    return results


@dataclass
class SubsetQuery:
    """Bounds for the small-contextual-subset search."""

    max_k: int
    max_l: int
    max_complete_bases: int
    require_contextual: bool = True
    budget: int = 10_000_000
    seed: int = 0
    max_results: int = 10
    try_vertex_deletions: bool = True

    def __post_init__(self):
        if self.max_k <= 0 or self.max_l <= 0 or self.budget <= 0:
            raise ValueError("query bounds must be positive")


@dataclass
class SubsetSearchResult:
    hits: list[MMPH]
    certificates: list[str]
    nodes: int
    exhausted_budget: bool


def _query_satisfied(sub: MMPH, q: SubsetQuery) -> bool:
    if sub.k > q.max_k or sub.l > q.max_l:
        return False
    n = sub.n
    complete = sum(1 for e in sub.edges if len(e) == n)
    if complete > q.max_complete_bases:
        return False
    if q.require_contextual and not is_contextual(sub):
        return False
    return True


def search_small_contextual(h: MMPH, q: SubsetQuery) -> SubsetSearchResult:
    """Find contextual sub-hypergraphs within the query bounds.

    Randomized connected growth over edge subsets with backtracking,
    optionally followed by vertex deletions; results are deduplicated by
    canonical certificate. Deterministic per seed. An empty result after
    budget exhaustion proves nothing.
    """
    rng = random.Random(q.seed)
    nodes = 0
    hits: dict[str, MMPH] = {}
    visited: set[frozenset[int]] = set()
    vertex_sets = [frozenset(e) for e in h.edges]

    def consider(edge_idx: frozenset[int]) -> None:
        nonlocal nodes
        sub = MMPH(h.edges[i] for i in sorted(edge_idx))
        report = solve_exact_cover(sub)
        nodes += max(report.nodes, 1)
        candidates = [sub] if report.contextual or not q.require_contextual else []
        if q.try_vertex_deletions and not candidates and sub.k <= q.max_k + 2:
            candidates.extend(_deletion_variants(sub, q, rng))
        for cand in candidates:
            if _query_satisfied(cand, q):
                cert = certificate(cand)
                hits.setdefault(cert, cand)

    def grow(edge_idx: frozenset[int], vertices: frozenset[str]) -> None:
        nonlocal nodes
        if nodes >= q.budget or len(hits) >= q.max_results:
            return
        if edge_idx in visited:
            return
        if len(visited) > 1_000_000:
            visited.clear()  # keep memory bounded; costs rework, not correctness
        visited.add(edge_idx)
        nodes += 1
        consider(edge_idx)
        if len(edge_idx) >= q.max_l or len(hits) >= q.max_results:
            return
        frontier = [
            i
            for i in range(h.l)
            if i not in edge_idx
            and vertex_sets[i] & vertices
            and len(vertices | vertex_sets[i]) <= q.max_k
        ]
        rng.shuffle(frontier)
        for i in frontier:
            if nodes >= q.budget or len(hits) >= q.max_results:
                return
            grow(edge_idx | {i}, vertices | vertex_sets[i])

    seeds = list(range(h.l))
    rng.shuffle(seeds)
    for i in seeds:
        if nodes >= q.budget or len(hits) >= q.max_results:
            break
        if len(vertex_sets[i]) <= q.max_k:
            grow(frozenset([i]), vertex_sets[i])
    ordered = sorted(hits)
    return SubsetSearchResult(
        hits=[hits[c] for c in ordered],
        certificates=ordered,
        nodes=nodes,
        exhausted_budget=nodes >= q.budget,
    )


def _deletion_variants(sub: MMPH, q: SubsetQuery, rng: random.Random) -> list[MMPH]:
    """A few random vertex-deletion refinements of a candidate subset."""
    out = []
    for _ in range(4):
        cur = sub
        for _ in range(max(cur.k - q.max_k, 0) + rng.randrange(2)):
            deletable = [
                v
                for v in cur.vertices
                if all(len(e) > 2 for e in cur.edges if v in e)
            ]
            if not deletable:
                break
            v = rng.choice(deletable)
            try:
                cur = MMPH(
                    tuple(u for u in e if u != v) if v in e else e for e in cur.edges
                )
            except ValidationError:
                break
        if cur is not sub:
            out.append(cur)
    return out

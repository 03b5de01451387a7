"""Master-set generation from basic vector components.

Enumerate projective rays over a finite component set, build the exact
orthogonality graph, and take either all complete bases (n-cliques) or
all maximal orthogonal cliques as hyperedges. Output labeling is fully
deterministic: rays are sorted by their canonical coefficients and edges
lexicographically, so identical inputs give byte-identical masters.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .codec import ALPHABET, Coordinatization
from .errors import CoordinatizationError
from .hypergraph import MMPH
from .ring import (
    RATIONAL,
    Ray,
    RingScalar,
    _join,
    coerce_vector,
    hermitian_inner,
    matrix_rank,
    null_space_unique,
    parse_scalar,
)

BASES_ONLY = "bases"
ALL_MAXIMAL_CLIQUES = "maximal"

PRINCIPAL_COMPONENT = "principal"
ALL_COMPONENTS = "all"

ENUMERATION_GUARD = 10_000_000


@dataclass
class ComponentSet:
    """The scalar values allowed as vector components, plus the dimension."""

    components: tuple[RingScalar, ...]
    dimension: int

    @classmethod
    def parse(cls, text: str, dimension: int) -> ComponentSet:
        return cls(tuple(parse_scalar(tok) for tok in text.split(",")), dimension)

    def __post_init__(self):
        comps = []
        seen = set()
        for c in self.components:
            if c not in seen:
                seen.add(c)
                comps.append(c)
        self.components = tuple(comps)
        if not any(c.is_zero() for c in self.components):
            raise ValueError("component set must contain 0")
        if all(c.is_zero() for c in self.components):
            raise ValueError("component set needs at least one nonzero element")
        ring = RATIONAL
        for c in self.components:
            ring = _join(ring, c.ring)
        self.ring = ring

    def describe(self) -> str:
        return ",".join(str(c) for c in self.components)


@dataclass
class GenerationReport:
    components: str
    dimension: int
    mode: str
    scope: str
    rays_enumerated: int
    rays_in_edges: int
    orthogonal_pairs: int
    edge_count: int
    satellite_components: int
    satellite_rays: int
    satellite_edges: int
    millis: float


@dataclass
class MasterResult:
    mmph: MMPH
    coordinatization: Coordinatization
    report: GenerationReport

    @property
    def k(self) -> int:
        return self.mmph.k

    @property
    def l(self) -> int:
        return self.mmph.l


def enumerate_rays(s: ComponentSet, dimension: int | None = None) -> list[Ray]:
    """All projectively distinct rays with components from s, sorted."""
    n = dimension if dimension is not None else s.dimension
    total = len(s.components) ** n
    if total > ENUMERATION_GUARD:
        raise ValueError(f"{total} tuples exceed the enumeration guard of {ENUMERATION_GUARD}")
    rays: set[Ray] = set()
    for combo in itertools.product(s.components, repeat=n):
        if all(c.is_zero() for c in combo):
            continue
        rays.add(Ray(combo))
    if not rays:
        raise ValueError("component set generates no nonzero vector")
    return sorted(rays, key=Ray.sort_key)


def _vertex_labels(count: int) -> list[str]:
    if count <= len(ALPHABET):
        return list(ALPHABET[:count])
    return [f"v{i:03d}" for i in range(count)]


def master_from_components(
    s: ComponentSet,
    dimension: int | None = None,
    mode: str = BASES_ONLY,
    scope: str = PRINCIPAL_COMPONENT,
) -> MasterResult:
    """Build the master hypergraph generated by a component set.

    ``bases`` keeps exactly the size-n mutually orthogonal ray sets and
    discards rays in no such basis; ``maximal`` keeps every maximal
    orthogonal clique of size >= 2.

    Component sets can emit small hyperedge blocks sharing no vertex with
    the bulk of the structure (e.g. lone triads of rays occurring nowhere
    else). ``scope="principal"`` keeps only the largest edge-connected
    component, which is how the published master tallies count;
    ``scope="all"`` keeps everything.
    """
    if mode not in (BASES_ONLY, ALL_MAXIMAL_CLIQUES):
        raise ValueError(f"unknown edge mode {mode!r}")
    if scope not in (PRINCIPAL_COMPONENT, ALL_COMPONENTS):
        raise ValueError(f"unknown scope {scope!r}")
    start = time.perf_counter()
    n = dimension if dimension is not None else s.dimension
    rays = enumerate_rays(s, n)
    adj: list[set[int]] = [set() for _ in rays]
    conj = [r.conjugate() for r in rays]
    pairs = 0
    for i in range(len(rays)):
        ci = conj[i]
        for j in range(i + 1, len(rays)):
            total = RingScalar.rational(0)
            for x, y in zip(ci, rays[j].components):
                total = total + x * y
            if total.is_zero():
                adj[i].add(j)
                adj[j].add(i)
                pairs += 1
    if mode == BASES_ONLY:
        cliques = [tuple(c) for c in _cliques_of_size(adj, n)]
    else:
        cliques = sorted(tuple(sorted(c)) for c in _maximal_cliques(adj) if len(c) >= 2)
    sat_components = sat_rays = sat_edges = 0
    if scope == PRINCIPAL_COMPONENT and cliques:
        components = _edge_components(cliques)
        principal = max(
            components,
            key=lambda comp: (
                len(comp[0]),
                len(comp[1]),
                [rays[i].sort_key() for i in sorted(comp[0])],
            ),
        )
        sat_components = len(components) - 1
        sat_rays = sum(len(c[0]) for c in components) - len(principal[0])
        sat_edges = len(cliques) - len(principal[1])
        cliques = principal[1]
    used = sorted({i for c in cliques for i in c})
    remap = {old: new for new, old in enumerate(used)}
    labels = _vertex_labels(len(used))
    edges = sorted(tuple(remap[i] for i in c) for c in cliques)
    mmph = MMPH(tuple(labels[i] for i in e) for e in edges)
    coord = Coordinatization({labels[remap[i]]: rays[i] for i in used})
    report = GenerationReport(
        components=s.describe(),
        dimension=n,
        mode=mode,
        scope=scope,
        rays_enumerated=len(rays),
        rays_in_edges=len(used),
        orthogonal_pairs=pairs,
        edge_count=len(edges),
        satellite_components=sat_components,
        satellite_rays=sat_rays,
        satellite_edges=sat_edges,
        millis=(time.perf_counter() - start) * 1000.0,
    )
    return MasterResult(mmph, coord, report)


def _edge_components(cliques: list[tuple[int, ...]]) -> list[tuple[set[int], list[tuple[int, ...]]]]:
    """Group hyperedges into vertex-connected components."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in cliques:
        for v in c:
            parent.setdefault(v, v)
        for v in c[1:]:
            ra, rb = find(c[0]), find(v)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, tuple[set[int], list[tuple[int, ...]]]] = {}
    for c in cliques:
        root = find(c[0])
        verts, edges = groups.setdefault(root, (set(), []))
        verts.update(c)
        edges.append(c)
    return list(groups.values())


def _cliques_of_size(adj: list[set[int]], n: int) -> list[tuple[int, ...]]:
    """All cliques with exactly n vertices, by ordered extension."""
    out: list[tuple[int, ...]] = []

    def extend(clique: list[int], candidates: list[int]) -> None:
        if len(clique) == n:
            out.append(tuple(clique))
            return
        for idx, v in enumerate(candidates):
            nxt = [u for u in candidates[idx + 1 :] if u in adj[v]]
            if len(clique) + 1 + len(nxt) >= n:
                extend(clique + [v], nxt)

    extend([], list(range(len(adj))))
    return out


def _maximal_cliques(adj: list[set[int]]) -> list[list[int]]:
    """Bron-Kerbosch with pivoting; includes isolated vertices as singletons."""
    out: list[list[int]] = []

    def bk(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(sorted(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            bk(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    bk([], set(range(len(adj))), set())
    return out


def completion(rays: list[Ray]) -> Ray:
    """The unique ray orthogonal to n-1 mutually orthogonal rays in dim n."""
    if not rays:
        raise ValueError("no rays given")
    n = rays[0].dim
    if any(r.dim != n for r in rays):
        raise ValueError("mixed dimensions")
    if len(rays) != n - 1:
        raise ValueError(f"need exactly {n - 1} rays in dimension {n}, got {len(rays)}")
    for a, b in itertools.combinations(rays, 2):
        if not hermitian_inner(a, b).is_zero():
            raise CoordinatizationError("completion inputs are not mutually orthogonal")
    rows = [r.conjugate() for r in rays]
    try:
        vec = null_space_unique(rows)
    except ValueError as exc:
        raise CoordinatizationError(f"completion inputs are dependent: {exc}") from exc
    return Ray(vec)


@dataclass
class VerificationReport:
    """Outcome of checking a coordinatization against its hypergraph."""

    edges_checked: int
    rays_checked: int
    missing_vertices: list[str] = field(default_factory=list)
    orthogonality_violations: list[tuple[int, str, str]] = field(default_factory=list)
    duplicate_rays: list[tuple[str, str]] = field(default_factory=list)
    nonspanning_edges: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.missing_vertices
            or self.orthogonality_violations
            or self.duplicate_rays
            or self.nonspanning_edges
        )

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "edges_checked": self.edges_checked,
            "rays_checked": self.rays_checked,
            "missing_vertices": self.missing_vertices,
            "orthogonality_violations": [
                {"edge": e, "u": u, "v": v} for e, u, v in self.orthogonality_violations
            ],
            "duplicate_rays": [{"u": u, "v": v} for u, v in self.duplicate_rays],
            "nonspanning_edges": self.nonspanning_edges,
        }


def verify_coordinatization(h: MMPH, c: Coordinatization) -> VerificationReport:
    """Check edge orthogonality, ray distinctness, and basis spans.

    Violations are report content, not exceptions.
    """
    report = VerificationReport(edges_checked=h.l, rays_checked=0)
    report.missing_vertices = c.uncoordinatized(h)
    if report.missing_vertices:
        return report
    report.rays_checked = h.k
    for ei, edge in enumerate(h.edges):
        for u, v in itertools.combinations(edge, 2):
            if not hermitian_inner(c.rays[u], c.rays[v]).is_zero():
                report.orthogonality_violations.append((ei, u, v))
    seen: dict[Ray, str] = {}
    for v in h.vertices:
        ray = c.rays[v]
        if ray in seen:
            report.duplicate_rays.append((seen[ray], v))
        else:
            seen[ray] = v
    n = h.n
    for ei, edge in enumerate(h.edges):
        if len(edge) == n:
            rows = [c.rays[v].components for v in edge]
            if matrix_rank(rows) != n:
                report.nonspanning_edges.append(ei)
    return report

"""Contextuality decision: 0-1 assignments with exactly one 1 per hyperedge.

The decision problem is exact cover: columns are hyperedges, rows are
vertices, and a valid assignment is a row subset covering every column
exactly once. The solver is a bitmask Algorithm X with
minimum-remaining-candidates column choice; branching is deterministic,
so node counts are reproducible. ``brute_force_assignment`` is an
independent exhaustive oracle over all 2**k assignments.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .codec import vertex_sort_key
from .hypergraph import MMPH

Assignment = dict[str, int]


@dataclass
class SolveReport:
    assignment: Assignment | None
    nodes: int
    millis: float

    @property
    def contextual(self) -> bool:
        return self.assignment is None


def _solver_tables(h: MMPH):
    """Row/column bitmask tables; rows are vertices in deterministic order."""
    verts = sorted(h.vertices, key=vertex_sort_key)
    vid = {v: i for i, v in enumerate(verts)}
    row_cols_mask = [0] * len(verts)
    col_rows = [0] * h.l
    for c, edge in enumerate(h.edges):
        for v in edge:
            r = vid[v]
            row_cols_mask[r] |= 1 << c
            col_rows[c] |= 1 << r
    conflict = [0] * len(verts)
    for r in range(len(verts)):
        mask = 0
        for c in range(h.l):
            if row_cols_mask[r] >> c & 1:
                mask |= col_rows[c]
        conflict[r] = mask
    return verts, row_cols_mask, col_rows, conflict


def solve_exact_cover(h: MMPH) -> SolveReport:
    """Find a valid assignment, or prove none exists, with search stats."""
    start = time.perf_counter()
    if h.l == 0:
        return SolveReport({}, 0, (time.perf_counter() - start) * 1000.0)
    verts, row_cols_mask, col_rows, conflict = _solver_tables(h)
    nodes = 0
    chosen: list[int] = []

    def search(active_cols: int, avail_rows: int) -> bool:
        nonlocal nodes
        if active_cols == 0:
            return True
        best_c = -1
        best_cnt = 1 << 62
        m = active_cols
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = (col_rows[c] & avail_rows).bit_count()
            if cnt == 0:
                return False
            if cnt < best_cnt:
                best_cnt, best_c = cnt, c
        rows = col_rows[best_c] & avail_rows
        while rows:
            r = (rows & -rows).bit_length() - 1
            rows &= rows - 1
            nodes += 1
            chosen.append(r)
            if search(active_cols & ~row_cols_mask[r], avail_rows & ~conflict[r]):
                return True
            chosen.pop()
        return False

    found = search((1 << h.l) - 1, (1 << len(verts)) - 1)
    millis = (time.perf_counter() - start) * 1000.0
    if not found:
        return SolveReport(None, nodes, millis)
    ones = {verts[r] for r in chosen}
    return SolveReport({v: (1 if v in ones else 0) for v in h.vertices}, nodes, millis)


def find_assignment(h: MMPH) -> Assignment | None:
    """A 0-1 assignment with exactly one 1 per hyperedge, or None."""
    return solve_exact_cover(h).assignment


def is_contextual(h: MMPH) -> bool:
    return solve_exact_cover(h).assignment is None


def check_assignment(h: MMPH, assignment: Assignment) -> bool:
    """Verify the exactly-one-1-per-hyperedge condition directly."""
    if any(assignment.get(v) not in (0, 1) for v in h.vertices):
        return False
    return all(sum(assignment[v] for v in e) == 1 for e in h.edges)


_POP16 = None


def _popcount16():
    global _POP16
    if _POP16 is None:
        t = np.arange(1 << 16, dtype=np.uint32)
        pc = np.zeros(1 << 16, dtype=np.uint8)
        for shift in range(16):
            pc += ((t >> shift) & 1).astype(np.uint8)
        _POP16 = pc
    return _POP16


BRUTE_FORCE_MAX_K = 25


def brute_force_assignment(h: MMPH) -> Assignment | None:
    """Exhaustive oracle: test every assignment of 1s to the k vertices.

    Enumeration is vectorized in chunks; the witness (when one exists) is the
    lexicographically least valid bitmask over the document vertex order.
    Only for k <= 25.
    """
    if h.k > BRUTE_FORCE_MAX_K:
        raise ValueError(f"k={h.k} too large for brute force (max {BRUTE_FORCE_MAX_K})")
    if h.l == 0:
        return {}
    pc = _popcount16()
    bit = {v: i for i, v in enumerate(h.vertices)}
    edge_masks = np.array(
        [sum(1 << bit[v] for v in e) for e in h.edges], dtype=np.uint32
    )
    total = 1 << h.k
    chunk = min(total, 1 << 20)
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(lo + chunk, total), dtype=np.uint32)
        ok = np.ones(len(masks), dtype=bool)
        for em in edge_masks:
            x = masks & em
            ones = pc[x & np.uint32(0xFFFF)] + pc[x >> np.uint32(16)]
            ok &= ones == 1
        hits = np.flatnonzero(ok)
        if hits.size:
            w = int(masks[hits[0]])
            return {v: (w >> bit[v]) & 1 for v in h.vertices}
    return None


PAVICIC = "pavicic"
CABELLO = "cabello"

_ALIAS = {
    "non-contextual": "non-contextual",
    "KS": "extended KS",
    "non-KS": "KS",
}


@dataclass
class Classification:
    contextual: bool
    kind: str  # non-contextual | KS | non-KS
    alias: str  # the same set's name in the Cabello/Larsson convention

    def name(self, convention: str = PAVICIC) -> str:
        if convention == PAVICIC:
            return self.kind
        if convention == CABELLO:
            return self.alias
        raise ValueError(f"unknown convention {convention!r}")


def classify(h: MMPH) -> Classification:
    """Contextuality plus the KS / non-KS split on hyperedge sizes.

    A contextual set all of whose hyperedges are complete bases is KS; a
    contextual set with some smaller hyperedge is non-KS. The alias field
    carries the other notational convention, which swaps these names.
    """
    if not is_contextual(h):
        return Classification(False, "non-contextual", _ALIAS["non-contextual"])
    n = h.n
    kind = "KS" if all(len(e) == n for e in h.edges) else "non-KS"
    return Classification(True, kind, _ALIAS[kind])

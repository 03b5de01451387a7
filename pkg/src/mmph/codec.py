"""Parser and serializer for MMP hypergraph lines and coordinatization files.

A hypergraph is written as hyperedges of single-symbol vertices, separated
by commas and terminated by ``.``; a coordinatization file assigns one ray
per vertex as ``<symbol>={<scalar>,...}``. Both formats survive round trips
byte-exactly on canonical inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import CoordinatizationError, MmpSyntaxError, RingMismatchError
from .hypergraph import MMPH
from .ring import RATIONAL, Ray, _join, format_scalar, parse_scalar

# Vertex symbols: digits 1-9, then A-Z, then a-z, then printable ASCII
# punctuation in codepoint order minus the five structural characters.
_STRUCTURAL = set(",.={}")
ALPHABET = (
    "123456789"
    + "".join(chr(c) for c in range(ord("A"), ord("Z") + 1))
    + "".join(chr(c) for c in range(ord("a"), ord("z") + 1))
    + "".join(chr(c) for c in range(33, 127) if not chr(c).isalnum() and chr(c) not in _STRUCTURAL)
)
ALPHABET_INDEX = {s: i for i, s in enumerate(ALPHABET)}


def vertex_sort_key(label: str) -> tuple:
    """Deterministic vertex order: alphabet position, then raw label."""
    if label in ALPHABET_INDEX and len(label) == 1:
        return (0, ALPHABET_INDEX[label], label)
    return (1, 0, label)


def parse_mmph(text: str) -> MMPH:
    """Parse one ``.``-terminated hypergraph; whitespace is ignored."""
    compact = "".join(text.split())
    if not compact:
        raise MmpSyntaxError("empty hypergraph text")
    if not compact.endswith("."):
        raise MmpSyntaxError("hypergraph text must end with '.'")
    body = compact[:-1]
    if "." in body:
        raise MmpSyntaxError("multiple '.' terminators; use parse_mmph_document for batch files")
    if not body:
        raise MmpSyntaxError("hypergraph has no hyperedges")
    edges = []
    for chunk in body.split(","):
        for sym in chunk:
            if sym not in ALPHABET_INDEX:
                raise MmpSyntaxError(f"unknown vertex symbol {sym!r}")
        if len(chunk) < 2:
            raise MmpSyntaxError(f"hyperedge {chunk!r} has fewer than 2 vertices")
        if len(set(chunk)) != len(chunk):
            raise MmpSyntaxError(f"hyperedge {chunk!r} repeats a vertex")
        edges.append(tuple(chunk))
    seen = set()
    for e in edges:
        key = frozenset(e)
        if key in seen:
            raise MmpSyntaxError(f"duplicate hyperedge {''.join(e)!r}")
        seen.add(key)
    return MMPH(edges)


def parse_mmph_document(text: str) -> list[MMPH]:
    """Parse a batch file: one hypergraph per ``.``-terminated segment."""
    compact = "".join(text.split())
    if not compact:
        return []
    if not compact.endswith("."):
        raise MmpSyntaxError("last hypergraph is missing its '.' terminator")
    return [parse_mmph(seg + ".") for seg in compact[:-1].split(".")]


def serialize_mmph(h: MMPH) -> str:
    """Render a hypergraph in MMP notation.

    Labels are kept verbatim when they already form a prefix of the symbol
    alphabet; otherwise vertices are relabeled from the alphabet start in
    order of first appearance.
    """
    if h.k > len(ALPHABET):
        raise MmpSyntaxError(f"{h.k} vertices exceed the {len(ALPHABET)}-symbol alphabet")
    if set(h.vertices) == set(ALPHABET[: h.k]):
        mapping = {v: v for v in h.vertices}
    else:
        mapping = {v: ALPHABET[i] for i, v in enumerate(h.vertices)}
    return ",".join("".join(mapping[v] for v in e) for e in h.edges) + "."


def relabel_to_alphabet(h: MMPH) -> tuple[MMPH, dict[str, str]]:
    """Relabel vertices into the alphabet by first appearance."""
    if h.k > len(ALPHABET):
        raise MmpSyntaxError(f"{h.k} vertices exceed the {len(ALPHABET)}-symbol alphabet")
    mapping = {v: ALPHABET[i] for i, v in enumerate(h.vertices)}
    return MMPH(tuple(mapping[v] for v in e) for e in h.edges), mapping


@dataclass
class Coordinatization:
    """Vertex -> Ray mapping; rays are normalized on ingestion."""

    rays: dict[str, Ray] = field(default_factory=dict)

    @property
    def ring(self) -> str:
        ring = RATIONAL
        for ray in self.rays.values():
            ring = _join(ring, ray.ring)
        return ring

    def uncoordinatized(self, h: MMPH) -> list[str]:
        return [v for v in h.vertices if v not in self.rays]

    def restrict(self, vertices) -> Coordinatization:
        keep = set(vertices)
        return Coordinatization({v: r for v, r in self.rays.items() if v in keep})


_ENTRY = re.compile(r"(\S)\s*=\s*\{([^{}]*)\}")


def parse_coordinatization(text: str, h: MMPH) -> Coordinatization:
    """Parse ``<symbol>={<scalar>,...}`` entries for the vertices of h.

    Entries may be separated by commas, whitespace, or newlines. Vertices
    of h without an entry are simply left uncoordinatized.
    """
    rays: dict[str, Ray] = {}
    pos = 0
    dim = h.n
    while pos < len(text):
        ch = text[pos]
        if ch in ", \t\r\n":
            pos += 1
            continue
        m = _ENTRY.match(text, pos)
        if m is None:
            raise MmpSyntaxError(f"malformed coordinatization entry near {text[pos:pos + 20]!r}")
        sym, body = m.group(1), m.group(2)
        if sym not in h.vertex_index:
            raise CoordinatizationError(f"symbol {sym!r} does not occur in the hypergraph")
        if sym in rays:
            raise CoordinatizationError(f"duplicate coordinatization entry for {sym!r}")
        comps = [parse_scalar(part) for part in body.split(",")]
        if len(comps) != dim:
            raise CoordinatizationError(
                f"vertex {sym!r} has {len(comps)} components; dimension is {dim}"
            )
        rays[sym] = Ray(comps)
        pos = m.end()
    coord = Coordinatization(rays)
    ring = RATIONAL
    for ray in rays.values():
        try:
            ring = _join(ring, ray.ring)
        except RingMismatchError as exc:
            raise CoordinatizationError(f"mixed scalar rings in coordinatization: {exc}") from exc
    return coord


def serialize_coordinatization(c: Coordinatization, h: MMPH | None = None) -> str:
    """One ``<symbol>={...}`` line per vertex, denominators cleared."""
    if h is not None:
        order = [v for v in h.vertices if v in c.rays]
    else:
        order = sorted(c.rays, key=vertex_sort_key)
    lines = []
    for v in order:
        comps = c.rays[v].integral_components()
        lines.append(f"{v}={{{','.join(format_scalar(x) for x in comps)}}}")
    return "\n".join(lines) + "\n"


def next_free_labels(used, count: int) -> list[str]:
    """Fresh vertex labels: unused alphabet symbols first, then n1, n2, ..."""
    taken = set(used)
    out: list[str] = []
    for sym in ALPHABET:
        if len(out) == count:
            return out
        if sym not in taken:
            out.append(sym)
            taken.add(sym)
    i = 1
    while len(out) < count:
        label = f"n{i}"
        if label not in taken:
            out.append(label)
            taken.add(label)
        i += 1
    return out

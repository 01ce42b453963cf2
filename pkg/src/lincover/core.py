"""Mixed hypergraph data model and instance I/O.

A hypergraph here has n vertices labeled 0..n-1 and a deduplicated set of
edges of size 2 or 3.  All values are immutable after construction; edges
are stored sorted, and the edge list is kept in lexicographic order so
equal hypergraphs serialize identically.
"""

from __future__ import annotations

from dataclasses import dataclass

Edge = tuple[int, ...]


class ParseError(ValueError):
    """Raised for malformed instance text; the message names the line."""


def make_edge(vertices, n: int | None = None) -> Edge:
    """Canonicalize an edge: sorted tuple of 2 or 3 distinct vertex ids.

    Raises ValueError on a repeated vertex, a size outside {2, 3}, a
    negative id, or (when n is given) an id outside [0, n).
    """
    vs = tuple(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError(f"repeated vertex within edge {vs}")
    if len(vs) not in (2, 3):
        raise ValueError(f"edge size must be 2 or 3, got {len(vs)}")
    for v in vs:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
        if n is not None and v >= n:
            raise ValueError(f"vertex {v} out of range [0, {n})")
    return tuple(sorted(vs))


@dataclass(frozen=True)
class Hypergraph:
    """Canonical mixed hypergraph: n vertices, sorted deduplicated edges."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = sorted({make_edge(e, self.n) for e in self.edges})
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse instance text: header line "n m", then m edge lines.

    Lines starting with '#' are comments.  Duplicate edges merge silently;
    any other irregularity raises ParseError naming the offending line.
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"malformed line, line {lineno}: {line!r}") from None
        if header is None:
            if len(values) != 2 or values[0] < 0 or values[1] < 0:
                raise ParseError(f"malformed header, line {lineno}: expected 'n m'")
            header = (values[0], values[1])
            n = values[0]
            continue
        try:
            edges.append(make_edge(values, n))
        except ValueError as exc:
            raise ParseError(f"{exc}, line {lineno}") from None
    if header is None:
        raise ParseError("empty instance: missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(
            f"header declares {header[1]} edges but {len(edges)} edge lines found"
        )
    return Hypergraph(n, tuple(edges))


def serialize_hypergraph(h: Hypergraph) -> str:
    """Emit canonical instance text; parse(serialize(h)) == h."""
    lines = [f"{h.n} {len(h.edges)}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def induced_sub(h: Hypergraph, keep) -> tuple[Hypergraph, dict[int, int]]:
    """Subhypergraph induced on `keep`, with dense relabeling.

    Returns (subgraph, mapping) where mapping sends each kept original
    vertex id to its new dense id.  Edges not fully inside `keep` drop.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < h.n:
            raise ValueError(f"keep vertex {v} out of range [0, {h.n})")
    relabel = {old: new for new, old in enumerate(kept)}
    kept_set = set(kept)
    new_edges = [
        tuple(sorted(relabel[v] for v in e))
        for e in h.edges
        if all(v in kept_set for v in e)
    ]
    return Hypergraph(len(kept), tuple(new_edges)), relabel


def add_edges(h: Hypergraph, extra) -> Hypergraph:
    """Union of h's edges with `extra`, canonicalized.

    Invalid entries are reported with their index into `extra`.
    """
    merged = list(h.edges)
    for i, e in enumerate(extra):
        try:
            merged.append(make_edge(e, h.n))
        except ValueError as exc:
            raise ValueError(f"extra[{i}]: {exc}") from None
    return Hypergraph(h.n, tuple(merged))

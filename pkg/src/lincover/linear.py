"""Linear path and linear cycle semantics.

A linear path is a sequence of hyperedges where consecutive edges share
exactly one vertex and nonconsecutive edges are disjoint.  A linear cycle
is the cyclic analogue; a single vertex and a single hyperedge count as
degenerate cycles.  Cyclic sequences of exactly two edges are never
accepted: two distinct edges have one fixed intersection set, so the two
cyclic adjacencies cannot both be one-element intersections of a genuine
cycle (see validate_cycle).

Validators return a violation report instead of raising; violations name
the first offending index pair in a fixed scan order (consecutive checks
first, then nonconsecutive, increasing indices).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Edge


@dataclass(frozen=True)
class PathViolation:
    kind: str  # "empty" | "consecutive" | "nonconsecutive"
    i: int
    j: int
    detail: str


@dataclass(frozen=True)
class CycleViolation:
    kind: str  # "length" | "consecutive" | "nonconsecutive"
    i: int
    j: int
    detail: str


@dataclass(frozen=True)
class LinearPath:
    """Validated sequence of edges h_0..h_l; build via validate_path."""

    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def connectors(self) -> tuple[int, ...]:
        """Shared vertex of each consecutive edge pair, in order."""
        out = []
        for a, b in zip(self.edges, self.edges[1:]):
            (c,) = set(a) & set(b)
            out.append(c)
        return tuple(out)


@dataclass(frozen=True)
class LinearCycle:
    """One of: single vertex, single edge, or a proper cyclic edge sequence."""

    kind: str  # "vertex" | "edge" | "cycle"
    v: int | None = None
    edges: tuple[Edge, ...] = ()

    @staticmethod
    def single_vertex(v: int) -> "LinearCycle":
        return LinearCycle("vertex", v=v)

    @staticmethod
    def single_edge(e: Edge) -> "LinearCycle":
        return LinearCycle("edge", edges=(tuple(e),))

    @staticmethod
    def proper(edges) -> "LinearCycle":
        return LinearCycle("cycle", edges=tuple(tuple(e) for e in edges))

    def vertex_set(self) -> frozenset[int]:
        if self.kind == "vertex":
            return frozenset((self.v,))
        return frozenset(v for e in self.edges for v in e)

    def to_json_obj(self):
        if self.kind == "vertex":
            return {"kind": "vertex", "v": self.v}
        if self.kind == "edge":
            return {"kind": "edge", "e": list(self.edges[0])}
        return {"kind": "cycle", "edges": [list(e) for e in self.edges]}

    @staticmethod
    def from_json_obj(obj) -> "LinearCycle":
        kind = obj.get("kind")
        if kind == "vertex":
            return LinearCycle.single_vertex(int(obj["v"]))
        if kind == "edge":
            return LinearCycle.single_edge(tuple(int(v) for v in obj["e"]))
        if kind == "cycle":
            return LinearCycle.proper(
                tuple(int(v) for v in e) for e in obj["edges"]
            )
        raise ValueError(f"unknown cycle kind {kind!r}")


def validate_path(edges) -> LinearPath | PathViolation:
    """Check the linear path conditions on an edge sequence."""
    seq = [frozenset(e) for e in edges]
    if not seq:
        return PathViolation("empty", 0, 0, "empty edge sequence")
    for i in range(len(seq) - 1):
        shared = seq[i] & seq[i + 1]
        if len(shared) != 1:
            return PathViolation(
                "consecutive", i, i + 1,
                f"edges {i} and {i + 1} intersect in {len(shared)} vertices",
            )
    for i in range(len(seq)):
        for j in range(i + 2, len(seq)):
            shared = seq[i] & seq[j]
            if shared:
                return PathViolation(
                    "nonconsecutive", i, j,
                    f"nonconsecutive edges {i} and {j} share {sorted(shared)}",
                )
    return LinearPath(tuple(tuple(e) for e in edges))


def validate_cycle(candidate) -> LinearCycle | CycleViolation:
    """Check the linear cycle conditions on a candidate.

    Accepts a LinearCycle (revalidated) or an edge sequence.  A length-1
    sequence is the degenerate single-edge cycle.  Length 2 is always
    rejected: the single intersection set of two distinct edges cannot
    serve as two one-element cyclic intersections.
    """
    if isinstance(candidate, LinearCycle):
        if candidate.kind == "vertex":
            return candidate
        return validate_cycle(candidate.edges)
    seq = [frozenset(e) for e in candidate]
    if len(seq) == 0:
        return CycleViolation("length", 0, 0, "empty edge sequence")
    if len(seq) == 1:
        return LinearCycle.single_edge(tuple(candidate[0]))
    if len(seq) == 2:
        return CycleViolation(
            "length", 0, 1,
            "a cyclic sequence of 2 edges cannot have two one-element intersections",
        )
    L = len(seq)
    for i in range(L):
        j = (i + 1) % L
        shared = seq[i] & seq[j]
        if len(shared) != 1:
            return CycleViolation(
                "consecutive", min(i, j), max(i, j),
                f"cyclically consecutive edges {i} and {j} intersect "
                f"in {len(shared)} vertices",
            )
    for i in range(L):
        for j in range(i + 2, L):
            if i == 0 and j == L - 1:
                continue  # cyclically consecutive
            shared = seq[i] & seq[j]
            if shared:
                return CycleViolation(
                    "nonconsecutive", i, j,
                    f"cyclically nonconsecutive edges {i} and {j} "
                    f"share {sorted(shared)}",
                )
    return LinearCycle.proper(candidate)


@dataclass(frozen=True)
class OrientedPath:
    """A linear path with the traversal labeling fixed.

    spine[i] is the vertex where edge i is entered (spine[0] is the start,
    spine[i] for 0 < i <= l the connector shared with the previous edge,
    spine[l+1] the exit label of the last edge).  off[i] is the third
    vertex of edge i when it has size 3, else None.  For the last edge of
    size 3 the split of its two non-connector vertices between spine and
    off is by smallest id; downstream consumers treat them as an
    unordered pair.
    """

    path: LinearPath
    spine: tuple[int, ...]
    off: tuple[int | None, ...]

    @property
    def v0(self) -> int:
        return self.spine[0]

    def __len__(self) -> int:
        return len(self.path)

    def marked_pairs(self) -> tuple[tuple[int, int], ...]:
        """The (spine[k], off[k]) pairs of every size-3 edge, as sorted tuples."""
        out = []
        for k in range(1, len(self.spine)):
            u = self.off[k - 1]
            if u is not None:
                a, b = self.spine[k], u
                out.append((a, b) if a < b else (b, a))
        return tuple(out)


def path_endpoints(p: LinearPath) -> tuple[int, ...]:
    """Vertices that may serve as the start label of an orientation.

    For a one-edge path every vertex qualifies; otherwise the non-connector
    vertices of the two end edges, sorted ascending.
    """
    if len(p.edges) == 1:
        return tuple(sorted(p.edges[0]))
    conns = p.connectors()
    first = set(p.edges[0]) - {conns[0]}
    last = set(p.edges[-1]) - {conns[-1]}
    return tuple(sorted(first | last))


def orient_path(p: LinearPath, start: int) -> OrientedPath:
    """Fix a traversal labeling of p beginning at `start`.

    `start` must be one of path_endpoints(p); starting from the far end
    reverses the edge sequence.  Ties inside the final edge resolve by
    smallest vertex id.
    """
    if start not in path_endpoints(p):
        raise ValueError(f"{start} is not a valid endpoint of the path")
    edges = list(p.edges)
    if len(edges) > 1:
        conns = p.connectors()
        if start not in set(edges[0]) - {conns[0]}:
            edges.reverse()
    spine = [start]
    off: list[int | None] = []
    for i, e in enumerate(edges):
        rest = set(e) - {spine[i]}
        if i < len(edges) - 1:
            (conn,) = rest & set(edges[i + 1])
            rest.discard(conn)
            spine.append(conn)
            off.append(rest.pop() if rest else None)
        else:
            nxt = min(rest)
            spine.append(nxt)
            rest.discard(nxt)
            off.append(rest.pop() if rest else None)
    return OrientedPath(LinearPath(tuple(edges)), tuple(spine), tuple(off))


def initial_segment(p: OrientedPath, j: int) -> LinearPath:
    """The sub-path of the first j+1 edges, anchored at the start label."""
    if not 0 <= j < len(p.path):
        raise ValueError(f"segment index {j} out of range [0, {len(p.path)})")
    return LinearPath(p.path.edges[: j + 1])

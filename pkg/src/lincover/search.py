"""Exact exponential searches over mixed hypergraphs.

Everything here is exact backtracking with pruning; there are no
heuristics and no approximation.  Determinism: vertex/edge iteration is
always in canonical index order, ties break lexicographically, so repeated
runs return identical results.  Every search accepts a budget and aborts
with BudgetExhausted rather than returning a possibly-wrong answer.

Vertex sets are bitmasks throughout; states of the path/cycle searches are
(visited-vertex mask, free vertices of the last edge) pairs, which is
enough because future extensions of a linear sequence depend only on those
two sets.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import Edge, Hypergraph
from .linear import LinearCycle, LinearPath, OrientedPath, validate_path


class BudgetExhausted(RuntimeError):
    """A search hit its node or time limit before completing."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search phase: max tree nodes and wall-clock seconds."""

    node_limit: int = 10_000_000
    time_limit: float = 30.0

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")

    def tracker(self) -> "BudgetTracker":
        return BudgetTracker(self.node_limit, self.time_limit)


class BudgetTracker:
    """Mutable node counter enforcing one budget; create via SearchBudget.tracker()."""

    __slots__ = ("node_limit", "time_limit", "nodes", "_deadline")

    def __init__(self, node_limit: int, time_limit: float):
        self.node_limit = node_limit
        self.time_limit = time_limit
        self.nodes = 0
        self._deadline = time.monotonic() + time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExhausted(f"node limit {self.node_limit} exceeded")
        if self.nodes % 4096 == 0 and time.monotonic() > self._deadline:
            raise BudgetExhausted(f"time limit {self.time_limit}s exceeded")


def _as_tracker(budget) -> BudgetTracker:
    if budget is None:
        return SearchBudget().tracker()
    if isinstance(budget, SearchBudget):
        return budget.tracker()
    return budget


def _vmask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask -= low


@dataclass(frozen=True)
class IndependentSet:
    """A vertex set containing no edge of its hypergraph as a subset."""

    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)


def alpha(h: Hypergraph, budget=None) -> IndependentSet:
    """Exact maximum independent set, branch and bound over vertices.

    Branches on vertices in order of decreasing degree; a vertex may join
    the chosen set unless that completes an edge.  The first maximum found
    in this fixed order is the witness, so results are deterministic.
    """
    tr = _as_tracker(budget)
    n = h.n
    if n == 0:
        return IndependentSet(frozenset())
    by_v: list[list[int]] = [[] for _ in range(n)]
    for e in h.edges:
        m = _vmask(e)
        for v in e:
            by_v[v].append(m)
    order = sorted(range(n), key=lambda v: (-len(by_v[v]), v))

    best_mask = 0
    best_count = 0

    def down(idx: int, chosen: int, count: int) -> None:
        nonlocal best_mask, best_count
        tr.tick()
        if count + (n - idx) <= best_count:
            return
        if idx == n:
            best_count = count
            best_mask = chosen
            return
        v = order[idx]
        vb = 1 << v
        grown = chosen | vb
        for m in by_v[v]:
            if m & ~grown == 0:
                break  # taking v would complete this edge
        else:
            down(idx + 1, grown, count + 1)
        down(idx + 1, chosen, count)

    down(0, 0, 0)
    return IndependentSet(frozenset(_bits(best_mask)))


def longest_linear_path(h: Hypergraph, budget=None) -> LinearPath | None:
    """A longest linear path, or None when the edge set is empty.

    Among all maximum-length paths the lexicographically smallest sequence
    of canonical edge indices is returned.  Two passes: an exhaustive
    memoized computation of the best extension from every reachable
    (visited, free-end) state, then a greedy lexicographic reconstruction.
    """
    if not h.edges:
        return None
    tr = _as_tracker(budget)
    masks = [_vmask(e) for e in h.edges]
    nmax = h.n
    by_v: list[list[int]] = [[] for _ in range(nmax)]
    for em in masks:
        for v in _bits(em):
            by_v[v].append(em)

    memo: dict[int, int] = {}

    def maxext(used: int, last_free: int) -> int:
        key = (used << nmax) | last_free
        cached = memo.get(key)
        if cached is not None:
            return cached
        tr.tick()
        best = 0
        lf = last_free
        while lf:
            cb = lf & -lf
            lf -= cb
            for em in by_v[cb.bit_length() - 1]:
                if em & used == cb:
                    ext = 1 + maxext(used | em, em & ~cb)
                    if ext > best:
                        best = ext
        memo[key] = best
        return best

    best_len = 0
    for em in masks:
        total = 1 + maxext(em, em)
        if total > best_len:
            best_len = total

    seq: list[int] = []
    used = last_free = 0
    for i, em in enumerate(masks):
        if 1 + maxext(em, em) == best_len:
            seq.append(i)
            used = em
            last_free = em
            break
    remaining = best_len - 1
    while remaining:
        for i, em in enumerate(masks):
            hit = em & used
            if hit and hit & (hit - 1) == 0 and hit & last_free:
                if 1 + maxext(used | em, em & ~hit) == remaining:
                    seq.append(i)
                    used |= em
                    last_free = em & ~hit
                    remaining -= 1
                    break
        else:  # pragma: no cover - reconstruction always succeeds
            raise AssertionError("path reconstruction failed")

    path = validate_path([h.edges[i] for i in seq])
    assert isinstance(path, LinearPath)
    return path


def best_cycle_for_initial_segment(
    h: Hypergraph, p: OrientedPath, budget=None
) -> tuple[LinearCycle, int]:
    """A linear cycle containing the longest possible prefix of p.

    Tries prefixes h_0..h_j for j from the full path down to 0 and returns
    the first cycle found together with that j.  If no cycle contains even
    h_0, falls back to the degenerate single-edge cycle on h_0 with j = 0.

    Cycles are built as [h_0..h_j, completion...]; a completion edge closes
    the cycle when it meets the free end of the last edge and a free vertex
    of h_0 (one vertex each, nothing else visited).  Two length-3 shapes
    close on a single shared vertex instead and are matched specially:
    three edges through one common vertex arise either around h_0's
    attachment vertex or around the h_0/h_1 connector.
    """
    tr = _as_tracker(budget)
    edges = h.edges
    masks = [_vmask(e) for e in edges]
    index_of = {e: i for i, e in enumerate(edges)}
    seg = [index_of[e] for e in p.path.edges]
    spine = p.spine
    by_v: list[list[int]] = [[] for _ in range(h.n)]
    for i, em in enumerate(masks):
        for v in _bits(em):
            by_v[v].append(i)

    def complete(j: int) -> list[int] | None:
        used0 = 0
        for i in seg[: j + 1]:
            used0 |= masks[i]
        if j >= 1:
            last_free0 = masks[seg[j]] & ~(1 << spine[j])
            h0_close0 = masks[seg[0]] & ~(1 << spine[1])
            flower0 = (1 << spine[1]) if j == 1 else 0
        else:
            last_free0 = masks[seg[0]]
            h0_close0 = 0
            flower0 = 0
        failed: set[tuple[int, int, int, int]] = set()
        first_step = j == 0  # next extension picks h_0's attachment vertex

        def walk(used, last_free, h0_close, flower, picking_attach):
            tr.tick()
            key = (used, last_free, h0_close, flower)
            if key in failed:
                return None
            cand: set[int] = set()
            for v in _bits(last_free | flower):
                cand.update(by_v[v])
            ordered = sorted(cand)
            for i in ordered:
                em = masks[i]
                hit = em & used
                if flower and hit == flower:
                    return [i]
                if h0_close and hit.bit_count() == 2:
                    if (
                        (hit & last_free).bit_count() == 1
                        and (hit & h0_close).bit_count() == 1
                        and hit & ~(last_free | h0_close) == 0
                    ):
                        return [i]
            for i in ordered:
                em = masks[i]
                hit = em & used
                if hit and hit & (hit - 1) == 0 and hit & last_free:
                    if picking_attach:
                        sub = walk(used | em, em & ~hit, used & ~hit, hit, False)
                    else:
                        sub = walk(used | em, em & ~hit, h0_close, 0, False)
                    if sub is not None:
                        return [i] + sub
            failed.add(key)
            return None

        return walk(used0, last_free0, h0_close0, flower0, first_step)

    for j in range(len(seg) - 1, -1, -1):
        found = complete(j)
        if found is not None:
            cyc = [edges[i] for i in seg[: j + 1]] + [edges[i] for i in found]
            return LinearCycle.proper(cyc), j
    return LinearCycle.single_edge(edges[seg[0]]), 0


def enumerate_linear_cycles(h: Hypergraph, budget=None) -> list[tuple[int, ...]]:
    """All proper linear cycles, as canonical tuples of edge indices.

    Each cycle is reported once, normalized over rotation and reflection.
    Exhaustive; intended for small instances (the cover oracle and tests).
    """
    tr = _as_tracker(budget)
    edges = h.edges
    masks = [_vmask(e) for e in edges]
    by_v: list[list[int]] = [[] for _ in range(h.n)]
    for i, em in enumerate(masks):
        for v in _bits(em):
            by_v[v].append(i)

    found: set[tuple[int, ...]] = set()

    def canonical(seq: list[int]) -> tuple[int, ...]:
        best = None
        for order in (seq, seq[::-1]):
            for r in range(len(order)):
                rot = tuple(order[r:] + order[:r])
                if best is None or rot < best:
                    best = rot
        return best

    def extend(seq, used, last_free, h0_close, flower):
        tr.tick()
        cand: set[int] = set()
        for v in _bits(last_free | flower):
            cand.update(by_v[v])
        for i in sorted(cand):
            em = masks[i]
            hit = em & used
            closes = False
            if flower and hit == flower:
                closes = True
            elif h0_close and hit.bit_count() == 2:
                closes = (
                    (hit & last_free).bit_count() == 1
                    and (hit & h0_close).bit_count() == 1
                    and hit & ~(last_free | h0_close) == 0
                )
            if closes:
                found.add(canonical(seq + [i]))
            if hit and hit & (hit - 1) == 0 and hit & last_free:
                if h0_close == 0:  # picking the attachment vertex on the start edge
                    extend(seq + [i], used | em, em & ~hit, used & ~hit, hit)
                else:
                    extend(seq + [i], used | em, em & ~hit, h0_close, 0)

    for s, em in enumerate(masks):
        extend([s], em, em, 0, 0)
    return sorted(found)


def min_cycle_cover_oracle(
    h: Hypergraph, budget=None
) -> tuple[int, list[LinearCycle]]:
    """Exact minimum number of edge-disjoint linear cycles covering V(h).

    Independent of the constructive solver: enumerates every linear cycle
    (proper and degenerate) and finds a smallest edge-disjoint covering
    family by iterative deepening.  Intended for n <= 8.
    """
    tr = _as_tracker(budget)
    n = h.n
    if n == 0:
        return 0, []

    cycles: list[tuple[int, int, LinearCycle]] = []  # (vertex mask, edge idx mask, cycle)
    for seq in enumerate_linear_cycles(h, tr):
        vm = 0
        im = 0
        for i in seq:
            vm |= _vmask(h.edges[i])
            im |= 1 << i
        cycles.append((vm, im, LinearCycle.proper([h.edges[i] for i in seq])))
    for i, e in enumerate(h.edges):
        cycles.append((_vmask(e), 1 << i, LinearCycle.single_edge(e)))
    for v in range(n):
        cycles.append((1 << v, 0, LinearCycle.single_vertex(v)))

    per_vertex: list[list[int]] = [[] for _ in range(n)]
    for ci, (vm, _, _) in enumerate(cycles):
        for v in _bits(vm):
            per_vertex[v].append(ci)
    full = (1 << n) - 1
    max_span = max(vm.bit_count() for vm, _, _ in cycles)

    def attempt(k: int, covered: int, used_edges: int, chosen: list[int]) -> list[int] | None:
        tr.tick()
        if covered == full:
            return list(chosen)
        left = k - len(chosen)
        missing = (full & ~covered).bit_count()
        if left * max_span < missing:
            return None
        v = (full & ~covered)
        v = (v & -v).bit_length() - 1  # lowest uncovered vertex
        for ci in per_vertex[v]:
            vm, im, _ = cycles[ci]
            if im & used_edges:
                continue
            chosen.append(ci)
            res = attempt(k, covered | vm, used_edges | im, chosen)
            if res is not None:
                return res
            chosen.pop()
        return None

    for k in range(1, n + 1):
        res = attempt(k, 0, 0, [])
        if res is not None:
            return len(res), [cycles[ci][2] for ci in res]
    raise AssertionError("singleton cycles always cover")  # pragma: no cover

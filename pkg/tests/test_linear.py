import random
from itertools import combinations

import pytest

from lincover.linear import (
    CycleViolation,
    LinearCycle,
    LinearPath,
    PathViolation,
    initial_segment,
    orient_path,
    path_endpoints,
    validate_cycle,
    validate_path,
)

from oracles import is_linear_cycle_seq, is_linear_path_seq


def test_validate_path_accepts_chain():
    p = validate_path([(0, 1, 2), (2, 3, 4)])
    assert isinstance(p, LinearPath)
    assert p.connectors() == (2,)


def test_validate_path_rejects_fat_intersection():
    v = validate_path([(0, 1, 2), (1, 2, 3)])
    assert isinstance(v, PathViolation)
    assert v.kind == "consecutive" and (v.i, v.j) == (0, 1)


def test_validate_path_rejects_nonconsecutive_overlap():
    v = validate_path([(0, 1, 2), (2, 3, 4), (4, 5, 0)])
    assert isinstance(v, PathViolation)
    assert v.kind == "nonconsecutive" and (v.i, v.j) == (0, 2)


def test_validate_path_empty():
    assert isinstance(validate_path([]), PathViolation)


def test_validate_cycle_proper_triple():
    c = validate_cycle([(0, 1, 2), (2, 3, 4), (4, 5, 0)])
    assert isinstance(c, LinearCycle) and c.kind == "cycle"


def test_validate_cycle_graph_triangle():
    c = validate_cycle([(0, 1), (1, 2), (0, 2)])
    assert isinstance(c, LinearCycle) and c.kind == "cycle"


def test_validate_cycle_single_edge_degenerate():
    c = validate_cycle([(0, 1, 2)])
    assert isinstance(c, LinearCycle) and c.kind == "edge"


def test_length_two_cyclic_sequences_always_rejected():
    # A proper cycle consumes two distinct connector vertices per edge, but
    # two distinct edges have a single fixed intersection set.  Exhaust all
    # two-edge configurations over a small universe: none may pass, and
    # none offers two distinct one-vertex cyclic intersections.
    universe = range(5)
    edges = [tuple(c) for k in (2, 3) for c in combinations(universe, k)]
    for e1 in edges:
        for e2 in edges:
            if e1 == e2:
                continue
            shared = set(e1) & set(e2)
            distinct_connector_choices = [
                (a, b) for a in shared for b in shared if a != b
            ]
            if len(shared) == 1:
                assert not distinct_connector_choices
            v = validate_cycle([e1, e2])
            assert isinstance(v, CycleViolation) and v.kind == "length"


def test_three_edges_through_one_vertex_is_a_cycle():
    # Length-3 cyclic sequences have no nonconsecutive pairs, so three
    # edges meeting pairwise in exactly one common vertex qualify.
    c = validate_cycle([(0, 1, 2), (0, 3, 4), (0, 5, 6)])
    assert isinstance(c, LinearCycle) and c.kind == "cycle"
    # ...but pairwise intersections of size two still fail.
    v = validate_cycle([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    assert isinstance(v, CycleViolation) and v.kind == "consecutive"


def _ring_cycle(rng: random.Random, L: int):
    """A valid proper cycle: connectors 0..L-1 in a ring plus fresh middles."""
    edges = []
    fresh = L
    for i in range(L):
        edge = [i, (i + 1) % L]
        if rng.random() < 0.5:
            edge.append(fresh)
            fresh += 1
        edges.append(tuple(sorted(edge)))
    return edges


def test_cycle_rotations_and_reversal_accepted():
    rng = random.Random(7)
    for _ in range(50):
        L = rng.randrange(3, 7)
        edges = _ring_cycle(rng, L)
        assert isinstance(validate_cycle(edges), LinearCycle)
        for r in range(L):
            rotated = edges[r:] + edges[:r]
            assert isinstance(validate_cycle(rotated), LinearCycle)
            assert isinstance(validate_cycle(rotated[::-1]), LinearCycle)
        for k in range(L):
            # dropping any one edge of an accepted cycle leaves a path
            remaining = edges[k + 1 :] + edges[:k]
            assert isinstance(validate_path(remaining), LinearPath)


def test_contiguous_subsequences_of_paths_validate():
    rng = random.Random(11)
    for _ in range(40):
        L = rng.randrange(1, 6)
        edges = []
        nxt = 0
        for i in range(L):
            size = rng.choice((2, 3))
            edge = list(range(nxt, nxt + size))
            nxt += size - 1
            edges.append(tuple(edge))
        assert is_linear_path_seq(edges)
        p = validate_path(edges)
        assert isinstance(p, LinearPath)
        for a in range(L):
            for b in range(a + 1, L + 1):
                assert isinstance(validate_path(edges[a:b]), LinearPath)


def test_orient_path_canonical_labels():
    p = validate_path([(0, 1, 2), (2, 3, 4)])
    op = orient_path(p, 0)
    assert op.v0 == 0
    assert op.spine == (0, 2, 3)
    assert op.off == (1, 4)
    assert op.marked_pairs() == ((1, 2), (3, 4))


def test_orient_path_single_2_edge():
    p = validate_path([(0, 1)])
    op = orient_path(p, 0)
    assert op.spine == (0, 1) and op.off == (None,)
    op = orient_path(p, 1)
    assert op.spine == (1, 0)


def test_orient_path_single_3_edge_any_start():
    p = validate_path([(3, 5, 7)])
    assert path_endpoints(p) == (3, 5, 7)
    op = orient_path(p, 5)
    assert op.v0 == 5
    assert op.spine == (5, 3) and op.off == (7,)


def test_orient_path_reversal_swaps_roles():
    p = validate_path([(0, 1, 2), (2, 3, 4)])
    assert path_endpoints(p) == (0, 1, 3, 4)
    op = orient_path(p, 3)
    assert op.path.edges == ((2, 3, 4), (0, 1, 2))
    assert op.spine == (3, 2, 0)
    assert op.off == (4, 1)


def test_orient_path_rejects_non_endpoint():
    p = validate_path([(0, 1, 2), (2, 3, 4)])
    with pytest.raises(ValueError):
        orient_path(p, 2)


def test_orientation_reconstructs_edges():
    rng = random.Random(3)
    for _ in range(60):
        L = rng.randrange(1, 6)
        edges = []
        nxt = 0
        for _i in range(L):
            size = rng.choice((2, 3))
            edges.append(tuple(range(nxt, nxt + size)))
            nxt += size - 1
        p = validate_path(edges)
        assert isinstance(p, LinearPath)
        for start in path_endpoints(p):
            op = orient_path(p, start)
            rebuilt = []
            for i, e in enumerate(op.path.edges):
                vs = {op.spine[i], op.spine[i + 1]}
                if op.off[i] is not None:
                    vs.add(op.off[i])
                rebuilt.append(tuple(sorted(vs)))
            assert tuple(rebuilt) == op.path.edges


def test_initial_segment():
    p = orient_path(validate_path([(0, 1, 2), (2, 3, 4), (4, 5, 6)]), 0)
    assert initial_segment(p, 0).edges == ((0, 1, 2),)
    assert initial_segment(p, 1).edges == ((0, 1, 2), (2, 3, 4))
    assert initial_segment(p, 2) == p.path
    with pytest.raises(ValueError):
        initial_segment(p, 3)


def test_cycle_json_round_trip():
    cases = [
        LinearCycle.single_vertex(3),
        LinearCycle.single_edge((0, 1, 2)),
        LinearCycle.proper([(0, 1), (1, 2), (0, 2)]),
    ]
    for c in cases:
        assert LinearCycle.from_json_obj(c.to_json_obj()) == c
    assert cases[0].to_json_obj() == {"kind": "vertex", "v": 3}
    assert cases[1].to_json_obj() == {"kind": "edge", "e": [0, 1, 2]}
    assert cases[2].to_json_obj() == {
        "kind": "cycle",
        "edges": [[0, 1], [1, 2], [0, 2]],
    }


def test_validators_agree_with_direct_definitions():
    rng = random.Random(99)
    universe = list(range(7))
    pool = [tuple(c) for k in (2, 3) for c in combinations(universe, k)]
    for _ in range(400):
        seq = [rng.choice(pool) for _ in range(rng.randrange(1, 5))]
        assert isinstance(validate_path(seq), LinearPath) == is_linear_path_seq(seq)
        got = validate_cycle(seq)
        if len(seq) == 1:
            assert isinstance(got, LinearCycle)
        else:
            assert isinstance(got, LinearCycle) == is_linear_cycle_seq(seq)

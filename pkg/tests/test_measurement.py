"""Measurement rewrite rules, byproducts, and sequence threading."""

import random
from fractions import Fraction

import numpy as np
import pytest

from graphstates import oracle
from graphstates.graphs import (
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
    random_connected_graph,
    star_graph,
    to_graph6,
    two_coloring,
)
from graphstates.measurement import (
    ZeroProbabilityOutcome,
    apply_sequence,
    measure_pauli,
    measure_via_lc,
    sequence_transcript,
)
from graphstates.orbits import lc_equivalent


def test_z_at_path_middle():
    out = measure_pauli(path_graph(3), 1, "z")
    assert out.graph_after.rows == (0, 0)
    assert out.prob_plus == Fraction(1, 2)
    assert out.byproduct_plus.is_identity()
    assert str(out.byproduct_minus) == "Z@0 Z@1"


def test_y_disentangles_complete_graphs():
    for n in range(3, 7):
        for a in range(n):
            out = measure_pauli(complete_graph(n), a, "y")
            assert out.graph_after.edge_count == 0


def test_x_at_path_leaf_gives_empty_graph():
    # frozen from the dense oracle (see cross-check below): projecting x on a
    # leaf of the 3-path leaves a product state, i.e. an edgeless graph
    out = measure_pauli(path_graph(3), 0, "x")
    assert out.chosen_b0 == 1
    assert out.graph_after.rows == (0, 0)
    state = oracle.graph_state(path_graph(3))
    prob, post = oracle.apply_projector(state, 0, "x", 1)
    ref = oracle.graph_state(out.graph_after)
    ref = oracle.apply_local_clifford(ref, out.byproduct_plus)
    ref = oracle.insert_qubit(ref, 0, oracle.basis_eigenvector("x", 1))
    assert oracle.equal_up_to_global_phase(post, ref)


def test_x_at_isolated_vertex_is_deterministic():
    g = from_edges(3, [(1, 2)])
    out = measure_pauli(g, 0, "x")
    assert out.prob_plus == 1
    assert out.graph_after.rows == g.rows
    assert out.chosen_b0 is None
    assert out.byproduct_plus.is_identity()


def test_invalid_b0_rejected():
    with pytest.raises(ValueError):
        measure_pauli(path_graph(4), 0, "x", b0=2)
    with pytest.raises(ValueError):
        measure_pauli(path_graph(4), 0, "w")


def test_via_lc_matches_rule_exhaustively(connected_classes):
    for n, classes in connected_classes.items():
        for g in classes:
            for a in range(n):
                for basis in ("x", "y", "z"):
                    lhs = measure_via_lc(g, a, basis)
                    rhs = measure_pauli(g, a, basis).graph_after
                    assert lhs.rows == rhs.rows, (to_graph6(g), a, basis)


def test_special_neighbor_choice_is_immaterial_up_to_lc():
    rng = random.Random(15)
    checked = 0
    while checked < 30:
        g = random_connected_graph(rng, rng.randrange(3, 8))
        a = rng.randrange(g.n)
        nb = [b for b in range(g.n) if g.has_edge(a, b)]
        if len(nb) < 2:
            continue
        b0a, b0b = rng.sample(nb, 2)
        h1 = measure_pauli(g, a, "x", b0a).graph_after
        h2 = measure_pauli(g, a, "x", b0b).graph_after
        assert lc_equivalent(h1, h2)
        checked += 1


def test_z_and_x_preserve_two_colorability():
    rng = random.Random(16)
    checked = 0
    while checked < 60:
        g = random_connected_graph(rng, rng.randrange(3, 9))
        if two_coloring(g) is None:
            continue
        a = rng.randrange(g.n)
        assert two_coloring(measure_via_lc(g, a, "z")) is not None
        assert two_coloring(measure_via_lc(g, a, "x")) is not None
        checked += 1


def test_y_can_break_two_colorability():
    # measuring y on a 6-ring lands on a 5-ring
    h = measure_via_lc(cycle_graph(6), 0, "y")
    assert two_coloring(h) is None


def test_empty_sequence():
    g = cycle_graph(4)
    final, byp, prob = apply_sequence(g, [])
    assert final.rows == g.rows and byp.is_identity() and prob == 1


def test_cover_sequence_disentangles():
    g = cycle_graph(6)
    steps = [(0, "z", 1), (2, "z", -1), (4, "z", 1)]
    final, _, prob = apply_sequence(g, steps)
    assert final.edge_count == 0
    assert prob == Fraction(1, 8)


def test_sequence_rejects_repeats():
    with pytest.raises(ValueError):
        apply_sequence(path_graph(3), [(0, "z", 1), (0, "z", 1)])


def test_threading_turns_z_into_x_after_x():
    # an x measurement leaves a quarter Y-turn on its special neighbor, so a
    # later z there acts like an x on the rewritten graph
    p4 = path_graph(4)
    first = measure_pauli(p4, 0, "x")  # b0 = 1
    threaded, _, _ = apply_sequence(p4, [(0, "x", 1), (1, "z", 1)])
    manual = measure_via_lc(first.graph_after, 0, "x")  # old vertex 1 is now 0
    assert threaded.rows == manual.rows


def test_sequence_matches_dense_projections():
    rng = random.Random(17)
    done = 0
    while done < 25:
        n = rng.randrange(3, 8)
        g = random_connected_graph(rng, n)
        verts = rng.sample(range(n), rng.randrange(1, n))
        steps = [(v, rng.choice("xyz"), rng.choice((1, -1))) for v in verts]
        try:
            final, byp, p = apply_sequence(g, steps)
        except ZeroProbabilityOutcome:
            continue
        if final.n != n - len(verts):
            continue  # a step hit an isolated vertex in the x basis
        state = oracle.graph_state(g)
        prob = 1.0
        for v, basis, sign in steps:
            step_p, state = oracle.apply_projector(state, v, basis, sign)
            prob *= step_p
        assert abs(prob - float(p)) < 1e-12
        ref = oracle.graph_state(final)
        ref = oracle.apply_local_clifford(ref, byp)
        rho = oracle.reduced_density(state, sorted(verts))
        assert np.max(np.abs(rho - np.outer(ref, ref.conj()))) < 1e-9
        done += 1


def test_zero_probability_outcome_raises():
    g = from_edges(1, [])
    with pytest.raises(ZeroProbabilityOutcome):
        apply_sequence(g, [(0, "x", -1)])


def test_transcript_fields():
    rec = sequence_transcript(star_graph(4), [(0, "z", -1)])
    assert rec == [{
        "vertex": 0,
        "basis": "z",
        "outcome": -1,
        "graph6_after": to_graph6(from_edges(3, [])),
        "byproduct": "Z@0 Z@1 Z@2",
    }]

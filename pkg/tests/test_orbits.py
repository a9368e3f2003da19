"""Orbit enumeration, equivalence testing, and the classification quotient."""

import itertools
import json
import random

import pytest

from graphstates import orbits
from graphstates.graphs import (
    CapExceeded,
    canonical_form,
    complete_graph,
    cycle_graph,
    from_edges,
    local_complement,
    parse_graph6,
    path_graph,
    random_connected_graph,
    relabel,
    star_graph,
    to_graph6,
    two_coloring,
)


def test_single_edge_orbit_is_trivial():
    orb = orbits.lc_orbit(from_edges(2, [(0, 1)]))
    assert len(orb) == 1


def test_star_orbits_have_m_plus_one_members():
    for m in range(3, 9):
        orb = orbits.lc_orbit(star_graph(m))
        assert len(orb) == m + 1
        kinds = {g.edge_count for g in orb}
        assert kinds == {m - 1, m * (m - 1) // 2}  # m stars and one complete graph


def test_five_ring_orbit_has_three_shapes():
    orb = orbits.lc_orbit(cycle_graph(5))
    shapes = {canonical_form(g)[0].rows for g in orb}
    assert len(shapes) == 3


def test_closure_with_relabelings_of_five_ring():
    closure = orbits.lc_closure_with_relabelings(cycle_graph(5))
    assert len(closure) == 132
    shapes = {canonical_form(g)[0].rows for g in closure}
    assert len(shapes) == 3
    assert all(two_coloring(g) is None for g in closure)


def test_orbit_limit_raises():
    with pytest.raises(CapExceeded):
        orbits.lc_orbit(cycle_graph(7), limit=10)


def test_lc_equivalent_basics():
    star = star_graph(5)
    assert orbits.lc_equivalent(star, complete_graph(5))
    assert orbits.lc_equivalent(star, star)
    assert not orbits.lc_equivalent(path_graph(4), star_graph(4))
    with pytest.raises(ValueError):
        orbits.lc_equivalent(star_graph(4), star_graph(5))


def test_lc_equivalence_is_symmetric_and_respects_moves():
    rng = random.Random(26)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randrange(3, 7))
        a = rng.randrange(g.n)
        h = local_complement(g, a)
        assert orbits.lc_equivalent(g, h)
        assert orbits.lc_equivalent(h, g)


def test_rank_list_is_constant_on_orbits():
    rng = random.Random(27)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randrange(2, 8))
        ref = orbits.schmidt_rank_list(g)
        for a in range(g.n):
            assert orbits.schmidt_rank_list(local_complement(g, a)) == ref


def test_disjoint_orbits_of_one_class_have_different_rank_lists():
    # two labelings of the 4-path that no complementation sequence connects:
    # same fingerprint (they are isomorphic) but different labeled rank lists
    base = path_graph(4)
    orb = {g.rows for g in orbits.lc_orbit(base)}
    other = None
    for perm in itertools.permutations(range(4)):
        cand = relabel(base, perm)
        if cand.rows not in orb:
            other = cand
            break
    assert other is not None
    assert not orbits.lc_equivalent(base, other)
    assert orbits.schmidt_rank_list(base) != orbits.schmidt_rank_list(other)
    assert orbits.rank_list_fingerprint(base) == orbits.rank_list_fingerprint(other)


def test_fingerprint_is_isomorphism_invariant():
    rng = random.Random(28)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randrange(2, 8))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert orbits.rank_list_fingerprint(g) == \
            orbits.rank_list_fingerprint(relabel(g, perm))


def test_classify_two_vertices():
    records = orbits.classify(2)
    assert len(records) == 1
    rec = records[0]
    assert rec.member_count == 1 and rec.lower == rec.upper == 1


def test_classify_four_vertices():
    records = orbits.classify(4)
    assert [r.member_count for r in records] == [1, 2, 2, 4]
    assert [r.n_vertices for r in records] == [2, 3, 4, 4]
    assert [r.n_edges for r in records] == [1, 2, 3, 3]
    assert [(r.lower, r.upper) for r in records] == [(1, 1), (1, 1), (1, 1), (2, 2)]
    assert records[2].ri_2 == (0, 3)
    assert records[3].ri_2 == (2, 1)
    assert all(r.has_two_colorable_member for r in records)


def test_classify_six_vertices_has_nineteen_classes():
    records = orbits.classify(6)
    assert len(records) == 19
    assert sum(r.member_count for r in records) == 1 + 2 + 6 + 21 + 112


def test_classify_rejects_oversized_cap():
    with pytest.raises(CapExceeded):
        orbits.classify(9)


def test_records_render_csv_json_dot():
    records = orbits.classify(3)
    csv_text = orbits.records_to_csv(records)
    lines = csv_text.strip().splitlines()
    assert lines[0] == orbits.CSV_HEADER
    assert len(lines) == 3
    data = json.loads(orbits.records_to_json(records))
    assert [d["no"] for d in data] == [1, 2]
    for d in data:
        g = parse_graph6(d["representative"])
        assert g.n == d["n_vertices"]
    dot = orbits.representatives_dot(records)
    assert dot.startswith("graph classes {")
    assert "cluster_1" in dot and "--" in dot


def test_classify_is_stable_under_worker_count():
    assert orbits.classify(5, jobs=2) == orbits.classify(5, jobs=1)


def test_member_stats_cover_all_classes(classification7):
    records, members = classification7
    assert sum(r.member_count for r in records) == len(members) == 995
    # the member keyed by each representative exists and agrees on basics
    for rec in records:
        stat = members[rec.representative]
        assert stat.n == rec.n_vertices
        assert stat.lower == rec.lower
        assert stat.edges == rec.n_edges

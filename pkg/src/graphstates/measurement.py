"""Graph rewrite rules for single-qubit Pauli measurements on graph states.

Measuring x, y, or z at a vertex maps a graph state to another graph state up
to a local Clifford byproduct on the remaining vertices.  Both outcomes give
the same rewritten graph; only the byproduct differs.  For measurement
sequences the accumulated byproduct re-interprets each requested basis before
the graph rule is applied.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, bits_of, delete_vertex, local_complement, to_graph6
from .stabilizer import (
    CL_I,
    CL_SQRT_IY,
    CL_SQRT_IZ,
    CL_SQRT_MIY,
    CL_SQRT_MIZ,
    CL_Z,
    CLIFFORD_COMPOSE,
    CLIFFORD_INVERSE,
    LocalClifford,
    clifford_axis_image,
    identity_clifford,
)

BASES = ("x", "y", "z")


class ZeroProbabilityOutcome(ValueError):
    """The requested measurement outcome occurs with probability zero."""


@dataclass(frozen=True)
class MeasurementOutcome:
    """Result of one Pauli measurement.

    graph_after uses post-deletion labels (vertices above the measured one
    shift down by one); the byproducts are indexed the same way.  prob_plus
    is 1 only for an x-measurement at an isolated vertex, in which case the
    graph is returned unchanged (vertex included) and the minus branch is
    unreachable.
    """

    graph_after: Graph
    byproduct_plus: LocalClifford
    byproduct_minus: LocalClifford
    prob_plus: Fraction
    chosen_b0: int | None


def _check_basis(basis: str) -> None:
    if basis not in BASES:
        raise ValueError(f"basis must be one of {BASES}, got {basis!r}")


def _pairs_between(a_mask: int, b_mask: int) -> set[tuple[int, int]]:
    """All unordered vertex pairs with one end in each mask (masks may overlap)."""
    pairs = set()
    for u in bits_of(a_mask):
        for v in bits_of(b_mask & ~(1 << u)):
            pairs.add((min(u, v), max(u, v)))
    return pairs


def _pairs_within(mask: int) -> set[tuple[int, int]]:
    return set(combinations(list(bits_of(mask)), 2))


def _toggle_pairs(g: Graph, pairs) -> Graph:
    rows = list(g.rows)
    for u, v in pairs:
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows))


def _shift_down(assignments: dict[int, int], removed: int) -> dict[int, int]:
    return {(v - 1 if v > removed else v): c for v, c in assignments.items()
            if v != removed}


def _default_b0(g: Graph, a: int, b0: int | None) -> int:
    nb = g.rows[a]
    if b0 is None:
        return next(bits_of(nb))
    g._check_vertex(b0)
    if not (nb >> b0) & 1:
        raise ValueError(f"b0={b0} is not a neighbor of {a}")
    return b0


def measure_pauli(g: Graph, a: int, basis: str, b0: int | None = None) -> MeasurementOutcome:
    """Rewrite rule for measuring the given Pauli at vertex a.

    For basis x at a non-isolated vertex a special neighbor b0 is required
    (default: the minimum-index neighbor); any choice gives locally
    equivalent results.
    """
    _check_basis(basis)
    g._check_vertex(a)
    nb = g.rows[a]

    if basis == "x" and nb == 0:
        ident = identity_clifford(g.n)
        return MeasurementOutcome(g, ident, ident, Fraction(1), None)

    chosen = None
    if basis == "z":
        after_full = g
        plus: dict[int, int] = {}
        minus = {b: CL_Z for b in bits_of(nb)}
    elif basis == "y":
        after_full = _toggle_pairs(g, _pairs_within(nb))
        plus = {b: CL_SQRT_MIZ for b in bits_of(nb)}
        minus = {b: CL_SQRT_IZ for b in bits_of(nb)}
    else:
        chosen = _default_b0(g, a, b0)
        nb0 = g.rows[chosen]
        pairs = _pairs_between(nb0, nb)
        pairs ^= _pairs_within(nb0 & nb)
        pairs ^= _pairs_between(1 << chosen, nb & ~(1 << chosen))
        after_full = _toggle_pairs(g, pairs)
        plus = {b: CL_Z for b in bits_of(nb & ~nb0 & ~(1 << chosen))}
        plus[chosen] = CL_SQRT_IY
        minus = {b: CL_Z for b in bits_of(nb0 & ~nb & ~(1 << a))}
        minus[chosen] = CL_SQRT_MIY

    after = delete_vertex(after_full, a)
    n_out = after.n
    bp_plus = _as_clifford(n_out, _shift_down(plus, a))
    bp_minus = _as_clifford(n_out, _shift_down(minus, a))
    return MeasurementOutcome(after, bp_plus, bp_minus, Fraction(1, 2), chosen)


def _as_clifford(n: int, assignments: dict[int, int]) -> LocalClifford:
    idx = [CL_I] * n
    for v, c in assignments.items():
        idx[v] = c
    return LocalClifford(tuple(idx))


def measure_via_lc(g: Graph, a: int, basis: str, b0: int | None = None) -> Graph:
    """Same rewritten graph as measure_pauli, built from local complementations:
    z deletes, y complements then deletes, x conjugates by a complementation
    at b0 on both sides of a y-style step."""
    _check_basis(basis)
    g._check_vertex(a)
    if basis == "z":
        return delete_vertex(g, a)
    if basis == "y":
        return delete_vertex(local_complement(g, a), a)
    if g.rows[a] == 0:
        return g
    chosen = _default_b0(g, a, b0)
    h = local_complement(g, chosen)
    h = delete_vertex(local_complement(h, a), a)
    b0_new = chosen - 1 if chosen > a else chosen
    return local_complement(h, b0_new)


def conjugate_basis(clifford_idx: int, basis: str, sign: int) -> tuple[str, int]:
    """Commute a projector past a single-qubit Clifford U:

        P(basis, sign) U = U P(basis', sign')

    and return (basis', sign')."""
    _check_basis(basis)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    axis = "xyz".index(basis)
    axis2, s2 = clifford_axis_image(CLIFFORD_INVERSE[clifford_idx], axis)
    return "xyz"[axis2], sign * s2


def _run_sequence(g: Graph, steps):
    """Thread measurements through accumulated byproducts; yields one record
    per step: (orig_vertex, basis, sign, graph, byproduct_indices, prob)."""
    current = g
    orig_to_cur = {v: v for v in range(g.n)}
    byp = [CL_I] * g.n
    prob = Fraction(1)
    for vertex, basis, sign in steps:
        _check_basis(basis)
        if sign not in (1, -1):
            raise ValueError("outcome must be +1 or -1")
        if vertex not in orig_to_cur:
            raise ValueError(f"vertex {vertex} already measured or out of range")
        v = orig_to_cur[vertex]
        basis_eff, sign_eff = conjugate_basis(byp[v], basis, sign)
        if basis_eff == "x" and current.rows[v] == 0:
            if sign_eff < 0:
                raise ZeroProbabilityOutcome(
                    f"outcome {sign:+d} for {basis} at vertex {vertex} cannot occur")
            del orig_to_cur[vertex]
            yield vertex, basis, sign, current, tuple(byp), prob
            continue
        out = measure_pauli(current, v, basis_eff)
        w = out.byproduct_plus if sign_eff > 0 else out.byproduct_minus
        rest = byp[:v] + byp[v + 1:]
        byp = [CLIFFORD_COMPOSE[u][wi] for u, wi in zip(rest, w.indices)]
        current = out.graph_after
        del orig_to_cur[vertex]
        for k in list(orig_to_cur):
            if orig_to_cur[k] > v:
                orig_to_cur[k] -= 1
        prob *= Fraction(1, 2)
        yield vertex, basis, sign, current, tuple(byp), prob


def apply_sequence(g: Graph, steps) -> tuple[Graph, LocalClifford, Fraction]:
    """Apply measurements (vertex, basis, outcome) in order.

    Vertices are labels of the *input* graph; each may be measured once.
    Returns the final graph, the total byproduct on its vertices, and the
    probability of the requested outcome string.
    """
    current, byp, prob = g, tuple([CL_I] * g.n), Fraction(1)
    for _, _, _, current, byp, prob in _run_sequence(g, steps):
        pass
    return current, LocalClifford(byp), prob


def sequence_transcript(g: Graph, steps) -> list[dict]:
    """One JSON-ready record per step."""
    out = []
    for vertex, basis, sign, graph, byp, _ in _run_sequence(g, steps):
        out.append({
            "vertex": vertex,
            "basis": basis,
            "outcome": sign,
            "graph6_after": to_graph6(graph),
            "byproduct": str(LocalClifford(byp)),
        })
    return out


def sequence_transcript_json(g: Graph, steps) -> str:
    return json.dumps(sequence_transcript(g, steps), indent=2)

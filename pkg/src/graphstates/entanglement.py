"""Schmidt-rank computations and entanglement bounds for graph states.

The Schmidt rank across a bipartition (A, B) equals the GF(2) rank of the
cross block of the adjacency matrix.  The maximum over all bipartitions lower
bounds the Schmidt measure; the minimal number of single-qubit Pauli
measurements that disentangles the state (found by iterative-deepening search
over the graph rewrite rules) upper bounds it, and is itself at most the
minimum vertex cover size.  All ranks are base-2 logarithms, i.e. plain
GF(2) ranks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gf2 import gf2_rank_of_rows
from .graphs import (
    CapExceeded,
    Graph,
    as_mask,
    bits_of,
    connected_components,
    greedy_vertex_cover,
    is_connected,
    min_vertex_cover,
    two_coloring,
)
from .measurement import measure_via_lc

DEFAULT_SCAN_CAP = 20
DEFAULT_SEARCH_CAP = 7


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    upper: int
    cover_size: int
    tight: bool


@dataclass(frozen=True)
class RankIndex:
    """Histogram of ranks over the bipartitions with smaller side k.

    counts[0] is the number of splits with rank k, counts[1] with rank k-1,
    down to counts[k-1] with rank 1.
    """

    k: int
    counts: tuple[int, ...]


def _check_bipartition(g: Graph, a_mask: int) -> None:
    if a_mask == 0 or a_mask == g.vertex_mask():
        raise ValueError("bipartition needs a nonempty proper vertex subset")


def _cross_rank(g: Graph, a_mask: int) -> int:
    b_mask = g.vertex_mask() & ~a_mask
    rows = [g.rows[v] & b_mask for v in bits_of(a_mask)]
    return gf2_rank_of_rows(rows, g.n)


def schmidt_rank(g: Graph, subset) -> int:
    """GF(2) rank of the adjacency block between the subset and its complement."""
    a_mask = as_mask(g, subset)
    _check_bipartition(g, a_mask)
    return _cross_rank(g, a_mask)


def rank_index(g: Graph, k: int) -> RankIndex:
    """Rank histogram over all unordered bipartitions with smaller side k."""
    if k not in (2, 3):
        raise ValueError("rank indices are tabulated for k = 2 or 3")
    if k > g.n // 2:
        raise ValueError(f"k={k} exceeds floor(n/2) for n={g.n}")
    if not is_connected(g):
        raise ValueError("rank_index expects a connected graph")
    counts = [0] * k
    for combo in itertools.combinations(range(g.n), k):
        if 2 * k == g.n and combo[0] != 0:
            continue  # halves pair up; count each unordered split once
        a_mask = 0
        for v in combo:
            a_mask |= 1 << v
        r = _cross_rank(g, a_mask)
        counts[k - r] += 1
    return RankIndex(k, tuple(counts))


def lower_bound_max_rank(g: Graph, cap: int = DEFAULT_SCAN_CAP) -> int:
    """Maximum Schmidt rank over all bipartitions."""
    if g.n > cap:
        raise CapExceeded(f"bipartition scan capped at n<={cap}, got n={g.n}")
    if g.n < 2:
        return 0
    best = 0
    ceiling = g.n // 2
    for m in range(1 << (g.n - 1)):
        a_mask = (m << 1) | 1
        if a_mask == g.vertex_mask():
            continue
        r = _cross_rank(g, a_mask)
        if r > best:
            best = r
            if best == ceiling:
                break
    return best


def _components_with_edges(g: Graph) -> int:
    return sum(1 for comp in connected_components(g)
               if any(g.rows[v] for v in bits_of(comp)))


def _can_disentangle(g: Graph, budget: int, memo: dict) -> bool:
    if all(r == 0 for r in g.rows):
        return True
    if budget <= 0:
        return False
    if greedy_vertex_cover(g).bit_count() <= budget:
        return True
    if _components_with_edges(g) > budget:
        return False
    key = (g.rows, budget)
    hit = memo.get(key)
    if hit is not None:
        return hit
    result = False
    for v in range(g.n):
        if g.rows[v] == 0:
            continue
        for basis in ("z", "y", "x"):
            if _can_disentangle(measure_via_lc(g, v, basis), budget - 1, memo):
                result = True
                break
        if result:
            break
    memo[key] = result
    return result


def _bounds_parts(g: Graph, search_cap: int, depth_limit: int | None) -> tuple[int, int, int]:
    """(lower, upper, cover_size); upper is the exact Pauli persistency unless
    depth_limit cut the search short, in which case it is still a valid upper
    bound (the cover size)."""
    lower = lower_bound_max_rank(g)
    cover = min_vertex_cover(g).bit_count()
    if lower == cover:
        return lower, lower, cover
    if g.n > search_cap:
        raise CapExceeded(
            f"persistency search capped at n<={search_cap}, got n={g.n}")
    memo: dict = {}
    top = cover if depth_limit is None else min(cover, depth_limit + 1)
    for depth in range(lower, top):
        if _can_disentangle(g, depth, memo):
            return lower, depth, cover
    return lower, cover, cover


def pauli_persistency(g: Graph, search_cap: int = DEFAULT_SEARCH_CAP,
                      depth_limit: int | None = None) -> int:
    """Minimal number of single-qubit Pauli measurements that disentangles the
    graph state (graph rules, minimum-index special neighbor for x).

    When the lower bound already meets the minimum vertex cover size no search
    is needed at any n; otherwise n must be within search_cap.
    """
    return _bounds_parts(g, search_cap, depth_limit)[1]


def bounds(g: Graph, search_cap: int = DEFAULT_SEARCH_CAP,
           depth_limit: int | None = None) -> BoundsReport:
    lower, upper, cover = _bounds_parts(g, search_cap, depth_limit)
    return BoundsReport(lower, upper, cover, lower == upper)


def max_rank_criterion(g: Graph, subset) -> bool:
    """Sufficient test for a bipartition to reach the maximal Schmidt rank
    min(|A|, |B|).

    Component-wise on the cross subgraph: every component must be acyclic and
    have at most one leaf in its smaller side, which forces that component's
    cross block to full rank min(|A and C|, |B and C|); those per-component
    maxima must additionally add up to min(|A|, |B|) (isolated or lopsided
    components would otherwise leave rank on the table).
    """
    a_mask = as_mask(g, subset)
    _check_bipartition(g, a_mask)
    b_mask = g.vertex_mask() & ~a_mask
    cross_rows = tuple(
        (g.rows[v] & b_mask) if (a_mask >> v) & 1 else (g.rows[v] & a_mask)
        for v in range(g.n))
    cross = Graph(g.n, cross_rows)
    rank_sum = 0
    for comp in connected_components(cross):
        verts = list(bits_of(comp))
        edges = sum(cross.rows[v].bit_count() for v in verts) // 2
        if edges >= len(verts):
            return False  # a cycle
        in_a = (comp & a_mask).bit_count()
        in_b = (comp & b_mask).bit_count()
        if in_a < in_b:
            small_sides = (comp & a_mask,)
        elif in_b < in_a:
            small_sides = (comp & b_mask,)
        else:
            small_sides = (comp & a_mask, comp & b_mask)
        if not any(sum(1 for v in bits_of(side)
                       if cross.rows[v].bit_count() == 1) <= 1
                   for side in small_sides):
            return False
        rank_sum += min(in_a, in_b)
    return rank_sum == min(a_mask.bit_count(), b_mask.bit_count())


def two_colorable_bounds(g: Graph) -> tuple[int, int]:
    """(lower, upper) Schmidt-measure bounds special to 2-colorable graphs:
    half the adjacency rank, and the size of the smaller color class."""
    coloring = two_coloring(g)
    if coloring is None:
        raise ValueError("graph has an odd cycle, not 2-colorable")
    rank = gf2_rank_of_rows(g.rows, g.n)
    lower = (rank + 1) // 2
    upper = min(coloring[0].bit_count(), coloring[1].bit_count())
    return lower, upper


def bounds_record(g: Graph, search_cap: int = DEFAULT_SEARCH_CAP,
                  depth_limit: int | None = None) -> dict:
    """Flat record used for CSV/JSON rendering of a bounds query."""
    from .graphs import to_graph6

    rep = bounds(g, search_cap, depth_limit)
    record = {
        "graph6": to_graph6(g),
        "lower": rep.lower,
        "upper": rep.upper,
        "cover_size": rep.cover_size,
        "tight": rep.tight,
        "RI_2": rank_index(g, 2).counts if is_connected(g) and 2 <= g.n // 2 else None,
        "RI_3": rank_index(g, 3).counts if is_connected(g) and 3 <= g.n // 2 else None,
        "two_colorable": two_coloring(g) is not None,
    }
    return record

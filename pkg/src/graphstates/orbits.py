"""Local-complementation orbits and the classification of connected graphs
under local complementation plus isomorphism.

A labeled orbit is the closure of a graph under complementing vertex
neighborhoods.  Quotienting by canonical forms turns orbit membership into an
equivalence on isomorphism classes; the classifier computes that quotient for
all connected graphs up to a vertex cap, together with the invariants of each
class (Schmidt-rank extrema, rank indices, 2-colorability).
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .entanglement import _bounds_parts, _cross_rank, rank_index
from .graphs import (
    CapExceeded,
    Graph,
    bits_of,
    canonical_form,
    enumerate_connected,
    local_complement,
    parse_graph6,
    to_graph6,
    two_coloring,
)

ORBIT_LIMIT_DEFAULT = 10 ** 6
CLASSIFY_CAP = 8


def _lc_neighbor_rows(rows: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    out = []
    for a in range(n):
        nb = rows[a]
        if nb == 0 or (nb & (nb - 1)) == 0:
            continue  # degree <= 1 complements nothing
        new = list(rows)
        m = nb
        while m:
            low = m & -m
            new[low.bit_length() - 1] ^= nb ^ low
            m ^= low
        out.append(tuple(new))
    return out


def _orbit_rows(g: Graph, limit: int, target: tuple[int, ...] | None = None):
    """BFS closure under local complementation on raw adjacency tuples.

    With a target, returns True/False for membership (early exit); otherwise
    returns the full set of member row-tuples.
    """
    if target is not None and g.rows == target:
        return True
    seen = {g.rows}
    frontier = [g.rows]
    n = g.n
    while frontier:
        nxt = []
        for rows in frontier:
            for t in _lc_neighbor_rows(rows, n):
                if t in seen:
                    continue
                if target is not None and t == target:
                    return True
                seen.add(t)
                nxt.append(t)
                if len(seen) > limit:
                    raise CapExceeded(f"orbit exceeded {limit} members")
        frontier = nxt
    return False if target is not None else seen


def lc_orbit(g: Graph, limit: int = ORBIT_LIMIT_DEFAULT) -> list[Graph]:
    """All labeled graphs reachable by local complementations, sorted."""
    rows_set = _orbit_rows(g, limit)
    return [Graph(g.n, rows) for rows in sorted(rows_set)]


def _swap_labels(rows: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    out = list(rows)
    out[i], out[j] = out[j], out[i]
    for k, r in enumerate(out):
        bi = (r >> i) & 1
        bj = (r >> j) & 1
        if bi != bj:
            out[k] = r ^ ((1 << i) | (1 << j))
    return tuple(out)


def lc_closure_with_relabelings(g: Graph, limit: int = ORBIT_LIMIT_DEFAULT) -> list[Graph]:
    """Closure under local complementation *and* vertex permutations."""
    seen = {g.rows}
    frontier = [g.rows]
    n = g.n
    while frontier:
        nxt = []
        for rows in frontier:
            neighbors = _lc_neighbor_rows(rows, n)
            neighbors.extend(_swap_labels(rows, i, i + 1) for i in range(n - 1))
            for t in neighbors:
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
                    if len(seen) > limit:
                        raise CapExceeded(f"closure exceeded {limit} members")
        frontier = nxt
    return [Graph(g.n, rows) for rows in sorted(seen)]


def schmidt_rank_list(g: Graph, cap: int = 20) -> tuple[int, ...]:
    """Rank for every nonempty proper subset, indexed by subset mask - 1.

    Constant along a labeled orbit; two labelings of the same graph generally
    give different lists.
    """
    if g.n > cap:
        raise CapExceeded(f"rank list capped at n<={cap}, got n={g.n}")
    full = g.vertex_mask()
    return tuple(_cross_rank(g, m) for m in range(1, full))


def rank_list_fingerprint(g: Graph, cap: int = 20) -> tuple[tuple[int, int], ...]:
    """Sorted multiset of (smaller side size, rank) over unordered bipartitions;
    invariant under local complementation and relabeling."""
    if g.n > cap:
        raise CapExceeded(f"fingerprint capped at n<={cap}, got n={g.n}")
    out = []
    for m in range(1 << (g.n - 1)):
        a_mask = (m << 1) | 1
        if a_mask == g.vertex_mask():
            continue
        size = a_mask.bit_count()
        out.append((min(size, g.n - size), _cross_rank(g, a_mask)))
    return tuple(sorted(out))


def lc_equivalent(g: Graph, h: Graph, limit: int = ORBIT_LIMIT_DEFAULT) -> bool:
    """Whether two labeled graphs are related by local complementations."""
    if g.n != h.n:
        raise ValueError("graphs must share a vertex set")
    if g.rows == h.rows:
        return True
    if g.n <= 12 and schmidt_rank_list(g) != schmidt_rank_list(h):
        return False  # the rank list is orbit-constant
    return bool(_orbit_rows(g, limit, target=h.rows))


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class MemberStats:
    """Per-isomorphism-class data feeding a ClassRecord."""

    graph6: str
    n: int
    edges: int
    lower: int
    upper: int
    cover: int
    two_colorable: bool
    ri_2: tuple[int, ...] | None
    ri_3: tuple[int, ...] | None


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class under local complementation plus isomorphism."""

    class_id: int
    representative: str
    member_count: int
    n_vertices: int
    n_edges: int
    lower: int
    upper: int
    ri_3: tuple[int, ...] | None
    ri_2: tuple[int, ...] | None
    has_two_colorable_member: bool


def _member_stats(g: Graph, search_cap: int) -> MemberStats:
    lower, upper, cover = _bounds_parts(g, search_cap, None)
    return MemberStats(
        graph6=to_graph6(g),
        n=g.n,
        edges=g.edge_count,
        lower=lower,
        upper=upper,
        cover=cover,
        two_colorable=two_coloring(g) is not None,
        ri_2=rank_index(g, 2).counts if g.n >= 4 else None,
        ri_3=rank_index(g, 3).counts if g.n >= 6 else None,
    )


def _stats_worker(args: tuple[Graph, int]) -> MemberStats:
    return _member_stats(*args)


def classify_full(n_max: int, jobs: int = 1
                  ) -> tuple[list[ClassRecord], dict[str, MemberStats]]:
    """Classify all connected graphs with 2 <= n <= n_max.

    Returns the sorted class records and the per-member statistics keyed by
    canonical graph6 string.  Records sort by (vertices, minimum edges, lower,
    upper, rank indices) which makes tabulated orderings reproducible.
    """
    if n_max > CLASSIFY_CAP:
        raise CapExceeded(f"classification capped at n_max<={CLASSIFY_CAP}")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    search_cap = max(7, n_max)
    reps: list[Graph] = []
    for n in range(2, n_max + 1):
        reps.extend(enumerate_connected(n))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            computed = list(pool.map(_stats_worker,
                                     ((g, search_cap) for g in reps),
                                     chunksize=32))
        stats = dict(zip(reps, computed))
    else:
        stats = {g: _member_stats(g, search_cap) for g in reps}

    rep_set = set(reps)
    parent: dict[Graph, Graph] = {g: g for g in reps}

    def find(x: Graph) -> Graph:
        while parent[x] is not x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: Graph, y: Graph) -> None:
        rx, ry = find(x), find(y)
        if rx is not ry:
            parent[rx] = ry

    for g in reps:
        for a in range(g.n):
            image = canonical_form(local_complement(g, a))[0]
            if image not in rep_set:
                raise AssertionError("complementation left the enumerated classes")
            union(g, image)

    groups: dict[Graph, list[Graph]] = {}
    for g in reps:
        groups.setdefault(find(g), []).append(g)

    raw = []
    for members in groups.values():
        ms = sorted((stats[m] for m in members), key=lambda s: (s.edges, s.graph6))
        lowers = {s.lower for s in ms}
        if len(lowers) != 1:
            raise AssertionError("lower bound must be constant on a class")
        for field in ("ri_2", "ri_3"):
            vals = {getattr(s, field) for s in ms}
            if len(vals) != 1:
                raise AssertionError(f"{field} must be constant on a class")
        rep = ms[0]
        raw.append((
            rep.n,
            rep.edges,
            rep.lower,
            min(s.upper for s in ms),
            rep.ri_3 or (),
            rep.ri_2 or (),
            rep.graph6,
            len(ms),
            any(s.two_colorable for s in ms),
            rep.ri_3,
            rep.ri_2,
        ))
    raw.sort(key=lambda t: t[:7])

    records = []
    for i, (n, edges, lower, upper, _, _, rep_g6, count, twocol, ri3, ri2) in enumerate(raw, 1):
        records.append(ClassRecord(
            class_id=i,
            representative=rep_g6,
            member_count=count,
            n_vertices=n,
            n_edges=edges,
            lower=lower,
            upper=upper,
            ri_3=ri3,
            ri_2=ri2,
            has_two_colorable_member=twocol,
        ))
    member_map = {s.graph6: s for s in stats.values()}
    return records, member_map


def classify(n_max: int, jobs: int = 1) -> list[ClassRecord]:
    return classify_full(n_max, jobs)[0]


# ---------------------------------------------------------------------------
# renderings

def _ri_str(ri: tuple[int, ...] | None) -> str:
    return "(" + ",".join(str(c) for c in ri) + ")" if ri is not None else ""


CSV_HEADER = "no,class_size,n_vertices,n_edges,lower,upper,RI_3,RI_2,two_colorable"


def records_to_csv(records) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(",".join([
            str(r.class_id),
            str(r.member_count),
            str(r.n_vertices),
            str(r.n_edges),
            str(r.lower),
            str(r.upper),
            f'"{_ri_str(r.ri_3)}"',
            f'"{_ri_str(r.ri_2)}"',
            "yes" if r.has_two_colorable_member else "no",
        ]))
    return "\n".join(lines) + "\n"


def records_to_json(records) -> str:
    out = []
    for r in records:
        out.append({
            "no": r.class_id,
            "class_size": r.member_count,
            "n_vertices": r.n_vertices,
            "n_edges": r.n_edges,
            "lower": r.lower,
            "upper": r.upper,
            "RI_3": list(r.ri_3) if r.ri_3 is not None else None,
            "RI_2": list(r.ri_2) if r.ri_2 is not None else None,
            "two_colorable": r.has_two_colorable_member,
            "representative": r.representative,
        })
    return json.dumps(out, indent=2)


def representatives_dot(records) -> str:
    """DOT rendering of one representative graph per class."""
    lines = ["graph classes {"]
    for r in records:
        g = parse_graph6(r.representative)
        lines.append(f"  subgraph cluster_{r.class_id} {{")
        lines.append(f'    label="class {r.class_id}";')
        for v in range(g.n):
            lines.append(f"    c{r.class_id}_{v};")
        for a, b in g.edges():
            lines.append(f"    c{r.class_id}_{a} -- c{r.class_id}_{b};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"

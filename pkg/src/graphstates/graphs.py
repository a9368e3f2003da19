"""Simple undirected labeled graphs on dense 0-based vertices.

Adjacency is stored as one int bitmask per vertex (bit b of rows[a] set iff
{a,b} is an edge).  Graphs are immutable values: every edit returns a new
Graph.  Vertex subsets are plain int masks throughout; helpers convert from
iterables of vertex indices.
"""

from __future__ import annotations

import heapq
import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .gf2 import BitMatrix

_CANON_NUMPY_MAX = 8
DEFAULT_CANONICAL_CAP = 10
DEFAULT_ENUMERATION_CAP = 8


class CapExceeded(RuntimeError):
    """An operation was asked to exceed its configured size cap."""


@dataclass(frozen=True)
class Graph:
    """Simple graph: symmetric bit-matrix adjacency with zero diagonal."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for a, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError("adjacency bits outside vertex range")
            if (r >> a) & 1:
                raise ValueError("loops are not allowed")
        for a in range(self.n):
            ra = self.rows[a]
            for b in range(a + 1, self.n):
                if ((ra >> b) & 1) != ((self.rows[b] >> a) & 1):
                    raise ValueError("adjacency must be symmetric")

    def neighborhood(self, a: int) -> int:
        """Mask of vertices adjacent to a (never contains a itself)."""
        self._check_vertex(a)
        return self.rows[a]

    def degree(self, a: int) -> int:
        self._check_vertex(a)
        return self.rows[a].bit_count()

    def has_edge(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        return bool((self.rows[a] >> b) & 1)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for a in range(self.n):
            r = self.rows[a] >> (a + 1)
            b = a + 1
            while r:
                if r & 1:
                    out.append((a, b))
                r >>= 1
                b += 1
        return out

    def adjacency(self) -> BitMatrix:
        return BitMatrix(self.n, self.rows)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, a: int) -> None:
        if not 0 <= a < self.n:
            raise IndexError(f"vertex {a} out of range for n={self.n}")


def bits_of(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(g: Graph, subset) -> int:
    """Coerce an int mask or an iterable of vertex indices to a mask."""
    if isinstance(subset, int):
        if subset & ~g.vertex_mask():
            raise IndexError("vertex mask outside of graph")
        return subset
    m = 0
    for v in subset:
        g._check_vertex(v)
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# constructors

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for a, b in edges:
        if a == b:
            raise ValueError("loops are not allowed")
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"edge ({a},{b}) out of range")
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, tuple(rows))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << a) for a in range(n)))


def grid_graph(n_rows: int, n_cols: int) -> Graph:
    """Rectangular lattice, vertices numbered row-major."""
    def vid(r, c):
        return r * n_cols + c
    edges = []
    for r in range(n_rows):
        for c in range(n_cols):
            if c + 1 < n_cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < n_rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return from_edges(n_rows * n_cols, edges)


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, edges)


def relabel(g: Graph, perm) -> Graph:
    """Image graph with new vertex i := old vertex perm[i]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertices")
    rows = []
    for i in range(g.n):
        old = g.rows[perm[i]]
        r = 0
        for j in range(g.n):
            if (old >> perm[j]) & 1:
                r |= 1 << j
        rows.append(r)
    return Graph(g.n, tuple(rows))


def random_connected_graph(rng, n: int, p: float = 0.5) -> Graph:
    """Sample G(n, p) conditioned on connectivity (rejection sampling)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    while True:
        edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                 if rng.random() < p]
        g = from_edges(n, edges)
        if is_connected(g):
            return g


def random_tree(rng, n: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n <= 1:
        return empty_graph(max(n, 0))
    if n == 2:
        return from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# edits

def toggle_edge(g: Graph, a: int, b: int) -> Graph:
    if a == b:
        raise ValueError("cannot toggle a loop")
    g._check_vertex(a)
    g._check_vertex(b)
    rows = list(g.rows)
    rows[a] ^= 1 << b
    rows[b] ^= 1 << a
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, a: int) -> Graph:
    """Remove a and its edges; vertices above a shift down by one."""
    g._check_vertex(a)
    low = (1 << a) - 1
    rows = []
    for v in range(g.n):
        if v == a:
            continue
        r = g.rows[v]
        rows.append((r & low) | ((r >> (a + 1)) << a))
    return Graph(g.n - 1, tuple(rows))


def delete_vertices(g: Graph, subset) -> Graph:
    """Delete a whole vertex set (labels of the survivors keep their order)."""
    mask = as_mask(g, subset)
    out = g
    for v in sorted(bits_of(mask), reverse=True):
        out = delete_vertex(out, v)
    return out


def induced_subgraph(g: Graph, subset) -> Graph:
    """Keep only the vertices in subset (order preserved) and edges inside it."""
    mask = as_mask(g, subset)
    keep = list(bits_of(mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in bits_of(g.rows[v] & mask):
            r |= 1 << pos[w]
        rows.append(r)
    return Graph(len(keep), tuple(rows))


def sym_diff_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Symmetric difference of the edge set with the given vertex pairs."""
    rows = list(g.rows)
    seen = set()
    for a, b in edges:
        if a == b:
            raise ValueError("loops are not allowed")
        g._check_vertex(a)
        g._check_vertex(b)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"duplicate pair {key} in edge set")
        seen.add(key)
        rows[a] ^= 1 << b
        rows[b] ^= 1 << a
    return Graph(g.n, tuple(rows))


def edges_between(g: Graph, a_set, b_set) -> list[tuple[int, int]]:
    """Edges of g with one endpoint in each set (sets may overlap)."""
    am = as_mask(g, a_set)
    bm = as_mask(g, b_set)
    out = set()
    for u in bits_of(am):
        for v in bits_of(g.rows[u] & bm & ~(1 << u)):
            out.add((min(u, v), max(u, v)))
    return sorted(out)


def _lc_rows(rows: tuple[int, ...], a: int) -> tuple[int, ...]:
    nb = rows[a]
    out = list(rows)
    for b in bits_of(nb):
        out[b] ^= nb ^ (1 << b)
    return tuple(out)


def local_complement(g: Graph, a: int) -> Graph:
    """Complement the subgraph induced on the neighborhood of a."""
    g._check_vertex(a)
    return Graph(g.n, _lc_rows(g.rows, a))


# ---------------------------------------------------------------------------
# connectivity and coloring

def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.vertex_mask()


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, by smallest member."""
    todo = g.vertex_mask()
    comps = []
    while todo:
        root = todo & -todo
        seen = root
        frontier = root
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        todo &= ~seen
    return comps


def two_coloring(g: Graph) -> tuple[int, int] | None:
    """A proper 2-coloring as (mask0, mask1), or None iff an odd cycle exists.

    The smallest vertex of every component gets color 0, so the coloring is
    deterministic.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in bits_of(g.rows[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    m0 = m1 = 0
    for v, c in enumerate(color):
        if c == 0:
            m0 |= 1 << v
        else:
            m1 |= 1 << v
    return m0, m1


def is_two_colorable(g: Graph) -> bool:
    return two_coloring(g) is not None


# ---------------------------------------------------------------------------
# vertex covers

def _drop_vertex_edges(rows: list[int], v: int) -> None:
    for w in bits_of(rows[v]):
        rows[w] &= ~(1 << v)
    rows[v] = 0


def greedy_vertex_cover(g: Graph) -> int:
    """A (not necessarily minimal) cover mask: repeatedly take a max-degree vertex."""
    rows = list(g.rows)
    cover = 0
    while True:
        v = max(range(g.n), key=lambda u: rows[u].bit_count(), default=None)
        if v is None or rows[v] == 0:
            return cover
        cover |= 1 << v
        _drop_vertex_edges(rows, v)


def _matching_lower_bound(rows: list[int]) -> int:
    work = rows[:]
    size = 0
    for v in range(len(work)):
        if work[v]:
            w = next(bits_of(work[v]))
            size += 1
            _drop_vertex_edges(work, v)
            _drop_vertex_edges(work, w)
    return size


def min_vertex_cover(g: Graph) -> int:
    """Mask of an exact minimum vertex cover (branch and bound)."""
    best_mask = greedy_vertex_cover(g)
    best_size = best_mask.bit_count()

    def bb(rows: list[int], chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        v = max(range(g.n), key=lambda u: rows[u].bit_count(), default=None)
        if v is None or rows[v] == 0:
            if size < best_size:
                best_size, best_mask = size, chosen
            return
        if size + _matching_lower_bound(rows) >= best_size:
            return
        nb = rows[v]
        # branch 1: v in the cover
        r1 = rows[:]
        _drop_vertex_edges(r1, v)
        bb(r1, chosen | (1 << v), size + 1)
        # branch 2: all neighbors of v in the cover
        r2 = rows[:]
        add = 0
        for w in bits_of(nb):
            add |= 1 << w
            _drop_vertex_edges(r2, w)
        bb(r2, chosen | add, size + nb.bit_count())

    bb(list(g.rows), 0, 0)
    return best_mask


def is_vertex_cover(g: Graph, subset) -> bool:
    mask = as_mask(g, subset)
    return all((g.rows[a] | (1 << a)) & mask for a in range(g.n) if g.rows[a])


# ---------------------------------------------------------------------------
# canonical forms and isomorphism

def _tri_indices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ii, jj = [], []
    for j in range(1, n):
        for i in range(j):
            ii.append(i)
            jj.append(j)
    L = len(ii)
    weights = (1 << np.arange(L - 1, -1, -1, dtype=np.int64)) if L else np.zeros(0, np.int64)
    return np.array(ii), np.array(jj), weights


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    return perms, _tri_indices(n)


def _tri_value(g: Graph) -> int:
    """Upper-triangle bits read column by column, first bit most significant."""
    val = 0
    for j in range(1, g.n):
        for i in range(j):
            val = (val << 1) | ((g.rows[i] >> j) & 1)
    return val


def _rows_from_matrix(a: np.ndarray) -> tuple[int, ...]:
    n = a.shape[0]
    return tuple(int(sum(int(a[i, j]) << j for j in range(n))) for i in range(n))


def _canon_scan_numpy(g: Graph) -> tuple[Graph, tuple[int, ...], int]:
    n = g.n
    perms, (ii, jj, weights) = _perm_tables(n)
    a = np.zeros((n, n), dtype=np.uint8)
    for v in range(n):
        for w in bits_of(g.rows[v]):
            a[v, w] = 1
    b = a[perms[:, :, None], perms[:, None, :]]
    vals = b[:, ii, jj].astype(np.int64) @ weights
    k = int(np.argmin(vals))
    ties = int((vals == vals[k]).sum())
    canon = Graph(n, _rows_from_matrix(b[k]))
    return canon, tuple(int(x) for x in perms[k]), ties


def _canon_backtrack(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    n = g.n
    rows = g.rows

    def column(prefix: list[int], v: int) -> int:
        col = 0
        for u in prefix:
            col = (col << 1) | ((rows[u] >> v) & 1)
        return col

    # greedy first descent seeds the incumbent
    prefix: list[int] = []
    used = 0
    best_cols: list[int] = []
    for _ in range(n):
        col, v = min((column(prefix, v), v) for v in range(n) if not (used >> v) & 1)
        best_cols.append(col)
        prefix.append(v)
        used |= 1 << v
    best_perm = prefix[:]

    cur: list[int] = []

    def rec(prefix: list[int], used: int) -> None:
        nonlocal best_cols, best_perm
        k = len(prefix)
        if k == n:
            if cur < best_cols:
                best_cols = cur[:]
                best_perm = prefix[:]
            return
        options = sorted((column(prefix, v), v) for v in range(n) if not (used >> v) & 1)
        for col, v in options:
            # best_cols may move while iterating, so compare fresh each time
            head = best_cols[:k]
            if cur > head or (cur == head and col > best_cols[k]):
                break
            cur.append(col)
            prefix.append(v)
            rec(prefix, used | (1 << v))
            prefix.pop()
            cur.pop()

    rec([], 0)
    perm = tuple(best_perm)
    canon = relabel(g, perm)
    return canon, perm


@lru_cache(maxsize=1 << 17)
def _canonical_cached(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    if g.n <= 1:
        return g, tuple(range(g.n))
    if g.n <= _CANON_NUMPY_MAX:
        canon, perm, _ = _canon_scan_numpy(g)
        return canon, perm
    return _canon_backtrack(g)


def canonical_form(g: Graph, cap: int = DEFAULT_CANONICAL_CAP) -> tuple[Graph, tuple[int, ...]]:
    """Lexicographically minimal relabeling of g plus a witnessing permutation.

    Minimality is over the upper-triangle adjacency bit-string read column by
    column; the witness maps canonical position i to original vertex perm[i].
    """
    if g.n > cap:
        raise CapExceeded(f"canonical_form capped at n<={cap}, got n={g.n}")
    return _canonical_cached(g)


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group (exhaustive scan, n <= 8)."""
    if g.n > _CANON_NUMPY_MAX:
        raise CapExceeded(f"automorphism_count capped at n<={_CANON_NUMPY_MAX}")
    if g.n <= 1:
        return 1
    return _canon_scan_numpy(g)[2]


def is_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CANONICAL_CAP) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(r.bit_count() for r in g.rows) != sorted(r.bit_count() for r in h.rows):
        return False
    return canonical_form(g, cap)[0].rows == canonical_form(h, cap)[0].rows


# ---------------------------------------------------------------------------
# enumeration of isomorphism classes

def _add_vertex(h: Graph, neighbor_mask: int) -> Graph:
    n = h.n + 1
    rows = [h.rows[i] | (((neighbor_mask >> i) & 1) << (n - 1)) for i in range(h.n)]
    rows.append(neighbor_mask)
    return Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all isomorphism classes on n vertices."""
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (Graph(1, (0,)),)
    out: dict[tuple[int, ...], Graph] = {}
    for parent in _graph_classes(n - 1):
        for s in range(1 << (n - 1)):
            canon, _ = canonical_form(_add_vertex(parent, s))
            out[canon.rows] = canon
    order = sorted(out.values(), key=lambda g: (g.edge_count, _tri_value(g)))
    return tuple(order)


def enumerate_connected(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs."""
    if n > cap:
        raise CapExceeded(f"enumeration capped at n<={cap}, got n={n}")
    for g in _graph_classes(n):
        if is_connected(g):
            yield g


def connected_labeled_graph_count(n: int) -> int:
    """Number of connected labeled graphs on n vertices (classical recurrence)."""
    total = [1] + [2 ** math.comb(k, 2) for k in range(1, n + 1)]
    conn = [0] * (n + 1)
    for k in range(1, n + 1):
        s = total[k]
        for j in range(1, k):
            s -= math.comb(k - 1, j - 1) * conn[j] * total[k - j]
        conn[k] = s
    return conn[n]


# ---------------------------------------------------------------------------
# graph6 I/O and JSON export

def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (n <= 62: single-byte size)."""
    if g.n > 62:
        raise ValueError("graph6 encoder supports n <= 62")
    out = [chr(63 + g.n)]
    group = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((g.rows[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + group))
                group = 0
                nbits = 0
    if nbits:
        group <<= 6 - nbits
        out.append(chr(63 + group))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    head = ord(s[0]) - 63
    if head == 63:
        raise ValueError("multi-byte graph6 sizes (n > 62) are not supported")
    if not 0 <= head <= 62:
        raise ValueError(f"malformed graph6 header {s[0]!r}")
    n = head
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body of {len(body)} chars, expected {need}")
    bits = 0
    for c in body:
        v = ord(c) - 63
        if not 0 <= v < 64:
            raise ValueError(f"invalid graph6 character {c!r}")
        bits = (bits << 6) | v
    pad = 6 * need - nbits
    if pad and bits & ((1 << pad) - 1):
        raise ValueError("nonzero trailing padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def parse_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def adjacency_json(g: Graph) -> str:
    """Adjacency-list JSON: {"n": ..., "adjacency": [[neighbors of 0], ...]}."""
    adj = [list(bits_of(r)) for r in g.rows]
    return json.dumps({"n": g.n, "adjacency": adj})


def from_adjacency_json(text: str) -> Graph:
    data = json.loads(text)
    n = data["n"]
    edges = [(v, w) for v, nbrs in enumerate(data["adjacency"]) for w in nbrs if v < w]
    return from_edges(n, edges)

"""Symbolic Pauli and local-Clifford algebra for graph-state stabilizers.

PauliOp stores an n-qubit Pauli in symplectic form: X-support mask, Z-support
mask, and a global phase as a power of i.  The operator it denotes is

    i^phase * prod_sites X^{x_s} Z^{z_s}

so a site in both supports carries XZ = -iY.  Single-qubit Cliffords live in
a precomputed 24-element table (indices, composition, inverse, and signed
axis action), built once from explicit matrices; all symbolic paths use the
integer tables only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import CapExceeded, Graph, bits_of, as_mask

AXIS_X, AXIS_Y, AXIS_Z = 0, 1, 2
_AXIS_NAMES = "xyz"

_SQ2 = 1.0 / np.sqrt(2.0)

PAULI_MATRICES = {
    AXIS_X: np.array([[0, 1], [1, 0]], dtype=complex),
    AXIS_Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    AXIS_Z: np.array([[1, 0], [0, -1]], dtype=complex),
}

_H_MATRIX = _SQ2 * np.array([[1, 1], [1, -1]], dtype=complex)
_S_MATRIX = np.array([[1, 0], [0, 1j]], dtype=complex)

# principal square roots of +-i sigma_a (the byproduct alphabet)
SQRT_MATRICES = {
    ("x", +1): _SQ2 * np.array([[1, 1j], [1j, 1]], dtype=complex),    # (+i sx)^1/2
    ("x", -1): _SQ2 * np.array([[1, -1j], [-1j, 1]], dtype=complex),  # (-i sx)^1/2
    ("y", +1): _SQ2 * np.array([[1, 1], [-1, 1]], dtype=complex),     # (+i sy)^1/2
    ("y", -1): _SQ2 * np.array([[1, -1], [1, 1]], dtype=complex),     # (-i sy)^1/2
    ("z", +1): np.array([[np.exp(1j * np.pi / 4), 0], [0, np.exp(-1j * np.pi / 4)]]),
    ("z", -1): np.array([[np.exp(-1j * np.pi / 4), 0], [0, np.exp(1j * np.pi / 4)]]),
}


def _normalize_phase(m: np.ndarray) -> np.ndarray:
    flat = m.ravel()
    for v in flat:
        if abs(v) > 1e-9:
            return m / (v / abs(v))
    raise ValueError("zero matrix")


def _key(m: np.ndarray) -> tuple:
    return tuple((round(v.real, 6), round(v.imag, 6)) for v in m.ravel())


def _build_tables():
    mats = [_normalize_phase(np.eye(2, dtype=complex))]
    keys = {_key(mats[0]): 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for gen in (_H_MATRIX, _S_MATRIX):
                m = _normalize_phase(mats[i] @ gen)
                k = _key(m)
                if k not in keys:
                    keys[k] = len(mats)
                    mats.append(m)
                    nxt.append(keys[k])
        frontier = nxt
    if len(mats) != 24:
        raise AssertionError(f"expected 24 single-qubit Cliffords, built {len(mats)}")

    def index_of(m: np.ndarray) -> int:
        return keys[_key(_normalize_phase(m))]

    compose = [[index_of(mats[i] @ mats[j]) for j in range(24)] for i in range(24)]
    inverse = [index_of(mats[i].conj().T) for i in range(24)]

    signed = {}
    for ax, p in PAULI_MATRICES.items():
        signed[(ax, +1)] = p
        signed[(ax, -1)] = -p
    axis_image = []
    for i in range(24):
        row = []
        for ax in (AXIS_X, AXIS_Y, AXIS_Z):
            q = mats[i] @ PAULI_MATRICES[ax] @ mats[i].conj().T
            hit = None
            for (bx, sign), target in signed.items():
                if np.allclose(q, target, atol=1e-9):
                    hit = (bx, sign)
                    break
            if hit is None:
                raise AssertionError("conjugation left the signed Pauli axes")
            row.append(hit)
        axis_image.append(tuple(row))

    return np.array(mats), compose, inverse, tuple(axis_image), index_of


(CLIFFORD_MATRICES, CLIFFORD_COMPOSE, CLIFFORD_INVERSE,
 CLIFFORD_AXIS_IMAGE, _index_of_matrix) = _build_tables()

CL_I = _index_of_matrix(np.eye(2, dtype=complex))
CL_X = _index_of_matrix(PAULI_MATRICES[AXIS_X])
CL_Y = _index_of_matrix(PAULI_MATRICES[AXIS_Y])
CL_Z = _index_of_matrix(PAULI_MATRICES[AXIS_Z])
CL_H = _index_of_matrix(_H_MATRIX)
CL_S = _index_of_matrix(_S_MATRIX)
CL_SDG = _index_of_matrix(_S_MATRIX.conj().T)
CL_SQRT_IX = _index_of_matrix(SQRT_MATRICES[("x", +1)])
CL_SQRT_MIX = _index_of_matrix(SQRT_MATRICES[("x", -1)])
CL_SQRT_IY = _index_of_matrix(SQRT_MATRICES[("y", +1)])
CL_SQRT_MIY = _index_of_matrix(SQRT_MATRICES[("y", -1)])
CL_SQRT_IZ = _index_of_matrix(SQRT_MATRICES[("z", +1)])
CL_SQRT_MIZ = _index_of_matrix(SQRT_MATRICES[("z", -1)])


def _build_names() -> tuple[str, ...]:
    names = {CL_I: "I", CL_X: "X", CL_Y: "Y", CL_Z: "Z", CL_H: "H",
             CL_S: "S", CL_SDG: "Sd"}
    for ax in "xy":
        for sign, tag in ((+1, "+"), (-1, "-")):
            idx = _index_of_matrix(SQRT_MATRICES[(ax, sign)])
            names.setdefault(idx, f"Q{ax}{tag}")
    # the rest get their shortest H/S word
    frontier = [(CL_I, "")]
    seen = {CL_I}
    while frontier:
        nxt = []
        for idx, word in frontier:
            for gen_idx, letter in ((CL_H, "H"), (CL_S, "S")):
                j = CLIFFORD_COMPOSE[idx][gen_idx]
                if j not in seen:
                    seen.add(j)
                    names.setdefault(j, word + letter)
                    nxt.append((j, word + letter))
        frontier = nxt
    return tuple(names[i] for i in range(24))


CLIFFORD_NAMES = _build_names()


def clifford_axis_image(idx: int, axis: int) -> tuple[int, int]:
    """(axis', sign) with  U sigma_axis U^dagger = sign * sigma_axis'."""
    return CLIFFORD_AXIS_IMAGE[idx][axis]


def clifford_index_of_matrix(m: np.ndarray) -> int:
    """Table index of a single-qubit Clifford matrix, up to global phase."""
    return _index_of_matrix(m)


# ---------------------------------------------------------------------------
# Pauli operators

@dataclass(frozen=True)
class PauliOp:
    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if (self.x & ~full) or (self.z & ~full):
            raise ValueError("support outside of qubit range")
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def support(self) -> int:
        return self.x | self.z

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0 and self.phase == 0

    def __str__(self) -> str:
        return pauli_to_string(self)


def identity_pauli(n: int) -> PauliOp:
    return PauliOp(n, 0, 0, 0)


def pauli_product(p: PauliOp, q: PauliOp) -> PauliOp:
    """Operator product p*q with the phase tracked mod 4."""
    if p.n != q.n:
        raise ValueError("size mismatch")
    extra = 2 * ((p.z & q.x).bit_count() & 1)  # Z X = - X Z per site
    return PauliOp(p.n, p.x ^ q.x, p.z ^ q.z, p.phase + q.phase + extra)


def commutes(p: PauliOp, q: PauliOp) -> bool:
    """Symplectic inner product is zero."""
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) % 2 == 0


def pauli_to_string(p: PauliOp) -> str:
    """Human-readable form like '+XZZI' or '-iYY'."""
    y_count = (p.x & p.z).bit_count()
    prefix = {0: "+", 1: "+i", 2: "-", 3: "-i"}[(p.phase - y_count) % 4]
    letters = ["IXZY"[((p.x >> s) & 1) + 2 * ((p.z >> s) & 1)] for s in range(p.n)]
    return prefix + "".join(letters)


def stabilizer_generator(g: Graph, a: int) -> PauliOp:
    """X on a, Z on every neighbor of a."""
    g._check_vertex(a)
    return PauliOp(g.n, 1 << a, g.rows[a], 0)


def stabilizer_element(g: Graph, subset) -> PauliOp:
    """Ordered product of generators over the subset, ascending vertex index."""
    mask = as_mask(g, subset)
    out = identity_pauli(g.n)
    for a in bits_of(mask):
        out = pauli_product(out, stabilizer_generator(g, a))
    return out


def exact_support_count(g: Graph, subset, cap: int = 16) -> int:
    """Number of stabilizer elements acting non-trivially exactly on the subset.

    Only generator products over S within the subset can qualify (the
    X-support of the product is S itself), so the enumeration is over
    submasks of the subset.
    """
    a_mask = as_mask(g, subset)
    if g.n > cap:
        raise CapExceeded(f"support enumeration capped at n<={cap}, got n={g.n}")
    count = 0
    s = a_mask
    while True:
        zsup = 0
        for v in bits_of(s):
            zsup ^= g.rows[v]
        if (s | zsup) == a_mask:
            count += 1
        if s == 0:
            break
        s = (s - 1) & a_mask
    return count


# ---------------------------------------------------------------------------
# local Cliffords (one table index per vertex)

@dataclass(frozen=True)
class LocalClifford:
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        for i in self.indices:
            if not 0 <= i < 24:
                raise ValueError("invalid Clifford index")

    @property
    def n(self) -> int:
        return len(self.indices)

    def site(self, v: int) -> int:
        return self.indices[v]

    def is_identity(self) -> bool:
        return all(i == CL_I for i in self.indices)

    def __str__(self) -> str:
        parts = [f"{CLIFFORD_NAMES[idx]}@{v}" for v, idx in enumerate(self.indices)
                 if idx != CL_I]
        return " ".join(parts) if parts else "I"


def identity_clifford(n: int) -> LocalClifford:
    return LocalClifford((CL_I,) * n)


def embed_clifford(n: int, assignments: dict[int, int]) -> LocalClifford:
    idx = [CL_I] * n
    for v, c in assignments.items():
        idx[v] = c
    return LocalClifford(tuple(idx))


def clifford_compose(u: LocalClifford, v: LocalClifford) -> LocalClifford:
    """Composite acting as v first, then u (matrix product u @ v per site)."""
    if u.n != v.n:
        raise ValueError("size mismatch")
    return LocalClifford(tuple(CLIFFORD_COMPOSE[a][b] for a, b in zip(u.indices, v.indices)))


def clifford_inverse(u: LocalClifford) -> LocalClifford:
    return LocalClifford(tuple(CLIFFORD_INVERSE[i] for i in u.indices))


_BITS_TO_AXIS = {(1, 0): AXIS_X, (1, 1): AXIS_Y, (0, 1): AXIS_Z}
_AXIS_TO_BITS = {AXIS_X: (1, 0), AXIS_Y: (1, 1), AXIS_Z: (0, 1)}


def clifford_conjugate_pauli(u: LocalClifford, p: PauliOp) -> PauliOp:
    """U p U^dagger, staying inside the Pauli group."""
    if u.n != p.n:
        raise ValueError("size mismatch")
    new_x = new_z = 0
    sign_flips = 0
    y_in = (p.x & p.z).bit_count()
    y_out = 0
    for s in range(p.n):
        xb = (p.x >> s) & 1
        zb = (p.z >> s) & 1
        if not (xb or zb):
            continue
        axis = _BITS_TO_AXIS[(xb, zb)]
        axis2, sign = CLIFFORD_AXIS_IMAGE[u.indices[s]][axis]
        if sign < 0:
            sign_flips += 1
        xb2, zb2 = _AXIS_TO_BITS[axis2]
        new_x |= xb2 << s
        new_z |= zb2 << s
        y_out += xb2 & zb2
    # value = i^{phase - y_in} * (hermitian string); conjugation maps the
    # hermitian string to +-(new hermitian string) = i^{y_out} * XZ-form
    phase = p.phase - y_in + y_out + 2 * sign_flips
    return PauliOp(p.n, new_x, new_z, phase)


def local_complement_clifford(g: Graph, a: int) -> LocalClifford:
    """Per-vertex Clifford turning the graph state into that of the local
    complement at a: quarter X-turn on a, quarter Z-turns on its neighbors."""
    g._check_vertex(a)
    assign = {a: CL_SQRT_MIX}
    for b in bits_of(g.rows[a]):
        assign[b] = CL_SQRT_IZ
    return embed_clifford(g.n, assign)

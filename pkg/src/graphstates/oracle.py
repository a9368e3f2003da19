"""Dense state-vector reference implementation.

Verifies every graph rule against actual quantum states at small sizes.
Amplitude indexing: vertex 0 is the most significant bit, so axis v of the
state reshaped to (2,)*n is qubit v.
"""

from __future__ import annotations

import numpy as np

from .graphs import CapExceeded, Graph, as_mask, bits_of, delete_vertices
from .stabilizer import (
    CLIFFORD_MATRICES,
    CL_I,
    LocalClifford,
    PAULI_MATRICES,
    PauliOp,
)

STATE_CAP = 12
PHASE_TOL = 1e-9
RANK_TOL = 1e-8

_BASIS_VECTORS = {
    ("x", +1): np.array([1, 1], dtype=complex) / np.sqrt(2),
    ("x", -1): np.array([1, -1], dtype=complex) / np.sqrt(2),
    ("y", +1): np.array([1, 1j], dtype=complex) / np.sqrt(2),
    ("y", -1): np.array([1, -1j], dtype=complex) / np.sqrt(2),
    ("z", +1): np.array([1, 0], dtype=complex),
    ("z", -1): np.array([0, 1], dtype=complex),
}


def basis_eigenvector(basis: str, sign: int) -> np.ndarray:
    return _BASIS_VECTORS[(basis, sign)].copy()


def _n_qubits(state: np.ndarray) -> int:
    n = int(np.log2(len(state)) + 0.5)
    if len(state) != 1 << n:
        raise ValueError("state length is not a power of two")
    return n


def graph_state(g: Graph, cap: int = STATE_CAP) -> np.ndarray:
    """Controlled-Z circuit applied to the uniform superposition."""
    if g.n > cap:
        raise CapExceeded(f"dense states capped at n<={cap}, got n={g.n}")
    n = g.n
    dim = 1 << n
    vec = np.full(dim, 1.0 / np.sqrt(dim), dtype=complex)
    idx = np.arange(dim)
    for a, b in g.edges():
        mask = (1 << (n - 1 - a)) | (1 << (n - 1 - b))
        vec[(idx & mask) == mask] *= -1.0
    return vec


def apply_single_site(state: np.ndarray, site: int, m: np.ndarray) -> np.ndarray:
    n = _n_qubits(state)
    if not 0 <= site < n:
        raise IndexError(site)
    d_l = 1 << site
    d_r = 1 << (n - 1 - site)
    t = state.reshape(d_l, 2, d_r)
    return np.einsum("ij,ajb->aib", m, t).reshape(-1)


def apply_projector(state: np.ndarray, site: int, basis: str, sign: int
                    ) -> tuple[float, np.ndarray | None]:
    """(probability, normalized post-measurement state); state is None on the
    zero-probability branch."""
    if basis not in ("x", "y", "z"):
        raise ValueError(f"bad basis {basis!r}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    axis = "xyz".index(basis)
    proj = (np.eye(2, dtype=complex) + sign * PAULI_MATRICES[axis]) / 2
    out = apply_single_site(state, site, proj)
    prob = float(np.vdot(out, out).real)
    if prob < 1e-12:
        return 0.0, None
    return prob, out / np.sqrt(prob)


def apply_local_clifford(state: np.ndarray, u: LocalClifford) -> np.ndarray:
    if u.n != _n_qubits(state):
        raise ValueError("size mismatch")
    out = state
    for site, idx in enumerate(u.indices):
        if idx != CL_I:
            out = apply_single_site(out, site, CLIFFORD_MATRICES[idx])
    return out


def apply_pauli(state: np.ndarray, p: PauliOp) -> np.ndarray:
    """Apply i^phase * prod X^x Z^z using index arithmetic."""
    n = _n_qubits(state)
    if p.n != n:
        raise ValueError("size mismatch")
    xi = zi = 0
    for s in range(n):
        if (p.x >> s) & 1:
            xi |= 1 << (n - 1 - s)
        if (p.z >> s) & 1:
            zi |= 1 << (n - 1 - s)
    idx = np.arange(len(state))
    src = idx ^ xi
    signs = 1.0 - 2.0 * (np.bitwise_count(src & zi) & 1)
    return (1j) ** p.phase * signs * state[src]


def equal_up_to_global_phase(s: np.ndarray, t: np.ndarray, tol: float = PHASE_TOL) -> bool:
    ns = np.linalg.norm(s)
    nt = np.linalg.norm(t)
    if ns < 1e-12 or nt < 1e-12:
        return False
    return abs(np.vdot(s, t)) / (ns * nt) >= 1.0 - tol


def insert_qubit(state: np.ndarray, site: int, vec2: np.ndarray) -> np.ndarray:
    """Tensor a single-qubit state in at the given position."""
    n = _n_qubits(state) + 1
    if not 0 <= site < n:
        raise IndexError(site)
    d_l = 1 << site
    d_r = 1 << (n - 1 - site)
    t = state.reshape(d_l, d_r)
    return np.einsum("k,ab->akb", np.asarray(vec2, dtype=complex), t).reshape(-1)


def reduced_density(state: np.ndarray, traced) -> np.ndarray:
    """Density operator of the complement of the traced qubit set."""
    n = _n_qubits(state)
    traced_list = sorted(traced) if not isinstance(traced, int) else \
        [v for v in range(n) if (traced >> v) & 1]
    kept = [v for v in range(n) if v not in traced_list]
    psi = state.reshape((2,) * n)
    t = np.transpose(psi, traced_list + kept).reshape(1 << len(traced_list), -1)
    return t.T @ t.conj()


def _small_side_spectrum(state: np.ndarray, traced_mask: int) -> np.ndarray:
    """Eigenvalues of the reduced density operator, diagonalized on whichever
    side is smaller (both sides share the nonzero spectrum for a pure state)."""
    n = _n_qubits(state)
    small = [v for v in range(n) if (traced_mask >> v) & 1]
    if len(small) > n - len(small):
        small = [v for v in range(n) if not (traced_mask >> v) & 1]
    other = [v for v in range(n) if v not in small]
    psi = state.reshape((2,) * n)
    t = np.transpose(psi, other + small).reshape(-1, 1 << len(small))
    rho_small = t.T @ t.conj()
    return np.linalg.eigvalsh(rho_small)


def reduced_rank(state: np.ndarray, traced, tol: float = RANK_TOL) -> int:
    """Rank of the density operator left after tracing out the given qubits."""
    n = _n_qubits(state)
    mask = traced if isinstance(traced, int) else sum(1 << v for v in traced)
    if mask == 0:
        return 1 if np.linalg.norm(state) > tol else 0
    evals = _small_side_spectrum(state, mask)
    return int((evals > tol).sum())


def reduced_entropy(state: np.ndarray, traced) -> float:
    """Entropy in bits of the state reduced over the given qubits."""
    n = _n_qubits(state)
    mask = traced if isinstance(traced, int) else sum(1 << v for v in traced)
    if mask == 0:
        return 0.0
    evals = _small_side_spectrum(state, mask)
    evals = evals[evals > 1e-14]
    return float(-(evals * np.log2(evals)).sum())


def verify_partial_trace_form(g: Graph, traced, tol: float = RANK_TOL,
                              cap: int = 10) -> bool:
    """Check that tracing out a vertex set equals the uniform mixture of
    locally rotated graph states of the reduced graph."""
    if g.n > cap:
        raise CapExceeded(f"partial-trace check capped at n<={cap}")
    a_mask = as_mask(g, traced)
    state = graph_state(g)
    direct = reduced_density(state, [v for v in range(g.n) if (a_mask >> v) & 1])

    a_verts = list(bits_of(a_mask))
    kept = [v for v in range(g.n) if not (a_mask >> v) & 1]
    pos = {v: i for i, v in enumerate(kept)}
    reduced_graph = delete_vertices(g, a_mask)
    base = graph_state(reduced_graph)
    dim = len(base)
    idx = np.arange(dim)
    mix = np.zeros((dim, dim), dtype=complex)
    k = len(a_verts)
    for z in range(1 << k):
        zmask = 0
        for i, v in enumerate(a_verts):
            if (z >> i) & 1:
                zmask ^= g.rows[v]
        zmask &= ~a_mask
        phase_bits = 0
        for v in bits_of(zmask):
            phase_bits |= 1 << (len(kept) - 1 - pos[v])
        phased = (1.0 - 2.0 * (np.bitwise_count(idx & phase_bits) & 1)) * base
        mix += np.outer(phased, phased.conj())
    mix /= 1 << k
    return bool(np.max(np.abs(mix - direct)) <= tol)

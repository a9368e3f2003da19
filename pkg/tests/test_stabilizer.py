"""Pauli algebra, stabilizer generators, and the single-qubit Clifford table."""

import random

import numpy as np
import pytest

from graphstates import stabilizer as st
from graphstates.graphs import (
    complete_graph,
    cycle_graph,
    enumerate_connected,
    from_edges,
    local_complement,
    path_graph,
    random_connected_graph,
    star_graph,
)
from graphstates.measurement import conjugate_basis


def _pauli_matrix(p: st.PauliOp) -> np.ndarray:
    m = np.array([[1.0 + 0j]])
    for s in range(p.n):
        site = np.eye(2, dtype=complex)
        if (p.x >> s) & 1:
            site = site @ st.PAULI_MATRICES[st.AXIS_X]
        if (p.z >> s) & 1:
            site = site @ st.PAULI_MATRICES[st.AXIS_Z]
        m = np.kron(m, site)
    return (1j) ** p.phase * m


def test_generator_examples():
    assert str(st.stabilizer_generator(from_edges(2, []), 0)) == "+XI"
    assert str(st.stabilizer_generator(path_graph(3), 1)) == "+ZXZ"
    assert str(st.stabilizer_generator(star_graph(4), 0)) == "+XZZZ"


def test_product_identity_and_involution():
    g = cycle_graph(4)
    k = st.stabilizer_generator(g, 0)
    assert st.pauli_product(k, st.identity_pauli(4)) == k
    assert st.pauli_product(k, k).is_identity()


def test_single_site_xz_product():
    x = st.PauliOp(1, 1, 0)
    z = st.PauliOp(1, 0, 1)
    assert str(st.pauli_product(x, z)) == "-iY"
    assert str(st.pauli_product(z, x)) == "+iY"


def test_generators_commute_exhaustively():
    for n in range(2, 8):
        for g in enumerate_connected(n):
            gens = [st.stabilizer_generator(g, a) for a in range(n)]
            for i in range(n):
                for j in range(i, n):
                    assert st.commutes(gens[i], gens[j])


def test_stabilizer_element_examples():
    k2 = from_edges(2, [(0, 1)])
    assert st.stabilizer_element(k2, 0).is_identity()
    assert st.stabilizer_element(k2, 0b01) == st.stabilizer_generator(k2, 0)
    assert str(st.stabilizer_element(k2, 0b11)) == "+YY"


def test_stabilizer_element_is_homomorphism_mod_phase():
    rng = random.Random(10)
    for _ in range(50):
        g = random_connected_graph(rng, rng.randrange(2, 8))
        s1 = rng.randrange(1 << g.n)
        s2 = rng.randrange(1 << g.n)
        a = st.stabilizer_element(g, s1)
        b = st.stabilizer_element(g, s2)
        c = st.stabilizer_element(g, s1 ^ s2)
        prod = st.pauli_product(a, b)
        assert (prod.x, prod.z) == (c.x, c.z)


def test_exact_support_count_examples():
    k2 = from_edges(2, [(0, 1)])
    assert st.exact_support_count(k2, 0) == 1
    assert st.exact_support_count(k2, 0b11) == 3


def test_support_count_identity_random():
    # sum over subsets B of A of I_B equals 2^(|A| - cross rank)
    from graphstates.entanglement import schmidt_rank

    rng = random.Random(11)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randrange(2, 7))
        a_mask = rng.randrange(1, 1 << g.n)
        if a_mask.bit_count() > 4:
            continue
        total = 0
        b = a_mask
        while True:
            total += st.exact_support_count(g, b)
            if b == 0:
                break
            b = (b - 1) & a_mask
        if a_mask == g.vertex_mask():
            rank = 0
        else:
            rank = schmidt_rank(g, a_mask)
        assert total == 1 << (a_mask.bit_count() - rank)


def test_clifford_table_is_a_group_of_24():
    assert len(st.CLIFFORD_NAMES) == 24
    for i in range(24):
        assert st.CLIFFORD_COMPOSE[i][st.CL_I] == i
        assert st.CLIFFORD_COMPOSE[st.CL_I][i] == i
        assert st.CLIFFORD_COMPOSE[i][st.CLIFFORD_INVERSE[i]] == st.CL_I
    rng = random.Random(12)
    for _ in range(100):
        i, j, k = (rng.randrange(24) for _ in range(3))
        ij_k = st.CLIFFORD_COMPOSE[st.CLIFFORD_COMPOSE[i][j]][k]
        i_jk = st.CLIFFORD_COMPOSE[i][st.CLIFFORD_COMPOSE[j][k]]
        assert ij_k == i_jk


def test_sqrt_matrices_square_to_targets():
    for (axis, sign), m in st.SQRT_MATRICES.items():
        target = sign * 1j * st.PAULI_MATRICES["xyz".index(axis)]
        assert np.allclose(m @ m, target, atol=1e-9)


def test_axis_action_matches_matrices():
    for idx in range(24):
        u = st.CLIFFORD_MATRICES[idx]
        for axis in (st.AXIS_X, st.AXIS_Y, st.AXIS_Z):
            axis2, sign = st.clifford_axis_image(idx, axis)
            got = u @ st.PAULI_MATRICES[axis] @ u.conj().T
            assert np.allclose(got, sign * st.PAULI_MATRICES[axis2], atol=1e-9)


def test_projector_commutation_relations_all_elements():
    # P(basis, sign) U == U P(basis', sign') for every table element
    def proj(basis, sign):
        axis = "xyz".index(basis)
        return (np.eye(2, dtype=complex) + sign * st.PAULI_MATRICES[axis]) / 2
    for idx in range(24):
        u = st.CLIFFORD_MATRICES[idx]
        for basis in "xyz":
            for sign in (1, -1):
                b2, s2 = conjugate_basis(idx, basis, sign)
                assert np.allclose(proj(basis, sign) @ u, u @ proj(b2, s2),
                                   atol=1e-9)


def test_projector_commutation_spot_values():
    assert conjugate_basis(st.CL_Z, "x", 1) == ("x", -1)
    assert conjugate_basis(st.CL_SQRT_IY, "z", 1) == ("x", 1)
    assert conjugate_basis(st.CL_I, "y", -1) == ("y", -1)
    # a Z-rotation byproduct converts a later x measurement into a y one
    assert conjugate_basis(st.CL_SQRT_MIZ, "x", 1)[0] == "y"


def test_conjugate_pauli_flips_x_under_z():
    p = st.PauliOp(1, 1, 0)
    u = st.LocalClifford((st.CL_Z,))
    assert str(st.clifford_conjugate_pauli(u, p)) == "-X"


def test_conjugate_pauli_matches_matrices_multisite():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randrange(1, 4)
        p = st.PauliOp(n, rng.randrange(1 << n), rng.randrange(1 << n),
                       rng.randrange(4))
        u = st.LocalClifford(tuple(rng.randrange(24) for _ in range(n)))
        q = st.clifford_conjugate_pauli(u, p)
        big = np.array([[1.0 + 0j]])
        for s in range(n):
            big = np.kron(big, st.CLIFFORD_MATRICES[u.indices[s]])
        assert np.allclose(big @ _pauli_matrix(p) @ big.conj().T,
                           _pauli_matrix(q), atol=1e-9)


def test_compose_matches_matrix_product():
    rng = random.Random(14)
    for _ in range(100):
        i, j = rng.randrange(24), rng.randrange(24)
        m = st.CLIFFORD_MATRICES[i] @ st.CLIFFORD_MATRICES[j]
        assert st.clifford_index_of_matrix(m) == st.CLIFFORD_COMPOSE[i][j]


def test_local_complement_clifford_shape():
    g = star_graph(4)
    u = st.local_complement_clifford(g, 0)
    assert u.indices[0] == st.CL_SQRT_MIX
    assert all(u.indices[b] == st.CL_SQRT_IZ for b in (1, 2, 3))
    assert "Qx-@0" in str(u)


def test_pauli_validation():
    with pytest.raises(ValueError):
        st.PauliOp(2, 0b100, 0)
    with pytest.raises(ValueError):
        st.pauli_product(st.identity_pauli(2), st.identity_pauli(3))

# -*- coding: utf-8 -*-
import numpy as np
import pytest

from spin_entangle.errors import ModelSpecError, SizeLimitError
from spin_entangle.model import (LatticeSpec, ModelSpec, OperatorAction, build_hamiltonian,
                                 build_tfim, build_xxz, global_spin_flip, global_z_rotation,
                                 local_operator, pauli_product, sublattice_rotation, tfim_lambda,
                                 total_magnetization, z2_symmetry)
from spin_entangle.pauli import SIGMA_PLUS, SIGMA_X, SIGMA_Z, product_state

from .conftest import kron_operator, kron_pauli


def explicit_xxz(n, delta, h=0.0, field_x=0.0, field_z=0.0, boundary="periodic"):
    lattice = LatticeSpec(n, boundary)
    H = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for i, j in lattice.bonds():
        H -= kron_pauli(n, {i: 'x', j: 'x'}) + kron_pauli(n, {i: 'y', j: 'y'})
        H += delta * kron_pauli(n, {i: 'z', j: 'z'})
    for site in range(n):
        H += h * (-1) ** site * kron_pauli(n, {site: 'z'})
        H += field_z * kron_pauli(n, {site: 'z'})
        H += field_x * kron_pauli(n, {site: 'x'})
    return H


def explicit_tfim(n, hz, h=0.0, boundary="periodic"):
    lattice = LatticeSpec(n, boundary)
    H = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for i, j in lattice.bonds():
        H -= kron_pauli(n, {i: 'x', j: 'x'})
    for site in range(n):
        H += hz * kron_pauli(n, {site: 'z'}) + h * kron_pauli(n, {site: 'x'})
    return H


# ============================================================================
# REDE E PARÂMETROS
# ============================================================================

class TestLattice:
    def test_periodic_bonds(self):
        assert LatticeSpec(4, "pbc").bonds() == ((0, 1), (1, 2), (2, 3), (3, 0))

    def test_two_site_ring_has_single_bond(self):
        assert LatticeSpec(2, "periodic").bonds() == ((0, 1),)

    def test_open_bonds(self):
        assert LatticeSpec(3, "obc").bonds() == ((0, 1), (1, 2))

    def test_aliases_normalized(self):
        assert LatticeSpec(4, "OBC").boundary == "open"
        assert LatticeSpec(4, "pbc").boundary == "periodic"

    @pytest.mark.parametrize("n,boundary", [(0, "pbc"), (25, "pbc"), (4, "twisted")])
    def test_invalid(self, n, boundary):
        with pytest.raises(ModelSpecError):
            LatticeSpec(n, boundary)

    def test_separation_minimum_image(self):
        lattice = LatticeSpec(8)
        assert lattice.separation(0, 7) == 1
        assert lattice.separation(1, 5) == 4
        assert LatticeSpec(8, "open").separation(0, 7) == 7

    def test_sublattice_parity(self):
        lattice = LatticeSpec(4)
        assert [lattice.sublattice_parity(i) for i in range(4)] == [1, -1, 1, -1]


class TestModelSpec:
    def test_staggered_field_on_odd_ring_rejected(self):
        with pytest.raises(ModelSpecError):
            ModelSpec.xxz(5, 1.0, breaking_field=1e-3)

    def test_staggered_field_on_odd_open_chain_allowed(self):
        spec = ModelSpec.xxz(5, 1.0, breaking_field=1e-3, boundary="obc")
        assert not spec.has_z2_symmetry

    def test_negative_breaking_field_rejected(self):
        with pytest.raises(ModelSpecError):
            ModelSpec.tfim(4, 1.0, breaking_field=-1.0)

    def test_family_specific_parameters(self):
        with pytest.raises(ModelSpecError):
            ModelSpec("tfim", LatticeSpec(4), delta=1.0)
        with pytest.raises(ModelSpecError):
            ModelSpec("xxz", LatticeSpec(4), hz_transverse=1.0)
        with pytest.raises(ModelSpecError):
            ModelSpec("tfim", LatticeSpec(4), field_x=0.1)
        with pytest.raises(ModelSpecError):
            ModelSpec("heisenberg", LatticeSpec(4))

    def test_lambda(self):
        spec = ModelSpec.tfim(4, 0.5)
        assert spec.lam == pytest.approx(1.0)
        assert tfim_lambda(spec) == pytest.approx(1.0)
        assert ModelSpec.tfim(4, 0.0).lam == float("inf")
        with pytest.raises(ModelSpecError):
            ModelSpec.xxz(4, 1.0).lam

    def test_z2_symmetry_presence(self):
        assert ModelSpec.xxz(4, 1.0).has_z2_symmetry
        assert not ModelSpec.xxz(4, 1.0, field_z=0.1).has_z2_symmetry
        assert ModelSpec.tfim(4, 1.0).has_z2_symmetry
        assert not ModelSpec.tfim(4, 1.0, breaking_field=1e-3).has_z2_symmetry


# ============================================================================
# HAMILTONIANOS
# ============================================================================

class TestHamiltonians:
    def test_xxz_matches_kron_construction(self):
        spec = ModelSpec.xxz(4, 0.7, breaking_field=0.3, field_x=0.2, field_z=-0.1)
        np.testing.assert_allclose(build_xxz(spec).to_dense(), explicit_xxz(4, 0.7, 0.3, 0.2, -0.1), atol=1e-12)

    def test_xxz_open_chain(self):
        spec = ModelSpec.xxz(5, 1.3, boundary="obc")
        np.testing.assert_allclose(build_xxz(spec).to_dense(), explicit_xxz(5, 1.3, boundary="open"), atol=1e-12)

    def test_tfim_matches_kron_construction(self):
        spec = ModelSpec.tfim(5, 0.8, breaking_field=0.05)
        np.testing.assert_allclose(build_tfim(spec).to_dense(), explicit_tfim(5, 0.8, 0.05), atol=1e-12)

    def test_two_site_ring(self):
        spec = ModelSpec.xxz(2, 2.0)
        np.testing.assert_allclose(build_hamiltonian(spec).to_dense(), explicit_xxz(2, 2.0), atol=1e-12)

    def test_single_site_tfim(self):
        H = build_hamiltonian(ModelSpec.tfim(1, 0.5, breaking_field=0.1)).to_dense()
        np.testing.assert_allclose(H, 0.5 * SIGMA_Z + 0.1 * SIGMA_X, atol=1e-12)

    def test_dispatch_rejects_wrong_family(self):
        with pytest.raises(ModelSpecError):
            build_tfim(ModelSpec.xxz(4, 1.0))
        with pytest.raises(ModelSpecError):
            build_xxz(ModelSpec.tfim(4, 1.0))

    def test_hermitian_and_real(self):
        H = build_hamiltonian(ModelSpec.xxz(6, 1.5, breaking_field=0.01))
        assert H.is_real
        dense = H.to_dense()
        np.testing.assert_allclose(dense, dense.T, atol=1e-14)

    def test_xy_term_ferromagnetic(self):
        # −(σˣσˣ + σʸσʸ) liga |↑↓⟩ e |↓↑⟩ com −2
        H = build_xxz(ModelSpec.xxz(2, 0.0)).to_dense()
        assert H[1, 2] == pytest.approx(-2.0)
        assert H[0, 3] == pytest.approx(0.0)

    def test_block_apply_matches_columns(self, rng):
        H = build_hamiltonian(ModelSpec.tfim(6, 1.1, breaking_field=0.2))
        block = rng.normal(size=(64, 3))
        out = H.apply(block)
        for k in range(3):
            np.testing.assert_array_equal(out[:, k], H.apply(block[:, k]))

    def test_apply_is_deterministic(self, rng):
        H = build_hamiltonian(ModelSpec.xxz(8, 1.0, field_x=0.1))
        v = rng.normal(size=256)
        np.testing.assert_array_equal(H.apply(v), H.apply(v.copy()))

    def test_apply_rejects_wrong_dimension(self):
        H = build_hamiltonian(ModelSpec.xxz(4, 1.0))
        with pytest.raises(ValueError):
            H.apply(np.ones(8))

    def test_linear_operator(self, rng):
        H = build_hamiltonian(ModelSpec.xxz(5, 0.5, boundary="obc"))
        v = rng.normal(size=32)
        np.testing.assert_allclose(H.as_linear_operator() @ v, H.apply(v))

    def test_dense_size_limit(self):
        op = OperatorAction(13, 1.0)
        with pytest.raises(SizeLimitError):
            op.to_dense()


# ============================================================================
# SIMETRIAS E OBSERVÁVEIS
# ============================================================================

def commutator_norm(A, B):
    return np.max(np.abs(A @ B - B @ A))


class TestSymmetries:
    def test_xxz_conserves_magnetization(self):
        H = build_xxz(ModelSpec.xxz(6, 1.2, breaking_field=0.3, field_z=0.1)).to_dense()
        M = total_magnetization(6).to_dense()
        assert commutator_norm(H, M) < 1e-12

    def test_field_x_breaks_magnetization(self):
        H = build_xxz(ModelSpec.xxz(4, 1.0, field_x=0.1)).to_dense()
        assert commutator_norm(H, total_magnetization(4).to_dense()) > 1e-3

    def test_xxz_spin_flip(self):
        H = build_xxz(ModelSpec.xxz(6, 2.0)).to_dense()
        assert commutator_norm(H, global_spin_flip(6).to_dense()) < 1e-12

    def test_staggered_field_breaks_spin_flip(self):
        H = build_xxz(ModelSpec.xxz(6, 2.0, breaking_field=0.1)).to_dense()
        assert commutator_norm(H, global_spin_flip(6).to_dense()) > 1e-3

    def test_tfim_z_rotation(self):
        H = build_tfim(ModelSpec.tfim(6, 0.9)).to_dense()
        assert commutator_norm(H, global_z_rotation(6).to_dense()) < 1e-12

    def test_z2_symmetry_selection(self):
        assert z2_symmetry(ModelSpec.xxz(4, 1.0)).label == "Πσx"
        assert z2_symmetry(ModelSpec.tfim(4, 1.0)).label == "Πσz"
        assert z2_symmetry(ModelSpec.tfim(4, 1.0, breaking_field=0.1)) is None

    def test_sublattice_rotation_flips_xy_sign(self):
        # U H(Δ) U = H(Δ) − 2 H(0): só o termo xy troca de sinal
        lattice = LatticeSpec(6)
        U = sublattice_rotation(lattice).to_dense()
        H = build_xxz(ModelSpec.xxz(6, 1.4)).to_dense()
        H0 = build_xxz(ModelSpec.xxz(6, 0.0)).to_dense()
        np.testing.assert_allclose(U @ H @ U, H - 2 * H0, atol=1e-12)

    def test_pauli_product_matches_kron(self, rng):
        op = pauli_product(4, {0: 'y', 3: 'z'})
        v = rng.normal(size=16) + 1j * rng.normal(size=16)
        np.testing.assert_allclose(op.apply(v), kron_pauli(4, {0: 'y', 3: 'z'}) @ v, atol=1e-14)

    def test_local_operator_non_hermitian(self, rng):
        op = local_operator(3, {1: SIGMA_PLUS})
        v = rng.normal(size=8)
        np.testing.assert_allclose(op.apply(v), kron_operator(3, {1: SIGMA_PLUS}) @ v, atol=1e-14)

    def test_magnetization_of_product_state(self):
        psi = product_state("uuddd")
        M = total_magnetization(5)
        assert np.vdot(psi, M.apply(psi)).real == pytest.approx(-1.0)

# -*- coding: utf-8 -*-
import math
from dataclasses import replace

import numpy as np
import pytest

from spin_entangle.entangle import concurrence
from spin_entangle.errors import CubicRootError, InvalidCorrelatorError
from spin_entangle.model import ModelSpec, build_hamiltonian
from spin_entangle.reduced import CorrelatorSet, correlators_from_rho, reduce_pure, rho_from_correlators
from spin_entangle.solver import solve_ground_state
from spin_entangle.symmetry import (IsingForm, U1BrokenForm, Z2Form, classify_form, concurrence_ising,
                                    concurrence_u1, concurrence_z2, cubic_roots, invariance_residual,
                                    ising_cubic, ising_family, ising_form_from_correlators, kappa_from_roots,
                                    largest_root_is_symmetric, sublattice_flip, symmetric_kappa,
                                    tfim_invariance_condition, u1_form_from_correlators, u1_roots,
                                    xxz_field_kappa, z2_form_from_correlators, z2_symmetrize)
from spin_entangle.verify.generators import random_ising_rho, random_u1_rho, random_z2_rho
from spin_entangle.verify.suites import xxz_field_form

from .conftest import SINGLET, projector

HEISENBERG_NN = (1 - 4 * math.log(2)) / 3

# a = b = 0, maior raiz |B + C_off|
FIELD_FORM = IsingForm(A=0.3, B=0.25, C_off=0.1, D=0.2, F=0.1, a=0.0, b=0.0)
# a = b = 0, maior raiz √(AD) + F
SYMMETRIC_FORM = IsingForm(A=0.35, B=0.2, C_off=0.05, D=0.25, F=0.2, a=0.0, b=0.0)
# bloco simétrico com det M ~ 1e−20: o polinômio expandido de g₀ perde todos os dígitos
NEAR_SINGULAR_FORM = IsingForm(A=0.25926087929824015, B=0.35819905991319045, C_off=-0.33918999652072973,
                               D=0.024341000875378875, F=-0.07943698568041305,
                               a=-0.049628647964284386, b=0.015203385429831438)


def ground_rho(spec, i=0, j=1):
    psi, _ = solve_ground_state(build_hamiltonian(spec))
    return reduce_pure(psi, i, j)


# ============================================================================
# CLASSIFICAÇÃO
# ============================================================================

class TestClassify:
    def test_maximally_mixed_is_z2(self, maximally_mixed):
        result = classify_form(maximally_mixed)
        assert result.kind == "z2"
        assert result.form == Z2Form(0.25, 0.25, 0.0, 0.25, 0.25)

    @pytest.mark.parametrize("generator,kind", [
        (random_z2_rho, "z2"),
        (random_u1_rho, "u1"),
        (random_ising_rho, "ising"),
    ])
    def test_generated_forms(self, rng, generator, kind):
        for _ in range(20):
            assert classify_form(generator(rng)).kind == kind

    def test_general(self, rng):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ g.conj().T
        result = classify_form(rho / np.trace(rho).real)
        assert result.kind == "general"
        assert result.form is None
        assert result.residual > 1e-8

    def test_form_matrices_round_trip(self, rng):
        rho = random_ising_rho(rng)
        np.testing.assert_allclose(classify_form(rho).form.matrix(), rho, atol=1e-14)

    def test_xxz_ground_state_is_z2(self):
        assert classify_form(ground_rho(ModelSpec.xxz(8, 1.5))).kind == "z2"

    def test_tfim_with_breaking_field_is_ising(self):
        assert classify_form(ground_rho(ModelSpec.tfim(8, 0.5, breaking_field=1e-3))).kind == "ising"

    def test_forms_from_correlators_match_rho(self, rng):
        for generator, build in ((random_z2_rho, z2_form_from_correlators),
                                 (random_u1_rho, u1_form_from_correlators),
                                 (random_ising_rho, ising_form_from_correlators)):
            rho = generator(rng)
            form = build(correlators_from_rho(rho))
            assert form.is_valid()
            np.testing.assert_allclose(form.matrix(), rho, atol=1e-12)


# ============================================================================
# Z2 / U(1)
# ============================================================================

class TestZ2:
    @pytest.mark.parametrize("values,expected", [
        (dict(zz=-1.0), 0.0),
        (dict(xx=-1.0, yy=-1.0, zz=-1.0), 1.0),
        (dict(xx=HEISENBERG_NN, yy=HEISENBERG_NN, zz=HEISENBERG_NN), 0.386294),
    ])
    def test_examples(self, values, expected):
        assert concurrence_z2(CorrelatorSet.from_values(**values)) == pytest.approx(expected, abs=1e-6)

    def test_magnetized(self):
        corr = CorrelatorSet.from_values(xx=0.6, yy=0.6, zz=-0.2, zi=0.2)
        expected = 0.5 * (1.2 - math.sqrt(0.8 ** 2 - 0.4 ** 2))
        assert expected > 0.25
        assert concurrence_z2(corr) == pytest.approx(expected)
        assert concurrence(rho_from_correlators(corr)).concurrence == pytest.approx(expected, abs=1e-10)

    def test_invalid_correlators(self):
        with pytest.raises(InvalidCorrelatorError):
            concurrence_z2(CorrelatorSet.from_values(zi=0.8))

    def test_form_validity(self):
        assert Z2Form.from_correlators(CorrelatorSet.from_values(zz=-1.0)).is_valid()
        assert not Z2Form(0.5, 0.25, 0.4, 0.25, 0.0).is_valid()


class TestU1:
    def test_singlet_roots(self):
        roots = u1_roots(CorrelatorSet.from_values(xx=-1.0, yy=-1.0, zz=-1.0))
        assert sorted(roots) == pytest.approx([0.0, 0.0, 0.0, 1.0])

    def test_valid_branch(self):
        corr = CorrelatorSet.from_values(xx=0.5, yy=0.5, zz=-0.2)
        assert u1_roots(corr) == pytest.approx((0.55, 0.2, 0.2, 0.05))
        result = concurrence_u1(corr)
        assert result.branch_valid
        assert result.concurrence == pytest.approx(0.1)
        assert concurrence(rho_from_correlators(corr)).concurrence == pytest.approx(0.1, abs=1e-10)
        np.testing.assert_allclose(U1BrokenForm.from_correlators(corr).matrix(),
                                   U1BrokenForm(0.2, 0.3, 0.25, 0.0, 0.0).matrix(), atol=1e-15)

    def test_two_inequalities_are_not_enough(self):
        # yy + zz > xx − 1 e yy > zz valem, mas v₊ é a maior raiz
        corr = CorrelatorSet.from_values(xx=-0.5, yy=0.8, zz=0.7)
        result = concurrence_u1(corr)
        assert result.upper_sum_positive and result.yy_above_zz
        assert not result.u_plus_largest
        assert result.concurrence is None
        assert result.value == pytest.approx(-0.7)
        assert concurrence(rho_from_correlators(corr)).concurrence == pytest.approx(0.5, abs=1e-10)

    def test_roots_match_general(self, rng):
        for _ in range(20):
            rho = random_u1_rho(rng)
            report = concurrence(rho)
            np.testing.assert_allclose(sorted(u1_roots(correlators_from_rho(rho))), sorted(report.roots),
                                       atol=1e-10)

    def test_sublattice_flip(self):
        corr = CorrelatorSet.from_values(xx=-0.3, yy=-0.3, zz=0.2, xi=0.02)
        flipped = sublattice_flip(corr)
        assert (flipped.xx, flipped.yy, flipped.zz) == pytest.approx((0.3, 0.3, 0.2))
        assert flipped.xi == pytest.approx(0.02)
        assert flipped.xj == pytest.approx(-0.02)
        assert concurrence(rho_from_correlators(flipped)).concurrence == pytest.approx(
            concurrence(rho_from_correlators(corr)).concurrence, abs=1e-10)

    @pytest.mark.parametrize("field_x", [0.0, 0.05, 0.1, 0.2])
    def test_u_plus_largest_along_xxz(self, field_x):
        rho = ground_rho(ModelSpec.xxz(8, 0.5, field_x=field_x))
        assert classify_form(rho).kind in ("z2", "u1")
        result = concurrence_u1(correlators_from_rho(rho))
        assert result.u_plus_largest
        assert result.branch_valid
        assert result.concurrence == pytest.approx(concurrence(rho).concurrence, abs=1e-8)


# ============================================================================
# FORMA ISING
# ============================================================================

class TestIsingCubic:
    def test_symmetric_member_roots(self):
        roots = cubic_roots(ising_cubic(FIELD_FORM))
        root = math.sqrt(0.06)
        np.testing.assert_allclose(roots, sorted([(root - 0.1) ** 2, (root + 0.1) ** 2, 0.35 ** 2]),
                                   atol=1e-12)

    def test_g0_is_det_squared(self, rng):
        for _ in range(20):
            form = classify_form(random_ising_rho(rng)).form
            coeffs = ising_cubic(form)
            assert coeffs.g0 == pytest.approx(form.symmetric_block_det() ** 2, rel=1e-12, abs=1e-30)
            assert coeffs.g0_expanded == pytest.approx(coeffs.g0, abs=1e-12)
            assert form.symmetric_block_det() == pytest.approx(np.linalg.det(form.symmetric_block()), abs=1e-12)

    def test_g0_sign_of_last_term(self):
        # A=1, D=2, F=0, B=C_off=½, a=0, b=1: det M = 0 exige −4ν²γ
        form = IsingForm(A=1.0, B=0.5, C_off=0.5, D=2.0, F=0.0, a=0.0, b=1.0)
        coeffs = ising_cubic(form)
        assert (coeffs.nu, coeffs.gamma) == (-1.0, -1.0)
        assert coeffs.g0 == pytest.approx(0.0)
        assert form.symmetric_block_det() == pytest.approx(0.0)
        flipped = ((coeffs.alpha ** 2 - 4 * coeffs.gamma * coeffs.delta) * coeffs.beta
                   - 4 * coeffs.mu * coeffs.nu * coeffs.alpha - 4 * coeffs.mu ** 2 * coeffs.delta
                   + 4 * coeffs.nu ** 2 * coeffs.gamma)
        assert flipped == pytest.approx(-8.0)

    def test_factored_root(self):
        assert ising_cubic(FIELD_FORM).factored == pytest.approx(0.15 ** 2)

    def test_concurrence_matches_general(self, rng):
        for _ in range(30):
            rho = random_ising_rho(rng)
            form = classify_form(rho).form
            assert concurrence_ising(form).concurrence == pytest.approx(concurrence(rho).concurrence, abs=1e-10)

    def test_rank_one_block(self):
        v = np.array([0.7, 0.4, 0.4, -0.3])
        rho = 0.65 * np.outer(v, v) / (v @ v) + 0.35 * projector(SINGLET).real
        form = classify_form(rho).form
        roots = cubic_roots(ising_cubic(form))
        assert roots[0] < 1e-20 and roots[1] < 1e-20
        assert concurrence_ising(form).concurrence == pytest.approx(concurrence(rho).concurrence, abs=1e-10)

    def test_negative_root_rejected(self):
        # AD < 0: par complexo no bloco simétrico, só uma raiz real
        form = IsingForm(A=0.6, B=0.25, C_off=0.0, D=-0.1, F=0.2, a=0.0, b=0.0)
        with pytest.raises(CubicRootError):
            cubic_roots(ising_cubic(form))

    def test_near_singular_block(self):
        coeffs = ising_cubic(NEAR_SINGULAR_FORM)
        assert 0.0 <= coeffs.g0 < 1e-30
        general = concurrence(NEAR_SINGULAR_FORM.matrix()).concurrence
        assert concurrence_ising(NEAR_SINGULAR_FORM).concurrence == pytest.approx(general, abs=1e-10)
        roots = cubic_roots(coeffs)
        assert invariance_residual(coeffs, kappa_from_roots(roots)) < 1e-10

    def test_rank_two_block(self):
        # ρ = mistura de dois vetores simétricos e do singleto: det M = 0
        v1 = np.array([0.8, 0.3, 0.3, 0.2])
        v2 = np.array([0.1, 0.5, 0.5, -0.4])
        rho = (0.5 * np.outer(v1, v1) / (v1 @ v1) + 0.3 * np.outer(v2, v2) / (v2 @ v2)
               + 0.2 * projector(SINGLET).real)
        classification = classify_form(rho)
        assert classification.kind == "ising"
        form = classification.form
        assert abs(form.symmetric_block_det()) < 1e-15

        coeffs = ising_cubic(form)
        roots = cubic_roots(coeffs)
        assert roots[0] < 1e-20
        assert invariance_residual(coeffs, kappa_from_roots(roots)) < 1e-10
        assert concurrence_ising(form).concurrence == pytest.approx(concurrence(rho).concurrence, abs=1e-10)

    @pytest.mark.parametrize("hz,h", [(0.2, 1e-3), (0.2, 1e-4), (0.4, 1e-4)])
    def test_tfim_ground_state_matches_general(self, hz, h):
        rho = ground_rho(ModelSpec.tfim(8, hz, breaking_field=h))
        classification = classify_form(rho)
        assert classification.kind == "ising"
        closed = concurrence_ising(classification.form).concurrence
        assert closed == pytest.approx(concurrence(rho).concurrence, abs=1e-9)


class TestInvariance:
    def test_kappa_from_roots_solves_condition(self, rng):
        for _ in range(20):
            form = classify_form(random_ising_rho(rng)).form
            coeffs = ising_cubic(form)
            assert invariance_residual(coeffs, kappa_from_roots(cubic_roots(coeffs))) < 1e-8

    def test_symmetric_kappa_on_symmetric_member(self):
        coeffs = ising_cubic(SYMMETRIC_FORM)
        assert largest_root_is_symmetric(SYMMETRIC_FORM)
        assert symmetric_kappa(SYMMETRIC_FORM) == pytest.approx(0.15)
        assert kappa_from_roots(cubic_roots(coeffs)) == pytest.approx(0.15, abs=1e-10)
        assert invariance_residual(coeffs, symmetric_kappa(SYMMETRIC_FORM)) < 1e-10

    def test_field_kappa_on_field_member(self):
        coeffs = ising_cubic(FIELD_FORM)
        assert not largest_root_is_symmetric(FIELD_FORM)
        assert kappa_from_roots(cubic_roots(coeffs)) == pytest.approx(xxz_field_kappa(FIELD_FORM), abs=1e-10)
        assert invariance_residual(coeffs, xxz_field_kappa(FIELD_FORM)) < 1e-10

    def test_negative_g0_rejected(self):
        form = IsingForm(A=1.0, B=0.5, C_off=0.5, D=2.0, F=0.0, a=0.0, b=1.0)
        coeffs = ising_cubic(form)
        broken = replace(coeffs, g0=-1.0)
        with pytest.raises(InvalidCorrelatorError):
            invariance_residual(broken, 0.0)

    def test_family_keeps_even_entries(self, rng):
        form = classify_form(random_ising_rho(rng)).form
        member = ising_family(form, 0.5)
        assert (member.A, member.B, member.C_off, member.D, member.F) == \
            (form.A, form.B, form.C_off, form.D, form.F)
        assert member.a == pytest.approx(0.5 * form.a)
        symmetric = z2_symmetrize(form)
        assert symmetric.a == 0.0 and symmetric.b == 0.0
        assert symmetric.is_valid()

    def test_kappa_constant_along_tfim_family(self):
        form = classify_form(ground_rho(ModelSpec.tfim(8, 0.4, breaking_field=1e-3))).form
        symmetric = z2_symmetrize(form)
        assert largest_root_is_symmetric(symmetric)
        reference = symmetric_kappa(symmetric)
        for t in (0.0, 0.25, 0.5, 1.0):
            kappa = kappa_from_roots(cubic_roots(ising_cubic(ising_family(form, t))))
            assert kappa == pytest.approx(reference, abs=1e-8)

    def test_xxz_uniform_field_breaks_invariance(self):
        form = xxz_field_form(8, 0.5, 0.5, 0.3)
        assert min(abs(form.a), abs(form.b), abs(form.F)) > 1e-6
        symmetric = z2_symmetrize(form)
        residual = invariance_residual(ising_cubic(form), xxz_field_kappa(symmetric))
        assert residual > 1e-8


class TestTfimCondition:
    def test_trivial_states(self):
        assert not tfim_invariance_condition(CorrelatorSet.from_values(xx=-1.0, yy=-1.0, zz=-1.0))
        assert not tfim_invariance_condition(CorrelatorSet.from_values(zz=1.0, zi=1.0, zj=1.0))

    def test_equivalent_to_largest_root(self, rng):
        for _ in range(50):
            rho = random_ising_rho(rng)
            form = classify_form(rho).form
            margin = math.sqrt(form.A * form.D) + form.F - (form.B + form.C_off)
            if abs(margin) < 1e-9:
                continue
            assert tfim_invariance_condition(correlators_from_rho(rho)) == (margin > 0)

    @pytest.mark.parametrize("hz", [0.3, 1.0, 1.8])
    def test_holds_on_tfim_ground_state(self, hz):
        assert tfim_invariance_condition(correlators_from_rho(ground_rho(ModelSpec.tfim(8, hz))))

    def test_invalid_magnetization(self):
        with pytest.raises(InvalidCorrelatorError):
            tfim_invariance_condition(CorrelatorSet.from_values(zi=0.9, zj=0.9))

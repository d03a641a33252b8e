# -*- coding: utf-8 -*-
"""
Varreduras de aceitação (N até 16). Rodar com: pytest -m slow
"""

import math

import pytest

from spin_entangle.model import ModelSpec, build_hamiltonian
from spin_entangle.reduced import correlators_from_rho, reduce_pure
from spin_entangle.solver import solve_ground_state
from spin_entangle.sweep import SweepConfig, sweep
from spin_entangle.symmetry import (classify_form, cubic_roots, invariance_residual, ising_cubic,
                                    ising_family, kappa_from_roots, largest_root_is_symmetric,
                                    symmetric_kappa, tfim_invariance_condition, xxz_field_kappa,
                                    z2_symmetrize)
from spin_entangle.verify import SUITES, run_suite
from spin_entangle.verify.suites import xxz_field_form

pytestmark = pytest.mark.slow

HEISENBERG_C = 0.386
TFIM_GRID = (0.2, 0.4, 0.6, 0.8, 0.9, 1.0, 1.1, 1.25, 1.5, 1.75, 2.0)
CRITICAL_WINDOW = (0.8, 1.25)


def table(rows):
    return {(row['param'], row['r'], row['h_break']): row for row in rows}


def nn_form(spec):
    psi, _ = solve_ground_state(build_hamiltonian(spec))
    rho = reduce_pure(psi, 0, 1)
    return rho, classify_form(rho)


# ============================================================================
# XXZ
# ============================================================================

def test_heisenberg_point():
    values = {}
    for n in (8, 12, 16):
        config = SweepConfig(model="xxz", sites=n, grid=(1.0,), breaking_fields=(0.0,))
        row = sweep(config).rows[0]
        assert row['status'] == 'sucesso'
        values[n] = row['C_general']
    assert abs(values[16] - HEISENBERG_C) < 0.01
    # convergência por cima em N
    assert values[8] > values[12] > values[16]


def test_xxz_symmetry_breaking_invariance():
    config = SweepConfig(model="xxz", sites=16, grid=(1.0, 1.5, 2.0, 3.0), separations=(1, 2, 3),
                         breaking_fields=(0.0, 1e-3))
    rows = table(sweep(config).rows)
    for delta in config.grid:
        for r in config.separations:
            symmetric = rows[(delta, r, 0.0)]['C_general']
            broken = rows[(delta, r, 1e-3)]['C_general']
            assert abs(broken - symmetric) < 5e-3, (delta, r)


def test_xxz_discrepancy_shrinks_with_field():
    fields = (0.0, 1e-3, 1e-4, 1e-5)
    config = SweepConfig(model="xxz", sites=16, grid=(2.0,), breaking_fields=fields)
    rows = table(sweep(config).rows)
    symmetric = rows[(2.0, 1, 0.0)]['C_general']
    gaps = [abs(rows[(2.0, 1, h)]['C_general'] - symmetric) for h in fields[1:]]
    assert gaps[0] > gaps[1]
    assert gaps[2] <= gaps[1] + 1e-9


def test_xxz_decay_with_separation():
    config = SweepConfig(model="xxz", sites=16, grid=(1.0, 1.5, 2.0), separations=(1, 2, 3),
                         breaking_fields=(0.0,))
    rows = table(sweep(config).rows)
    c1, c2, c3 = (rows[(1.0, r, 0.0)]['C_general'] for r in (1, 2, 3))
    # no ponto de Heisenberg C(r=2) já é nulo
    assert c1 > c2 >= c3
    for delta in (1.5, 2.0):
        assert rows[(delta, 3, 0.0)]['C_general'] < 0.01


# ============================================================================
# ISING TRANSVERSA
# ============================================================================

def test_tfim_invariance_outside_critical_window():
    fields = (0.0, 1e-3, 1e-4, 1e-5)
    config = SweepConfig(model="tfim", sites=12, grid=TFIM_GRID, breaking_fields=fields)
    rows = table(sweep(config).rows)

    worst, worst_hz = -1.0, None
    for hz in TFIM_GRID:
        symmetric = rows[(hz, 1, 0.0)]
        assert symmetric['tfim_condition'] is True, hz
        diff = abs(rows[(hz, 1, 1e-3)]['C_general'] - symmetric['C_general'])
        if not CRITICAL_WINDOW[0] <= hz <= CRITICAL_WINDOW[1]:
            assert diff < 1e-2, hz
        for row in (rows[(hz, 1, h)] for h in fields):
            assert row['status'] == 'sucesso', (hz, row['erro'])
            assert row['C_closed_form'] == pytest.approx(row['C_general'], abs=1e-9)
        if diff > worst:
            worst, worst_hz = diff, hz

    symmetric = rows[(worst_hz, 1, 0.0)]['C_general']
    gaps = [abs(rows[(worst_hz, 1, h)]['C_general'] - symmetric) for h in fields[1:]]
    assert gaps[0] > gaps[1]
    assert gaps[2] <= gaps[1] + 1e-9


@pytest.mark.parametrize("hz", [0.4, 0.6, 1.5, 2.0])
def test_tfim_kappa_constant_along_family(hz):
    _, classification = nn_form(ModelSpec.tfim(12, hz, breaking_field=1e-3))
    form = classification.form
    assert classification.kind == "ising"
    symmetric = z2_symmetrize(form)
    assert largest_root_is_symmetric(symmetric)

    reference = symmetric_kappa(symmetric)
    for t in (0.0, 0.5, 1.0):
        member = ising_family(form, t)
        coeffs = ising_cubic(member)
        assert kappa_from_roots(cubic_roots(coeffs)) == pytest.approx(reference, abs=1e-8)
        assert invariance_residual(coeffs, symmetric_kappa(member)) < 1e-8


def test_tfim_condition_on_ground_states():
    for hz in TFIM_GRID:
        psi, _ = solve_ground_state(build_hamiltonian(ModelSpec.tfim(12, hz)))
        assert tfim_invariance_condition(correlators_from_rho(reduce_pure(psi, 0, 1))), hz


def test_xxz_uniform_field_breaks_invariance():
    residuals = []
    for field_x in (0.25, 0.5, 0.75):
        form = xxz_field_form(12, 0.5, field_x, 0.3)
        assert min(abs(form.a), abs(form.b), abs(form.F)) > 1e-6
        coeffs = ising_cubic(form)
        residuals.append(invariance_residual(coeffs, xxz_field_kappa(z2_symmetrize(form))))
    assert all(math.isfinite(r) for r in residuals)
    assert max(residuals) >= 1e-4


# ============================================================================
# SUÍTES COMPLETAS
# ============================================================================

@pytest.mark.parametrize("name", list(SUITES))
def test_full_property_suites(name):
    result = run_suite(name)
    assert result.trials >= 200
    assert result.passed, result.details

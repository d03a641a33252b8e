#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/verify/suites.py
💾 FUNÇÃO: Suítes de propriedades (formas fechadas contra o caminho geral)
🔧 DESCRIÇÃO: Cada suíte sorteia instâncias válidas com um Generator semeado,
              compara com a concorrência geral e devolve um SuiteResult com
              contagem de falhas e pior resíduo
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from ..entangle import (concurrence, concurrence_nonhermitian, convexity_check,
                        mixture_concurrence, pure_state_concurrence)
from ..errors import InvalidCorrelatorError, SpinEntangleError
from ..model import ModelSpec, build_hamiltonian
from ..reduced import CorrelatorSet, correlators_from_rho, reduce_pure
from ..solver import SolverOptions, solve_ground_state
from ..symmetry import (IsingForm, classify_form, concurrence_ising, concurrence_u1, concurrence_z2,
                        cubic_roots, invariance_residual, ising_cubic, ising_family,
                        kappa_from_roots, largest_root_is_symmetric, symmetric_kappa,
                        tfim_invariance_condition, u1_roots, xxz_field_kappa, z2_symmetrize)
from .generators import (random_density_matrix, random_ising_rho, random_local_unitary,
                         random_mixture_pair, random_pure_state, random_u1_rho, random_z2_rho)

logger = logging.getLogger(__name__)

CLOSED_FORM_TOL = 1e-10
RANK_DEFICIENT_TOL = 1e-6
MIXTURE_TOL = 1e-9
CONVEXITY_SLACK = 1e-9
NEGATIVE_CONTROL_MIN = 1e-4
# Pontos dentro dessa distância da fronteira da condição não contam como divergência
CONDITION_DEADBAND = 1e-9

TFIM_CHECK_SITES = 8
TFIM_CHECK_GRID = tuple(round(0.2 * k, 10) for k in range(1, 11))
# (Δ, field_x, field_z) do controle negativo: XXZ com campo uniforme
FIELD_CONTROL_FAMILIES = ((0.5, 0.25, 0.3), (0.5, 0.5, 0.3), (0.5, 0.75, 0.3), (1.0, 0.5, 0.3))


@dataclass
class SuiteResult:
    name: str
    trials: int
    failures: int = 0
    worst_residual: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.name,
            'status': 'sucesso' if self.passed else 'erro',
            'trials': self.trials,
            'failures': self.failures,
            'worst_residual': self.worst_residual,
            'details': self.details,
        }


class _Tally:
    """Acumula resíduos por verificação; falha quando resíduo > tolerância ou NaN"""

    def __init__(self, name: str, trials: int):
        self.result = SuiteResult(name, trials)
        self.worst: Dict[str, float] = {}

    def record(self, label: str, residual: float, tol: float) -> bool:
        residual = float(residual)
        ok = math.isfinite(residual) and residual <= tol
        self.worst[label] = max(self.worst.get(label, 0.0), residual if math.isfinite(residual) else math.inf)
        self.result.worst_residual = max(self.result.worst_residual, self.worst[label])
        if not ok:
            self.fail(label, f"resíduo {residual:.3e} > {tol:.0e}")
        return ok

    def fail(self, label: str, message: str):
        self.result.failures += 1
        if self.result.failures <= 5:
            logger.warning(f"⚠️ [{self.result.name}] {label}: {message}")

    def count(self, key: str, amount: int = 1):
        self.result.details[key] = self.result.details.get(key, 0) + amount

    def finish(self) -> SuiteResult:
        self.result.details['worst_by_check'] = dict(self.worst)
        status = "✅" if self.result.passed else "❌"
        logger.info(
            f"{status} Suíte {self.result.name}: {self.result.trials} tentativas, "
            f"{self.result.failures} falhas, pior resíduo {self.result.worst_residual:.3e}"
        )
        return self.result


def _sorted_roots(report) -> np.ndarray:
    return np.sort(np.asarray(report.roots))


# ============================================================================
# SUÍTES
# ============================================================================

def suite_wootters(rng: np.random.Generator, trials: int) -> SuiteResult:
    """
    Valores singulares contra autovalores de ρρ̃, invariância local e estados puros
    """
    tally = _Tally("wootters", trials)
    for _ in range(trials):
        rank = int(rng.integers(1, 5))
        rho = random_density_matrix(rng, rank)
        tol = CLOSED_FORM_TOL * 10 if rank == 4 else RANK_DEFICIENT_TOL
        c = concurrence(rho).concurrence
        tally.record("oracle", abs(c - concurrence_nonhermitian(rho).concurrence), tol)

        u = random_local_unitary(rng)
        tally.record("local_unitary", abs(c - concurrence(u @ rho @ u.conj().T).concurrence), 1e-8)

        psi = random_pure_state(rng)
        pure = concurrence(np.outer(psi, psi.conj())).concurrence
        tally.record("pure", abs(pure - pure_state_concurrence(psi)), 1e-9)
        tally.count("rank_%d" % rank)
    return tally.finish()


def suite_mixture(rng: np.random.Generator, trials: int) -> SuiteResult:
    """min{c, |d|} contra o caminho geral para pares simétricos"""
    tally = _Tally("mixture", trials)
    for _ in range(trials):
        plus, minus = random_mixture_pair(rng)
        rho = 0.5 * (np.outer(plus, plus.conj()) + np.outer(minus, minus.conj()))
        try:
            closed = mixture_concurrence(plus, minus)
        except SpinEntangleError as e:
            tally.fail("hypothesis", str(e))
            continue
        tally.record("mixture", abs(closed - concurrence(rho).concurrence), MIXTURE_TOL)
    return tally.finish()


def suite_convexity(rng: np.random.Generator, trials: int) -> SuiteResult:
    tally = _Tally("convexity", trials)
    for _ in range(trials):
        diagnostic = convexity_check(random_density_matrix(rng), random_density_matrix(rng),
                                     slack=CONVEXITY_SLACK)
        tally.record("convexity", max(0.0, -diagnostic.margin), CONVEXITY_SLACK)
        if diagnostic.mixture < diagnostic.average - 1e-6:
            tally.count("strict")
    return tally.finish()


def suite_z2(rng: np.random.Generator, trials: int) -> SuiteResult:
    tally = _Tally("z2", trials)
    for _ in range(trials):
        rho = random_z2_rho(rng)
        if classify_form(rho).kind != "z2":
            tally.fail("classify", "forma Z2 não reconhecida")
            continue
        corr = correlators_from_rho(rho)
        general = concurrence(rho).concurrence
        tally.record("eq_z2", abs(concurrence_z2(corr) - general), CLOSED_FORM_TOL)
        if general > 0:
            tally.count("entangled")
    return tally.finish()


def suite_u1(rng: np.random.Generator, trials: int) -> SuiteResult:
    """
    Multiconjunto u±, v± e a forma ½(xx + yy − zz − 1) quando as três
    condições do ramo valem
    """
    tally = _Tally("u1", trials)
    for _ in range(trials):
        rho = random_u1_rho(rng)
        if classify_form(rho).kind != "u1":
            tally.fail("classify", "forma U(1) não reconhecida")
            continue
        corr = correlators_from_rho(rho)
        report = concurrence(rho)
        tally.record("roots", np.max(np.abs(np.sort(u1_roots(corr)) - _sorted_roots(report))),
                     CLOSED_FORM_TOL)

        flags = concurrence_u1(corr)
        if flags.branch_valid:
            tally.count("branch_valid")
            tally.record("eq_u1", abs(flags.concurrence - report.concurrence), CLOSED_FORM_TOL)
        elif flags.upper_sum_positive and flags.yy_above_zz:
            tally.count("two_flags_only")
            if abs(max(0.0, flags.value) - report.concurrence) > 1e-8:
                tally.count("two_flags_only_mismatch")
    return tally.finish()


def suite_ising(rng: np.random.Generator, trials: int) -> SuiteResult:
    """
    Autoconsistência da cúbica, g₀ = det(M)², concorrência pela cúbica,
    resíduo da condição de invariância com κ = 2F − (B + C_off) e a
    equivalência "√(AD) + F é a maior raiz" observada
    """
    tally = _Tally("ising", trials)
    for _ in range(trials):
        rho = random_ising_rho(rng)
        classification = classify_form(rho)
        if classification.kind != "ising":
            tally.fail("classify", f"forma {classification.kind} em vez de ising")
            continue
        form = classification.form
        coeffs = ising_cubic(form)
        try:
            roots = cubic_roots(coeffs)
        except SpinEntangleError as e:
            tally.fail("cubic", str(e))
            continue

        e1, e2, e3 = sum(roots), roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2], \
            roots[0] * roots[1] * roots[2]
        scale = max(1.0, abs(coeffs.g2))
        tally.record("symmetric_functions",
                     max(abs(e1 - coeffs.g2), abs(e2 - coeffs.g1), abs(e3 - coeffs.g0)) / scale,
                     CLOSED_FORM_TOL)
        tally.record("g0_det", abs(coeffs.g0_expanded - coeffs.g0), CLOSED_FORM_TOL)
        tally.record("eq_ising", abs(concurrence_ising(form).concurrence - concurrence(rho).concurrence),
                     CLOSED_FORM_TOL)
        tally.record("kappa_roots", invariance_residual(coeffs, kappa_from_roots(roots)), 1e-8)
        tally.record("kappa_symmetric", invariance_residual(coeffs, symmetric_kappa(form)), CLOSED_FORM_TOL)

        symmetric = z2_symmetrize(form)
        largest = largest_root_is_symmetric(symmetric)
        try:
            kappa_zero = kappa_from_roots(cubic_roots(ising_cubic(symmetric)))
            kappas = [kappa_from_roots(cubic_roots(ising_cubic(ising_family(form, t))))
                      for t in (0.25, 0.5)]
        except SpinEntangleError as e:
            tally.fail("family", str(e))
            continue
        matches = abs(kappa_zero - symmetric_kappa(symmetric)) < 1e-9
        tally.count("largest_symmetric" if largest else "largest_other")
        if largest and not matches:
            tally.fail("largest_root", "√(AD) + F maior mas κ ≠ 2F − (B + C_off)")
        if matches != largest:
            tally.count("equivalence_exceptions")

        if largest:
            spread = max(abs(k - kappa_zero) for k in kappas + [kappa_from_roots(roots)])
            tally.count("kappa_constant" if spread < 1e-8 else "kappa_varied")
    return tally.finish()


def xxz_field_form(num_sites: int, delta: float, field_x: float, field_z: float,
                   opts: Optional[SolverOptions] = None) -> IsingForm:
    """
    Forma Ising de ρ₀₁ no estado fundamental do XXZ com campo uniforme

    Raises:
        InvalidCorrelatorError: ρ sem o padrão Ising
    """
    spec = ModelSpec.xxz(num_sites, delta, field_x=field_x, field_z=field_z)
    psi, _report = solve_ground_state(build_hamiltonian(spec), opts or SolverOptions())
    classification = classify_form(reduce_pure(psi, 0, 1))
    if classification.kind != "ising":
        raise InvalidCorrelatorError(f"❌ XXZ com campo deu forma {classification.kind}")
    return classification.form


def _tfim_nn_correlators(hz: float, opts: SolverOptions) -> CorrelatorSet:
    spec = ModelSpec.tfim(TFIM_CHECK_SITES, hz)
    psi, _report = solve_ground_state(build_hamiltonian(spec), opts)
    return correlators_from_rho(reduce_pure(psi, 0, 1))


def suite_conditions(rng: np.random.Generator, trials: int) -> SuiteResult:
    """
    Condição em correlações ⟺ √(AD) + F > B + C_off, casos triviais,
    controle negativo no estado fundamental do XXZ com campos uniformes e a
    grade ED da Ising transversa
    """
    tally = _Tally("conditions", trials)

    singlet = CorrelatorSet.from_values(xx=-1.0, yy=-1.0, zz=-1.0)
    polarized = CorrelatorSet.from_values(zz=1.0, zi=1.0, zj=1.0)
    for label, corr in (("singlet", singlet), ("polarized", polarized)):
        if tfim_invariance_condition(corr):
            tally.fail(label, "condição deveria ser falsa")

    for _ in range(trials):
        rho = random_ising_rho(rng)
        form = classify_form(rho).form
        if form is None:
            tally.fail("classify", "forma Ising não reconhecida")
            continue
        corr = correlators_from_rho(rho)
        margin = math.sqrt(max(form.A * form.D, 0.0)) + form.F - (form.B + form.C_off)
        if abs(margin) < CONDITION_DEADBAND:
            tally.count("boundary")
            continue
        if tfim_invariance_condition(corr) != (margin > 0):
            tally.fail("equivalence", f"condição diverge do critério em ρ (margem {margin:.3e})")
        tally.count("condition_true" if margin > 0 else "condition_false")

    opts = SolverOptions()
    control = 0.0
    for delta, field_x, field_z in FIELD_CONTROL_FAMILIES:
        try:
            form = xxz_field_form(TFIM_CHECK_SITES, delta, field_x, field_z, opts)
        except SpinEntangleError as e:
            tally.fail(f"xxz_field_{field_x:g}", str(e))
            continue
        residual = invariance_residual(ising_cubic(form), xxz_field_kappa(z2_symmetrize(form)))
        tally.count("field_families")
        control = max(control, residual)
    tally.result.details['negative_control_residual'] = control
    if control < NEGATIVE_CONTROL_MIN:
        tally.fail("negative_control", f"resíduo {control:.3e} < {NEGATIVE_CONTROL_MIN:.0e}")

    for hz in TFIM_CHECK_GRID:
        try:
            corr = _tfim_nn_correlators(hz, opts)
        except SpinEntangleError as e:
            tally.fail(f"tfim_{hz:g}", str(e))
            continue
        if not tfim_invariance_condition(corr):
            tally.fail(f"tfim_{hz:g}", "condição falsa na Ising transversa")
    tally.result.details['tfim_grid'] = list(TFIM_CHECK_GRID)
    return tally.finish()

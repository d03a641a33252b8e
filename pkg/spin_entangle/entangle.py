#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/entangle.py
💾 FUNÇÃO: Concorrência de Wootters e emaranhamento de formação
🔧 DESCRIÇÃO: ρ̃ = (σʸ⊗σʸ) ρ* (σʸ⊗σʸ); √λ como valores singulares de √ρ·√ρ̃;
              fórmula da mistura de dois estados puros;
              diagnóstico de convexidade
"""

import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
import scipy.linalg
from scipy.special import entr

from .errors import DensityMatrixError, HypothesisError
from .pauli import SIGMA_YY
from .reduced import TwoSiteDensityMatrix

logger = logging.getLogger(__name__)

CLIP_TOL = 1e-12
NEGATIVE_TOL = 1e-9
# C a menos disso de 0 ou 1 vira exatamente 0 ou 1
SNAP_TOL = 1e-12
# Autovalores de ρ abaixo disso (relativo ao maior) contam como núcleo
RANK_TOL = 64 * np.finfo(float).eps

RhoLike = Union[TwoSiteDensityMatrix, np.ndarray]


def _entries(rho: RhoLike) -> np.ndarray:
    if isinstance(rho, TwoSiteDensityMatrix):
        return rho.entries
    return np.asarray(rho, dtype=complex)


@dataclass(frozen=True)
class ConcurrenceReport:
    """√λ em ordem decrescente, C, E_f e x = ½ + √(1 − C²)/2"""

    roots: Tuple[float, float, float, float]
    concurrence: float
    eof: float
    ef_argument: float


def entanglement_of_formation(c: float) -> float:
    """
    E_f = −x log₂x − (1−x) log₂(1−x), x = ½ + √(1 − C²)/2

    E_f(0) = 0 e E_f(1) = 1 exatos.
    """
    if c <= 0.0:
        return 0.0
    if c >= 1.0:
        return 1.0
    x = 0.5 + 0.5 * np.sqrt(1.0 - c * c)
    return float((entr(x) + entr(1.0 - x)) / np.log(2.0))


def _ef_argument(c: float) -> float:
    c = min(max(c, 0.0), 1.0)
    return float(0.5 + 0.5 * np.sqrt(1.0 - c * c))


def report_from_roots(roots: np.ndarray) -> ConcurrenceReport:
    roots = np.sort(np.asarray(roots, dtype=float))[::-1]
    c = float(roots[0] - roots[1] - roots[2] - roots[3])
    if c < SNAP_TOL:
        c = 0.0
    elif c > 1.0 - SNAP_TOL:
        c = 1.0
    return ConcurrenceReport(
        roots=tuple(float(r) for r in roots),
        concurrence=c,
        eof=entanglement_of_formation(c),
        ef_argument=_ef_argument(c),
    )


def spin_flip_matrix(rho: RhoLike) -> np.ndarray:
    m = _entries(rho)
    return SIGMA_YY @ m.conj() @ SIGMA_YY


def spin_flip(rho: TwoSiteDensityMatrix) -> TwoSiteDensityMatrix:
    """ρ̃ = (σʸ⊗σʸ) ρ* (σʸ⊗σʸ)"""
    return TwoSiteDensityMatrix.from_array(spin_flip_matrix(rho), rho.site_i, rho.site_j)


def _clip(values: np.ndarray, what: str) -> np.ndarray:
    values = np.real(np.asarray(values))
    smallest = float(values.min())
    if smallest < -NEGATIVE_TOL:
        raise DensityMatrixError(f"❌ Autovalor negativo de {what}: {smallest:.3e}")
    if smallest < -CLIP_TOL:
        logger.debug(f"⚠️ Autovalor {smallest:.3e} de {what} arredondado para zero")
    return np.clip(values, 0.0, None)


def _sqrt_psd(m: np.ndarray) -> np.ndarray:
    w, u = scipy.linalg.eigh(m)
    w = _clip(w, "ρ")
    w[w < RANK_TOL * max(w[-1], 1e-300)] = 0.0
    return (u * np.sqrt(w)) @ u.conj().T


def concurrence(rho: RhoLike) -> ConcurrenceReport:
    """
    C = max{0, √λ₁ − √λ₂ − √λ₃ − √λ₄}, λ autovalores de ρρ̃

    √λ são os valores singulares de √ρ·√ρ̃, com √ρ̃ = (σʸ⊗σʸ)(√ρ)*(σʸ⊗σʸ):
    (√ρ√ρ̃)(√ρ√ρ̃)† = √ρ ρ̃ √ρ tem o espectro de ρρ̃. Raízes pequenas saem
    com erro absoluto de arredondamento, sem a perda do √ sobre autovalores.

    Raises:
        DensityMatrixError: autovalor de ρ < −1e−9
    """
    m = _entries(rho)
    root = _sqrt_psd(m)
    return report_from_roots(scipy.linalg.svdvals(root @ spin_flip_matrix(root)))


def concurrence_nonhermitian(rho: RhoLike) -> ConcurrenceReport:
    """
    Mesmo resultado por autovalores gerais de ρρ̃ (caminho independente)

    Autovalores nulos repetidos deixam raízes com erro ~1e−8.
    """
    m = _entries(rho)
    squares = _clip(np.linalg.eigvals(m @ spin_flip_matrix(m)), "ρρ̃")
    return report_from_roots(np.sqrt(squares))


# ============================================================================
# ESTADOS PUROS E MISTURAS
# ============================================================================

def spin_flip_state(psi: np.ndarray) -> np.ndarray:
    """|ψ̃⟩ = σʸ⊗σʸ |ψ*⟩"""
    return SIGMA_YY @ np.asarray(psi, dtype=complex).conj()


def pure_state_concurrence(psi: np.ndarray) -> float:
    """C = |⟨ψ|ψ̃⟩|"""
    psi = np.asarray(psi, dtype=complex)
    return float(abs(np.vdot(psi, spin_flip_state(psi))))


def mixture_concurrence(alpha_plus: np.ndarray, alpha_minus: np.ndarray, tol: float = 1e-10) -> float:
    """
    C((|α₊⟩⟨α₊| + |α₋⟩⟨α₋|)/2) = min{c, |d|}

    c = |⟨α₊|α̃₊⟩| = |⟨α₋|α̃₋⟩|, d = ⟨α₊|α̃₋⟩. Os √λ só valem |c ± |d||/2 quando
    a matriz G_kl = ⟨α_k|α̃_l⟩ tem |det G| = |c² − |d|²|.

    Raises:
        HypothesisError: estados não normalizados, concorrências diferentes
            ou fases de G desalinhadas
    """
    plus = np.asarray(alpha_plus, dtype=complex)
    minus = np.asarray(alpha_minus, dtype=complex)
    for name, state in (("α₊", plus), ("α₋", minus)):
        if state.shape != (4,):
            raise HypothesisError(f"❌ {name} deve ter 4 amplitudes")
        if abs(np.linalg.norm(state) - 1.0) > tol:
            raise HypothesisError(f"❌ {name} não normalizado")

    g_pp = np.vdot(plus, spin_flip_state(plus))
    g_mm = np.vdot(minus, spin_flip_state(minus))
    d = np.vdot(plus, spin_flip_state(minus))

    c_plus, c_minus = abs(g_pp), abs(g_mm)
    if abs(c_plus - c_minus) > tol:
        raise HypothesisError(
            f"❌ Concorrências puras diferentes: {c_plus:.12g} vs {c_minus:.12g}"
        )
    c = 0.5 * (c_plus + c_minus)

    det_g = abs(g_pp * g_mm - d * d)
    if abs(det_g - abs(c * c - abs(d) ** 2)) > tol:
        raise HypothesisError("❌ Fases de ⟨α₊|α̃₊⟩⟨α₋|α̃₋⟩ e d² desalinhadas")

    return float(min(c, abs(d)))


@dataclass(frozen=True)
class ConvexityDiagnostic:
    mixture: float
    average: float
    passed: bool

    @property
    def margin(self) -> float:
        """average − mixture (≥ 0 quando a convexidade vale)"""
        return self.average - self.mixture


def convexity_check(rho_plus: RhoLike, rho_minus: RhoLike, slack: float = 1e-10) -> ConvexityDiagnostic:
    """C((ρ₊ + ρ₋)/2) ≤ ½(C(ρ₊) + C(ρ₋))"""
    mixed = 0.5 * (_entries(rho_plus) + _entries(rho_minus))
    mixture = concurrence(mixed).concurrence
    average = 0.5 * (concurrence(rho_plus).concurrence + concurrence(rho_minus).concurrence)
    passed = mixture <= average + slack
    if not passed:
        logger.error(f"❌ Convexidade violada: {mixture:.12g} > {average:.12g}")
    return ConvexityDiagnostic(mixture=mixture, average=average, passed=passed)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/verify/generators.py
💾 FUNÇÃO: Geradores aleatórios de matrizes densidade e estados de dois spins
🔧 DESCRIÇÃO: Formas estruturadas obtidas por média sobre o grupo de simetria
              do padrão, o que preserva positividade e traço
"""

import numpy as np
from scipy.stats import unitary_group

from ..pauli import SIGMA_X, SIGMA_YY, SIGMA_Z

SWAP = np.eye(4, dtype=complex)[[0, 2, 1, 3]]
FLIP_XX = np.kron(SIGMA_X, SIGMA_X)
TRIPLET_ZERO = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2)


def random_pure_state(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return v / np.linalg.norm(v)


def random_density_matrix(rng: np.random.Generator, rank: int = 0) -> np.ndarray:
    """ρ = GG†/Tr com G gaussiano 4×rank (rank 0 → sorteado em 1..4)"""
    rank = rank or int(rng.integers(1, 5))
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = g @ g.conj().T
    return rho / np.real(np.trace(rho))


def random_local_unitary(rng: np.random.Generator) -> np.ndarray:
    """U ⊗ V com U, V de Haar em U(2)"""
    u = unitary_group.rvs(2, random_state=rng)
    v = unitary_group.rvs(2, random_state=rng)
    return np.kron(u, v)


def _group_average(rho: np.ndarray, group) -> np.ndarray:
    return sum(g @ rho @ g.conj().T for g in group) / len(group)


def project_z2(rho: np.ndarray) -> np.ndarray:
    """Mantém só os blocos de magnetização fixa (padrão Z2/U(1) simétrico), parte real"""
    mask = np.zeros((4, 4), dtype=bool)
    mask[np.diag_indices(4)] = True
    mask[1, 2] = mask[2, 1] = True
    return np.where(mask, np.real(rho), 0.0).astype(complex)


def project_u1(rho: np.ndarray) -> np.ndarray:
    """Média sobre {1, SWAP, σˣσˣ, SWAP·σˣσˣ} e parte real"""
    averaged = _group_average(rho, (np.eye(4), SWAP, FLIP_XX, SWAP @ FLIP_XX))
    return np.real(averaged).astype(complex)


def project_ising(rho: np.ndarray) -> np.ndarray:
    """Média sobre {1, SWAP} e parte real"""
    averaged = _group_average(rho, (np.eye(4), SWAP))
    return np.real(averaged).astype(complex)


def random_z2_rho(rng: np.random.Generator) -> np.ndarray:
    return project_z2(random_density_matrix(rng))


def random_u1_rho(rng: np.random.Generator) -> np.ndarray:
    """
    Metade genérica, metade misturada com o tripleto |↑↓⟩ + |↓↑⟩ (xy
    ferromagnético, onde o ramo fechado vale)
    """
    rho = random_density_matrix(rng)
    if rng.random() < 0.5:
        p = rng.uniform(0.3, 0.95)
        rho = p * np.outer(TRIPLET_ZERO, TRIPLET_ZERO.conj()) + (1 - p) * rho
    return project_u1(rho)


def random_ising_rho(rng: np.random.Generator) -> np.ndarray:
    return project_ising(random_density_matrix(rng))


def ry(angle: float) -> np.ndarray:
    """exp(−iθσʸ/2), real"""
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


# S real com S·σʸ⊗σʸ = ±σʸ⊗σʸ·S e fase de G alinhada para φ_θ
MIXTURE_PARTNERS = (FLIP_XX, np.kron(SIGMA_Z, np.eye(2)), np.real(SIGMA_YY).astype(complex))


def random_mixture_pair(rng: np.random.Generator):
    """
    α₊ = (R⊗R')φ_θ, α₋ = e^{iχ}(R⊗R')Sφ_θ com φ_θ = cos θ|↑↑⟩ + sin θ|↓↓⟩

    R, R' são rotações reais em y (comutam com o til) e S ∈ {σˣσˣ, σᶻ⊗1, σʸσʸ},
    então α₊ e α₋ têm a mesma concorrência pura e G satisfaz a hipótese de fase.
    """
    theta = rng.uniform(0, np.pi)
    phi = np.array([np.cos(theta), 0, 0, np.sin(theta)], dtype=complex)
    local = np.kron(ry(rng.uniform(0, 2 * np.pi)), ry(rng.uniform(0, 2 * np.pi)))
    partner = MIXTURE_PARTNERS[int(rng.integers(len(MIXTURE_PARTNERS)))]
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    return local @ phi, phase * (local @ partner @ phi)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧮 MÓDULO CENTRALIZADO - CONVENÇÕES DE SPIN
📊 FUNÇÃO: Matrizes de Pauli, ordem da base e tensores de dois sítios
🎯 OBJETIVO: Uma única fonte de verdade para model, reduced, entangle e symmetry

CONVENÇÕES OFICIAIS:
1. Base de um spin: índice 0 = |↑⟩, índice 1 = |↓⟩, σᶻ|↑⟩ = +|↑⟩
2. Estado de N spins: o sítio i contribui o bit i do índice (bit 0 = ↑)
3. Base de dois sítios (i, j): {|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩}, índice = 2·bit_i + bit_j
4. σ⁻ = |↓⟩⟨↑| = (σˣ − iσʸ)/2, σ⁺ = |↑⟩⟨↓|
"""

import numpy as np

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)

PAULI = {
    "1": IDENTITY,
    "x": SIGMA_X,
    "y": SIGMA_Y,
    "z": SIGMA_Z,
}

# Ordem dos índices do tensor de correlações T[a, b] = ⟨σᵃᵢ σᵇⱼ⟩
PAULI_LABELS = ("1", "x", "y", "z")

# σʸ ⊗ σʸ na base padrão (real)
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)


def two_site_pauli(a: str, b: str) -> np.ndarray:
    """σᵃ ⊗ σᵇ na base padrão de dois sítios"""
    return np.kron(PAULI[a], PAULI[b])


def spin_values(indices: np.ndarray, site: int) -> np.ndarray:
    """
    Autovalor de σᶻ do sítio para cada índice da base

    Args:
        indices: índices da base (inteiros)
        site: sítio

    Returns:
        np.ndarray: +1.0 para bit 0 (↑), −1.0 para bit 1 (↓)
    """
    return 1.0 - 2.0 * ((indices >> site) & 1)


def product_state(spins: str) -> np.ndarray:
    """
    Estado produto na base de 2^N

    Args:
        spins: string com 'u'/'d' por sítio, sítio 0 primeiro (ex: "uud")

    Returns:
        np.ndarray: vetor complexo normalizado
    """
    index = sum(1 << site for site, s in enumerate(spins) if s == "d")
    psi = np.zeros(1 << len(spins), dtype=complex)
    psi[index] = 1.0
    return psi

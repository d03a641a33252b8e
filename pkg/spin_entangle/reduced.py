#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/reduced.py
💾 FUNÇÃO: Matriz densidade reduzida de dois sítios e conjunto de correlações
🔧 DESCRIÇÃO: Traço parcial de estados puros e ensembles de Gibbs, dicionário
              ρ ↔ ⟨σᵃᵢσᵇⱼ⟩ e o formato texto de 16 entradas complexas
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DensityMatrixError, InvalidCorrelatorError, ModelSpecError
from .model import local_operator
from .pauli import PAULI, PAULI_LABELS, two_site_pauli
from .solver import ThermalEnsemble

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
NEGATIVE_EIGENVALUE_TOL = 1e-12

_INDEX = {label: k for k, label in enumerate(PAULI_LABELS)}


def validate_density_matrix(entries: np.ndarray) -> np.ndarray:
    """
    Confere e Hermitiza uma matriz 4×4: ρ ← (ρ + ρ†)/2

    Raises:
        DensityMatrixError: forma errada, assimetria > 1e−10, traço ≠ 1 ou
            autovalor < −1e−12
    """
    m = np.asarray(entries, dtype=complex)
    if m.shape != (4, 4):
        raise DensityMatrixError(f"❌ Matriz densidade deve ser 4×4, recebida {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DensityMatrixError("❌ Matriz densidade com entradas não finitas")

    asymmetry = float(np.max(np.abs(m - m.conj().T)))
    if asymmetry > HERMITIAN_TOL:
        raise DensityMatrixError(f"❌ Matriz não Hermitiana (desvio {asymmetry:.2e})")
    m = 0.5 * (m + m.conj().T)

    trace = float(np.real(np.trace(m)))
    if abs(trace - 1.0) > TRACE_TOL:
        raise DensityMatrixError(f"❌ Traço {trace:.12g} ≠ 1")

    smallest = float(np.linalg.eigvalsh(m)[0])
    if smallest < -NEGATIVE_EIGENVALUE_TOL:
        raise DensityMatrixError(f"❌ Autovalor negativo {smallest:.3e}")
    return m


@dataclass(frozen=True)
class TwoSiteDensityMatrix:
    """
    ρ_ij na base {|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩}

    Construa por TwoSiteDensityMatrix.from_array para validar e Hermitizar.
    """

    entries: np.ndarray
    site_i: int = 0
    site_j: int = 1

    @classmethod
    def from_array(cls, entries: np.ndarray, site_i: int = 0, site_j: int = 1) -> "TwoSiteDensityMatrix":
        m = validate_density_matrix(entries)
        m.setflags(write=False)
        return cls(m, site_i, site_j)

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    def expectation(self, a: str, b: str) -> float:
        """Tr(ρ σᵃ⊗σᵇ), a e b em {'1', 'x', 'y', 'z'}"""
        return float(np.real(np.trace(self.entries @ two_site_pauli(a, b))))


@dataclass(frozen=True)
class CorrelatorSet:
    """
    Tensor real T[a, b] = ⟨σᵃᵢ σᵇⱼ⟩, a, b ∈ (1, x, y, z)

    Os campos nomeados (xx, zi, ...) são vistas do tensor.
    """

    tensor: np.ndarray

    def __post_init__(self):
        t = np.array(self.tensor, dtype=float)
        if t.shape != (4, 4):
            raise InvalidCorrelatorError(f"❌ Tensor de correlações deve ser 4×4, recebido {t.shape}")
        t[0, 0] = 1.0
        t.setflags(write=False)
        object.__setattr__(self, "tensor", t)

    @classmethod
    def from_values(cls, xx: float = 0.0, yy: float = 0.0, zz: float = 0.0,
                    zi: float = 0.0, zj: Optional[float] = None,
                    xi: float = 0.0, xj: Optional[float] = None,
                    xz: float = 0.0, zx: Optional[float] = None,
                    xy: float = 0.0, yx: float = 0.0,
                    yi: float = 0.0, yj: float = 0.0,
                    yz: float = 0.0, zy: float = 0.0) -> "CorrelatorSet":
        """Valores omitidos de zj, xj, zx copiam o parceiro simétrico"""
        t = np.zeros((4, 4))
        t[0, 0] = 1.0
        t[1, 1], t[2, 2], t[3, 3] = xx, yy, zz
        t[3, 0] = zi
        t[0, 3] = zi if zj is None else zj
        t[1, 0] = xi
        t[0, 1] = xi if xj is None else xj
        t[2, 0], t[0, 2] = yi, yj
        t[1, 3] = xz
        t[3, 1] = xz if zx is None else zx
        t[1, 2], t[2, 1] = xy, yx
        t[2, 3], t[3, 2] = yz, zy
        return cls(t)

    def value(self, a: str, b: str) -> float:
        return float(self.tensor[_INDEX[a], _INDEX[b]])

    @property
    def xx(self) -> float:
        return float(self.tensor[1, 1])

    @property
    def yy(self) -> float:
        return float(self.tensor[2, 2])

    @property
    def zz(self) -> float:
        return float(self.tensor[3, 3])

    @property
    def zi(self) -> float:
        return float(self.tensor[3, 0])

    @property
    def zj(self) -> float:
        return float(self.tensor[0, 3])

    @property
    def xi(self) -> float:
        return float(self.tensor[1, 0])

    @property
    def xj(self) -> float:
        return float(self.tensor[0, 1])

    @property
    def xy_asym(self) -> float:
        """⟨σˣσˣ − σʸσʸ⟩"""
        return self.xx - self.yy

    @property
    def xz(self) -> float:
        """⟨σˣᵢσᶻⱼ⟩"""
        return float(self.tensor[1, 3])

    @property
    def zx(self) -> float:
        return float(self.tensor[3, 1])

    def as_dict(self) -> dict:
        return {
            "xx": self.xx, "yy": self.yy, "zz": self.zz,
            "sz_i": self.zi, "sz_j": self.zj,
            "sx_i": self.xi, "sx_j": self.xj,
        }


# ============================================================================
# TRAÇO PARCIAL
# ============================================================================

def _check_sites(num_sites: int, i: int, j: int):
    if i == j:
        raise ModelSpecError(f"❌ Sítios iguais: {i}")
    for site in (i, j):
        if not 0 <= site < num_sites:
            raise ModelSpecError(f"❌ Sítio {site} fora da rede de {num_sites} sítios")


def _num_sites(dimension: int) -> int:
    n = int(dimension).bit_length() - 1
    if dimension != 1 << n or n < 2:
        raise ModelSpecError(f"❌ Dimensão {dimension} não é 2^N com N ≥ 2")
    return n


def _split(amplitudes: np.ndarray, num_sites: int, i: int, j: int) -> np.ndarray:
    """
    Reorganiza para (4, resto[, k]) com primeiro índice 2·bit_i + bit_j

    No reshape C-order o sítio k é o eixo N−1−k.
    """
    extra = amplitudes.shape[1:]
    tensor = amplitudes.reshape((2,) * num_sites + extra)
    tensor = np.moveaxis(tensor, (num_sites - 1 - i, num_sites - 1 - j), (0, 1))
    return tensor.reshape((4, -1) + extra)


def reduce_pure(psi: np.ndarray, i: int, j: int) -> TwoSiteDensityMatrix:
    """
    ρ_ij = Tr_{resto} |ψ⟩⟨ψ|

    Args:
        psi: vetor normalizado de 2^N amplitudes
        i, j: sítios distintos

    Returns:
        TwoSiteDensityMatrix validada
    """
    psi = np.asarray(psi)
    n = _num_sites(psi.shape[0])
    _check_sites(n, i, j)
    block = _split(psi, n, i, j)
    rho = block @ block.conj().T
    return TwoSiteDensityMatrix.from_array(rho, i, j)


def reduce_thermal(ens: ThermalEnsemble, i: int, j: int) -> TwoSiteDensityMatrix:
    """ρ_ij = Σ_k w_k Tr_{resto} |k⟩⟨k|"""
    n = _num_sites(ens.eigenvectors.shape[0])
    _check_sites(n, i, j)
    weights = ens.weights
    keep = weights > 0
    block = _split(ens.eigenvectors[:, keep], n, i, j)
    rho = np.einsum("ark,brk,k->ab", block, block.conj(), weights[keep])
    return TwoSiteDensityMatrix.from_array(rho, i, j)


def two_site_expectation(psi: np.ndarray, i: int, j: int,
                         op_i: np.ndarray, op_j: np.ndarray) -> complex:
    """⟨ψ|OᵢOⱼ|ψ⟩ direto no espaço completo (conferência do traço parcial)"""
    psi = np.asarray(psi)
    n = _num_sites(psi.shape[0])
    _check_sites(n, i, j)
    applied = local_operator(n, {i: op_i, j: op_j}).apply(psi)
    return complex(np.vdot(psi, applied))


# ============================================================================
# DICIONÁRIO ρ ↔ CORRELAÇÕES
# ============================================================================

def correlators_from_rho(rho: TwoSiteDensityMatrix) -> CorrelatorSet:
    """T[a, b] = Tr(ρ σᵃ⊗σᵇ)"""
    entries = rho.entries if isinstance(rho, TwoSiteDensityMatrix) else np.asarray(rho)
    t = np.empty((4, 4))
    for a, label_a in enumerate(PAULI_LABELS):
        for b, label_b in enumerate(PAULI_LABELS):
            t[a, b] = np.real(np.trace(entries @ two_site_pauli(label_a, label_b)))
    return CorrelatorSet(t)


def rho_matrix_from_correlators(corr: CorrelatorSet) -> np.ndarray:
    """ρ = ¼ Σ T[a, b] σᵃ⊗σᵇ sem validação"""
    rho = np.zeros((4, 4), dtype=complex)
    for a, label_a in enumerate(PAULI_LABELS):
        for b, label_b in enumerate(PAULI_LABELS):
            if corr.tensor[a, b] != 0:
                rho += corr.tensor[a, b] * np.kron(PAULI[label_a], PAULI[label_b])
    return rho / 4.0


def rho_from_correlators(corr: CorrelatorSet, site_i: int = 0, site_j: int = 1) -> TwoSiteDensityMatrix:
    """
    Inverso de correlators_from_rho

    Raises:
        DensityMatrixError: correlações sem ρ positiva correspondente
    """
    return TwoSiteDensityMatrix.from_array(rho_matrix_from_correlators(corr), site_i, site_j)


# ============================================================================
# FORMATO TEXTO (16 entradas "re im", linha a linha)
# ============================================================================

def read_matrix_file(path: str) -> TwoSiteDensityMatrix:
    """
    Lê 32 números (parte real e imaginária de cada entrada, row-major)

    Linhas começando com '#' são comentários.

    Raises:
        DensityMatrixError: arquivo malformado ou matriz inválida
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = [line.split("#", 1)[0] for line in handle]
    except OSError as e:
        raise DensityMatrixError(f"❌ Não foi possível ler {path}: {e}")

    tokens = " ".join(lines).split()
    if len(tokens) != 32:
        raise DensityMatrixError(f"❌ {path}: esperados 32 números (16 pares re im), lidos {len(tokens)}")
    try:
        values = np.array([float(token) for token in tokens])
    except ValueError as e:
        raise DensityMatrixError(f"❌ {path}: número inválido ({e})")

    entries = (values[0::2] + 1j * values[1::2]).reshape(4, 4)
    logger.debug(f"📁 Matriz lida de {path}")
    return TwoSiteDensityMatrix.from_array(entries)


def write_matrix_file(rho: TwoSiteDensityMatrix, path: str, comment: str = ""):
    """Escreve no formato de read_matrix_file com 17 dígitos significativos"""
    with open(path, "w", encoding="utf-8") as handle:
        if comment:
            handle.write(f"# {comment}\n")
        for row in rho.entries:
            handle.write("  ".join(f"{z.real:.17g} {z.imag:.17g}" for z in row) + "\n")

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/solver.py
💾 FUNÇÃO: Estado fundamental (Lanczos) e espectro completo (denso, N ≤ 12)
🔧 DESCRIÇÃO: Lanczos com reortogonalização completa e vetor inicial
              determinístico; setores Z2 para os estados gato de h = 0;
              ensembles de Gibbs a partir do espectro denso
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import numpy as np
import scipy.linalg

from .config import DEFAULT_SEED
from .errors import ConvergenceError, ModelSpecError
from .model import DENSE_LIMIT_SITES, HamiltonianAction, OperatorAction, ProductAction, z2_symmetry

logger = logging.getLogger(__name__)

# β·(E − E0) acima disso tem peso zero em double
_MAX_EXPONENT = 700.0
# Linhas iniciais da base de Krylov; dobra quando enche
KRYLOV_CHUNK = 32


@dataclass(frozen=True)
class SolverOptions:
    """Parâmetros dos solvers (padrões do pacote)"""

    max_iterations: int = 400
    tolerance: float = 1e-10
    degeneracy_tolerance: float = 1e-8
    seed: int = DEFAULT_SEED
    perturbation: float = 0.1
    dense_limit_sites: int = DENSE_LIMIT_SITES
    check_every: int = 5

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ModelSpecError(f"❌ max_iterations deve ser ≥ 1: {self.max_iterations}")
        if self.tolerance <= 0 or self.degeneracy_tolerance < 0:
            raise ModelSpecError("❌ Tolerâncias devem ser positivas")
        if not 0 <= self.perturbation < 1:
            raise ModelSpecError(f"❌ perturbation fora de [0, 1): {self.perturbation}")


@dataclass(frozen=True)
class SolverReport:
    ground_energy: float
    gap: float
    iterations: int
    residual: float
    degenerate: bool = False
    sector: Optional[int] = None
    history: Tuple[float, ...] = field(default=(), repr=False)


def start_vector(dimension: int, opts: SolverOptions, dtype=np.float64) -> np.ndarray:
    """Vetor uniforme com perturbação fixa por índice: 1 + p·U(−1, 1), semente opts.seed"""
    rng = np.random.default_rng(opts.seed)
    v = 1.0 + opts.perturbation * rng.uniform(-1.0, 1.0, dimension)
    return v.astype(dtype)


def _ritz(alphas, betas):
    if len(alphas) == 1:
        return np.array([alphas[0]]), np.ones((1, 1))
    return scipy.linalg.eigh_tridiagonal(np.array(alphas), np.array(betas[:len(alphas) - 1]))


def lanczos_ground_state(H: Union[OperatorAction, HamiltonianAction],
                         opts: Optional[SolverOptions] = None,
                         symmetry: Optional[OperatorAction] = None,
                         sector: int = 1) -> Tuple[np.ndarray, SolverReport]:
    """
    Menor autovetor de H por Lanczos com reortogonalização completa

    Args:
        H: operador Hermitiano matrix-free
        opts: opções (padrão SolverOptions())
        symmetry: involução U com [H, U] = 0; restringe ao setor U = sector
        sector: +1 ou −1

    Returns:
        (psi complexo normalizado, SolverReport)

    Raises:
        ConvergenceError: resíduo acima da tolerância após max_iterations
    """
    opts = opts or SolverOptions()
    dim = H.dimension
    if dim < 2:
        raise ModelSpecError("❌ Lanczos exige dimensão ≥ 2")
    if sector not in (1, -1):
        raise ModelSpecError(f"❌ Setor deve ser ±1: {sector}")

    dtype = np.float64 if getattr(H, "is_real", False) else np.complex128

    def project(vec):
        if symmetry is None:
            return vec
        return 0.5 * (vec + sector * symmetry.apply(vec))

    v = project(start_vector(dim, opts, dtype))
    norm = np.linalg.norm(v)
    if norm < 1e-12:
        raise ModelSpecError(f"❌ Setor {sector:+d} vazio para o vetor inicial")

    m = min(opts.max_iterations, dim)
    basis = np.empty((min(m, KRYLOV_CHUNK), dim), dtype=dtype)
    basis[0] = v / norm

    alphas, betas, history = [], [], []
    best_residual = np.inf
    theta = np.array([np.inf])
    S = np.ones((1, 1))

    for k in range(m):
        w = project(H.apply(basis[k]))
        alpha = float(np.real(np.vdot(basis[k], w)))
        w -= alpha * basis[k]
        if k > 0:
            w -= betas[k - 1] * basis[k - 1]

        # Gram-Schmidt clássico duas vezes contra toda a base
        block = basis[:k + 1]
        for _ in range(2):
            w -= block.T @ (block.conj() @ w)

        beta = float(np.linalg.norm(w))
        alphas.append(alpha)

        breakdown = beta < 1e-13 * max(1.0, abs(alpha))
        last = k == m - 1
        if breakdown or last or (k + 1) % opts.check_every == 0:
            theta, S = _ritz(alphas, betas)
            history.append(float(theta[0]))
            residuals = beta * np.abs(S[-1, :])
            second_ok = len(theta) < 2 or residuals[1] < np.sqrt(opts.tolerance)
            logger.debug(f"   Lanczos k={k + 1}: E0={theta[0]:.14f} resíduo≈{residuals[0]:.2e}")

            if breakdown or (residuals[0] < opts.tolerance and second_ok) or last:
                psi = block.T @ S[:, 0]
                psi /= np.linalg.norm(psi)
                energy = float(theta[0])
                residual = float(np.linalg.norm(H.apply(psi) - energy * psi))
                best_residual = min(best_residual, residual)
                if residual < opts.tolerance:
                    gap = float(theta[1] - theta[0]) if len(theta) > 1 else float("inf")
                    report = SolverReport(
                        ground_energy=energy,
                        gap=max(gap, 0.0),
                        iterations=k + 1,
                        residual=residual,
                        degenerate=gap < opts.degeneracy_tolerance,
                        sector=sector if symmetry is not None else None,
                        history=tuple(history),
                    )
                    if report.degenerate:
                        logger.warning(f"⚠️ Estado fundamental quase degenerado (gap={gap:.2e})")
                    logger.debug(f"✅ Lanczos convergiu em {k + 1} iterações, E0={energy:.12f}")
                    return psi.astype(np.complex128), report
                if breakdown:
                    break

        if breakdown or last:
            break
        betas.append(beta)
        if k + 1 == basis.shape[0]:
            grown = np.empty((min(m, 2 * basis.shape[0]), dim), dtype=dtype)
            grown[:k + 1] = basis
            basis = grown
        basis[k + 1] = w / beta

    raise ConvergenceError(
        f"❌ Lanczos não convergiu em {len(alphas)} iterações (melhor resíduo {best_residual:.2e})",
        best_residual=float(best_residual),
        iterations=len(alphas),
    )


def ground_state_by_parity(H: Union[OperatorAction, HamiltonianAction], symmetry: OperatorAction,
                           opts: Optional[SolverOptions] = None) -> Tuple[np.ndarray, SolverReport]:
    """
    Lanczos nos dois setores de uma simetria Z2 e escolhe o menor

    O gap reportado é o menor entre a separação dos setores e o gap interno do
    setor escolhido, então estados gato aparecem como degenerados mesmo quando
    a separação está abaixo do arredondamento.
    """
    opts = opts or SolverOptions()
    psi_plus, rep_plus = lanczos_ground_state(H, opts, symmetry, sector=1)
    psi_minus, rep_minus = lanczos_ground_state(H, opts, symmetry, sector=-1)

    if rep_minus.ground_energy < rep_plus.ground_energy:
        psi, chosen, other = psi_minus, rep_minus, rep_plus
    else:
        psi, chosen, other = psi_plus, rep_plus, rep_minus

    gap = min(chosen.gap, other.ground_energy - chosen.ground_energy)
    report = SolverReport(
        ground_energy=chosen.ground_energy,
        gap=max(gap, 0.0),
        iterations=rep_plus.iterations + rep_minus.iterations,
        residual=chosen.residual,
        degenerate=gap < opts.degeneracy_tolerance,
        sector=chosen.sector,
        history=chosen.history,
    )
    logger.debug(f"📊 Setores Z2: E+={rep_plus.ground_energy:.12f} E-={rep_minus.ground_energy:.12f}")
    return psi, report


def solve_ground_state(H: HamiltonianAction,
                       opts: Optional[SolverOptions] = None) -> Tuple[np.ndarray, SolverReport]:
    """Usa os setores Z2 quando o modelo os tem (h = 0), senão Lanczos direto"""
    symmetry = z2_symmetry(H.spec)
    if symmetry is not None:
        return ground_state_by_parity(H, symmetry, opts)
    return lanczos_ground_state(H, opts)


# ============================================================================
# ESPECTRO DENSO E ENSEMBLE TÉRMICO
# ============================================================================

@dataclass(frozen=True)
class ThermalEnsemble:
    """Autovalores crescentes, autovetores em colunas e β = 1/T"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    beta: float

    def __post_init__(self):
        if not self.beta > 0:
            raise ModelSpecError(f"❌ β deve ser > 0: {self.beta}")

    @property
    def weights(self) -> np.ndarray:
        """e^{−β(E_k − E_0)}/Z"""
        exponent = self.beta * (self.eigenvalues - self.eigenvalues[0])
        w = np.where(exponent < _MAX_EXPONENT, np.exp(-np.minimum(exponent, _MAX_EXPONENT)), 0.0)
        return w / w.sum()

    @property
    def num_sites(self) -> int:
        return int(self.eigenvectors.shape[0]).bit_length() - 1


@dataclass(frozen=True)
class DenseSpectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def gap(self) -> float:
        if len(self.eigenvalues) < 2:
            return float("inf")
        return float(self.eigenvalues[1] - self.eigenvalues[0])

    def at_beta(self, beta: float) -> ThermalEnsemble:
        return ThermalEnsemble(self.eigenvalues, self.eigenvectors, float(beta))


def dense_spectrum(H: Union[OperatorAction, HamiltonianAction],
                   opts: Optional[SolverOptions] = None) -> DenseSpectrum:
    """
    Diagonalização completa da matriz realizada a partir de apply

    Raises:
        SizeLimitError: N acima de opts.dense_limit_sites (use Lanczos)
    """
    opts = opts or SolverOptions()
    matrix = H.to_dense(max_sites=opts.dense_limit_sites)
    eigenvalues, eigenvectors = scipy.linalg.eigh(matrix)
    logger.debug(f"✅ Espectro denso: dim={H.dimension}, E0={eigenvalues[0]:.12f}")
    return DenseSpectrum(eigenvalues, eigenvectors)


def thermal_state(H: Union[OperatorAction, HamiltonianAction], beta: float,
                  opts: Optional[SolverOptions] = None) -> ThermalEnsemble:
    return dense_spectrum(H, opts).at_beta(beta)


def gibbs_expectation(ens: ThermalEnsemble,
                      obs: Union[OperatorAction, ProductAction, np.ndarray]) -> Union[float, complex]:
    """
    Tr(e^{−βH} O)/Z com pesos relativos a E_0

    Returns:
        float quando a parte imaginária é < 1e−12, senão complex
    """
    weights = ens.weights
    keep = weights > 0
    vectors = ens.eigenvectors[:, keep]
    if isinstance(obs, np.ndarray):
        applied = obs @ vectors
    else:
        applied = obs.apply(vectors)
    diagonal = np.einsum("ik,ik->k", vectors.conj(), applied)
    value = complex(np.sum(weights[keep] * diagonal))
    if abs(value.imag) < 1e-12:
        return value.real
    return value

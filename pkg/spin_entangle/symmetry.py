#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/symmetry.py
💾 FUNÇÃO: Formas estruturadas de ρ e concorrências fechadas
🔧 DESCRIÇÃO: Forma Z2/U(1) simétrica, forma com U(1) quebrada, forma Ising
              (cúbica em g₀, g₁, g₂), condição de invariância κ e a condição
              em correlações para a Ising transversa

Base: {|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩}. O elemento C da matriz chama-se C_off para não
colidir com a concorrência.

    Z2Form            U1BrokenForm        IsingForm
    A 0 0 0           A a a f             A a a F
    0 B C 0           a B C a             a B C b
    0 C G 0           a C B a             a C B b
    0 0 0 D           f a a A             F b b D
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple, Union

import numpy as np

from .cubic import solve_monic_cubic
from .entangle import ConcurrenceReport, report_from_roots
from .errors import CubicRootError, InvalidCorrelatorError
from .reduced import CorrelatorSet, TwoSiteDensityMatrix

logger = logging.getLogger(__name__)

PATTERN_TOL = 1e-8
BRANCH_DEADBAND = 1e-10
CORRELATOR_TOL = 1e-10
ROOT_NEGATIVE_TOL = 1e-10
# Produto das duas raízes menores abaixo disso (relativo a μ₃²) é ruído de det M
DEFLATION_TOL = 1e-14

RhoLike = Union[TwoSiteDensityMatrix, np.ndarray]


def _entries(rho: RhoLike) -> np.ndarray:
    if isinstance(rho, TwoSiteDensityMatrix):
        return rho.entries
    return np.asarray(rho, dtype=complex)


def _sqrt_checked(value: float, what: str) -> float:
    """√ de uma quantidade que a positividade de ρ exige ≥ 0"""
    if value < -CORRELATOR_TOL:
        raise InvalidCorrelatorError(f"❌ {what} = {value:.3e} < 0: correlações sem ρ positiva")
    return math.sqrt(max(value, 0.0))


def _is_psd(m: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0] >= -tol)


# ============================================================================
# FORMAS
# ============================================================================

@dataclass(frozen=True)
class Z2Form:
    A: float
    B: float
    C_off: float
    G: float
    D: float

    def matrix(self) -> np.ndarray:
        return np.array([
            [self.A, 0, 0, 0],
            [0, self.B, self.C_off, 0],
            [0, self.C_off, self.G, 0],
            [0, 0, 0, self.D],
        ], dtype=complex)

    @classmethod
    def from_rho(cls, rho: RhoLike) -> "Z2Form":
        m = np.real(_entries(rho))
        return cls(A=m[0, 0], B=m[1, 1], C_off=0.5 * (m[1, 2] + m[2, 1]), G=m[2, 2], D=m[3, 3])

    @classmethod
    def from_correlators(cls, corr: CorrelatorSet) -> "Z2Form":
        zi, zj, zz = corr.zi, corr.zj, corr.zz
        return cls(
            A=(1 + zi + zj + zz) / 4,
            B=(1 + zi - zj - zz) / 4,
            C_off=(corr.xx + corr.yy) / 4,
            G=(1 - zi + zj - zz) / 4,
            D=(1 - zi - zj + zz) / 4,
        )

    def is_valid(self, tol: float = 1e-10) -> bool:
        trace_ok = abs(self.A + self.B + self.G + self.D - 1) < tol
        return trace_ok and _is_psd(self.matrix(), tol)


@dataclass(frozen=True)
class U1BrokenForm:
    A: float
    B: float
    C_off: float
    f: float
    a: float

    def matrix(self) -> np.ndarray:
        A, B, C, f, a = self.A, self.B, self.C_off, self.f, self.a
        return np.array([
            [A, a, a, f],
            [a, B, C, a],
            [a, C, B, a],
            [f, a, a, A],
        ], dtype=complex)

    @classmethod
    def from_rho(cls, rho: RhoLike) -> "U1BrokenForm":
        m = np.real(_entries(rho))
        return cls(
            A=0.5 * (m[0, 0] + m[3, 3]),
            B=0.5 * (m[1, 1] + m[2, 2]),
            C_off=m[1, 2],
            f=m[0, 3],
            a=0.25 * (m[0, 1] + m[0, 2] + m[1, 3] + m[2, 3]),
        )

    @classmethod
    def from_correlators(cls, corr: CorrelatorSet) -> "U1BrokenForm":
        return cls(
            A=(1 + corr.zz) / 4,
            B=(1 - corr.zz) / 4,
            C_off=(corr.xx + corr.yy) / 4,
            f=(corr.xx - corr.yy) / 4,
            a=corr.xi / 4,
        )

    def is_valid(self, tol: float = 1e-10) -> bool:
        return abs(2 * self.A + 2 * self.B - 1) < tol and _is_psd(self.matrix(), tol)


@dataclass(frozen=True)
class IsingForm:
    A: float
    B: float
    C_off: float
    D: float
    F: float
    a: float
    b: float

    def matrix(self) -> np.ndarray:
        A, B, C, D, F, a, b = self.A, self.B, self.C_off, self.D, self.F, self.a, self.b
        return np.array([
            [A, a, a, F],
            [a, B, C, b],
            [a, C, B, b],
            [F, b, b, D],
        ], dtype=complex)

    @classmethod
    def from_rho(cls, rho: RhoLike) -> "IsingForm":
        m = np.real(_entries(rho))
        return cls(
            A=m[0, 0],
            B=0.5 * (m[1, 1] + m[2, 2]),
            C_off=m[1, 2],
            D=m[3, 3],
            F=m[0, 3],
            a=0.5 * (m[0, 1] + m[0, 2]),
            b=0.5 * (m[1, 3] + m[2, 3]),
        )

    @classmethod
    def from_correlators(cls, corr: CorrelatorSet) -> "IsingForm":
        """z = ⟨σᶻ⟩ e x = ⟨σˣ⟩ são médias dos dois sítios"""
        z = 0.5 * (corr.zi + corr.zj)
        x = 0.5 * (corr.xi + corr.xj)
        zz = corr.zz
        return cls(
            A=(1 + 2 * z + zz) / 4,
            B=(1 - zz) / 4,
            C_off=(corr.xx + corr.yy) / 4,
            D=(1 - 2 * z + zz) / 4,
            F=(corr.xx - corr.yy) / 4,
            a=(x + corr.zx) / 4,
            b=(x - corr.xz) / 4,
        )

    def is_valid(self, tol: float = 1e-10) -> bool:
        return abs(self.A + 2 * self.B + self.D - 1) < tol and _is_psd(self.matrix(), tol)

    def symmetric_block(self) -> np.ndarray:
        """Bloco 3×3 de ρ em {|↑↑⟩, (|↑↓⟩+|↓↑⟩)/√2, |↓↓⟩}"""
        s, r2 = self.B + self.C_off, math.sqrt(2.0)
        return np.array([
            [self.A, r2 * self.a, self.F],
            [r2 * self.a, s, r2 * self.b],
            [self.F, r2 * self.b, self.D],
        ])

    def symmetric_block_det(self) -> float:
        """det M = S(AD − F²) − 2Ab² − 2a²D + 4abF, S = B + C_off"""
        s = self.B + self.C_off
        A, D, F, a, b = self.A, self.D, self.F, self.a, self.b
        return s * (A * D - F * F) - 2 * A * b * b - 2 * a * a * D + 4 * a * b * F


FormType = Union[Z2Form, U1BrokenForm, IsingForm]


@dataclass(frozen=True)
class Classification:
    kind: str  # 'z2' | 'u1' | 'ising' | 'general'
    form: Optional[FormType]
    residual: float


def _z2_residual(m: np.ndarray) -> float:
    zeros = [m[0, 1], m[0, 2], m[0, 3], m[1, 3], m[2, 3]]
    return float(max(max(abs(z) for z in zeros), abs(m[1, 2].imag)))


def _ising_residual(m: np.ndarray) -> float:
    return float(max(
        abs(m[1, 1] - m[2, 2]),
        abs(m[0, 1] - m[0, 2]),
        abs(m[1, 3] - m[2, 3]),
        max(abs(m[k, l].imag) for k, l in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    ))


def _u1_residual(m: np.ndarray) -> float:
    a_entries = [m[0, 1], m[0, 2], m[1, 3], m[2, 3]]
    spread = max(abs(z - a_entries[0]) for z in a_entries)
    return float(max(_ising_residual(m), abs(m[0, 0] - m[3, 3]), spread))


def classify_form(rho: RhoLike, tol: float = PATTERN_TOL) -> Classification:
    """
    Forma mais específica (Z2 → U1 → Ising) cujas entradas fora do padrão
    ficam abaixo de tol; senão 'general' com o resíduo do padrão Ising
    """
    m = _entries(rho)
    residual = _z2_residual(m)
    if residual < tol:
        return Classification("z2", Z2Form.from_rho(m), residual)
    residual = _u1_residual(m)
    if residual < tol:
        return Classification("u1", U1BrokenForm.from_rho(m), residual)
    residual = _ising_residual(m)
    if residual < tol:
        return Classification("ising", IsingForm.from_rho(m), residual)
    return Classification("general", None, residual)


# ============================================================================
# CONCORRÊNCIAS FECHADAS
# ============================================================================

def concurrence_z2(corr: CorrelatorSet) -> float:
    """
    C = ½ max{0, |xx + yy| − √((1 + zz)² − (zi + zj)²)}

    Raises:
        InvalidCorrelatorError: (1 + zz)² < (zi + zj)²
    """
    root = _sqrt_checked((1 + corr.zz) ** 2 - (corr.zi + corr.zj) ** 2, "(1+zz)² − (zi+zj)²")
    return 0.5 * max(0.0, abs(corr.xx + corr.yy) - root)


def u1_roots(corr: CorrelatorSet) -> Tuple[float, float, float, float]:
    """
    (u₊, u₋, v₊, v₋) com u± = ¼|√((1+xx)² − 4⟨σˣ⟩²) ± |yy − zz||,
    v± = ¼|1 − xx ± (yy + zz)|

    Raises:
        InvalidCorrelatorError: (1 + xx)² < 4⟨σˣ⟩²
    """
    xx, yy, zz, x = corr.xx, corr.yy, corr.zz, corr.xi
    root = _sqrt_checked((1 + xx) ** 2 - 4 * x * x, "(1+xx)² − 4⟨σˣ⟩²")
    spread = abs(yy - zz)
    return (
        abs(root + spread) / 4,
        abs(root - spread) / 4,
        abs(1 - xx + (yy + zz)) / 4,
        abs(1 - xx - (yy + zz)) / 4,
    )


@dataclass(frozen=True)
class U1Concurrence:
    """
    value = ½(xx + yy − zz − 1) e as condições do ramo

    Valor e caminho geral coincidem quando branch_valid (com corte em 0).
    """

    value: float
    upper_sum_positive: bool
    yy_above_zz: bool
    u_plus_largest: bool

    @property
    def branch_valid(self) -> bool:
        return self.upper_sum_positive and self.yy_above_zz and self.u_plus_largest

    @property
    def concurrence(self) -> Optional[float]:
        """max(0, value) no ramo válido, None fora dele"""
        return max(0.0, self.value) if self.branch_valid else None


def concurrence_u1(corr: CorrelatorSet, deadband: float = BRANCH_DEADBAND) -> U1Concurrence:
    """
    Forma U(1)-invariante ½(xx + yy − zz − 1)

    As desigualdades yy + zz > xx − 1 e yy > zz não bastam sozinhas: o ramo
    também exige u₊ como maior raiz. Comparações estritas com faixa morta.
    """
    xx, yy, zz = corr.xx, corr.yy, corr.zz
    u_plus, u_minus, v_plus, v_minus = u1_roots(corr)
    return U1Concurrence(
        value=0.5 * (xx + yy - zz - 1),
        upper_sum_positive=bool(yy + zz > xx - 1 + deadband),
        yy_above_zz=bool(yy > zz + deadband),
        u_plus_largest=bool(u_plus > max(u_minus, v_plus, v_minus) + deadband),
    )


def sublattice_flip(corr: CorrelatorSet) -> CorrelatorSet:
    """
    σˣⱼ → −σˣⱼ, σʸⱼ → −σʸⱼ (sítio j na outra subrede)

    Leva correlações xy antiferromagnéticas ao caso ferromagnético:
    xx → −xx, yy → −yy e os termos cruzados de j.
    """
    t = np.array(corr.tensor)
    t[:, 1] *= -1
    t[:, 2] *= -1
    return CorrelatorSet(t)


def tfim_invariance_condition(corr: CorrelatorSet) -> bool:
    """
    √((1 + zz)² − 4⟨σᶻ⟩²) + zz − 1 > 2 yy  (⟺ √(AD) + F > B + C_off)

    Raises:
        InvalidCorrelatorError: (1 + zz)² < 4⟨σᶻ⟩²
    """
    z = 0.5 * (corr.zi + corr.zj)
    root = _sqrt_checked((1 + corr.zz) ** 2 - 4 * z * z, "(1+zz)² − 4⟨σᶻ⟩²")
    return bool(root + corr.zz - 1 > 2 * corr.yy)


# ============================================================================
# CÚBICA DA FORMA ISING
# ============================================================================

@dataclass(frozen=True)
class CubicCoeffs:
    """
    Coeficientes de x⁶ − g₂x⁴ + g₁x² − g₀ (raízes x², y², z² de ρρ̃ no
    subespaço simétrico) e o autovalor fatorado |B − C_off|²

    x, y, z são os módulos dos autovalores de M·P (P = σʸ⊗σʸ no subespaço
    simétrico); e1, e2, e3 são os invariantes de M·P. g₀ = e3² = det(M)²
    sem cancelamento; g0_expanded é o polinômio em α, β, γ, δ, μ, ν.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float
    mu: float
    nu: float
    e1: float
    e2: float
    e3: float
    g0: float
    g1: float
    g2: float
    g0_expanded: float
    factored: float


def ising_cubic(form: IsingForm) -> CubicCoeffs:
    """
    α = F² + AD − 2ab, β = (B+C)² − 4ab, γ = DF − b², δ = AF − a²,
    μ = aD − b(B+C−F), ν = a(B+C−F) − bA

    g₀ = (α² − 4γδ)β − 4μνα − 4μ²δ − 4ν²γ  (= det(M)² do bloco simétrico)
    g₁ = α² + 2αβ − 4μν − 4γδ
    g₂ = 2α + β

    Os valores usados vêm de e1 = S − 2F, e2 = F² − AD − 2SF + 4ab,
    e3 = −det M: g₂ = e1² − 2e2, g₁ = e2² − 2e1e3, g₀ = e3².
    """
    A, B, C, D, F, a, b = form.A, form.B, form.C_off, form.D, form.F, form.a, form.b
    s = B + C
    alpha = F * F + A * D - 2 * a * b
    beta = s * s - 4 * a * b
    gamma = D * F - b * b
    delta = A * F - a * a
    mu = a * D - b * (s - F)
    nu = a * (s - F) - b * A
    g0_expanded = (alpha ** 2 - 4 * gamma * delta) * beta - 4 * mu * nu * alpha - 4 * mu ** 2 * delta - 4 * nu ** 2 * gamma

    e1 = s - 2 * F
    e2 = F * F - A * D - 2 * s * F + 4 * a * b
    e3 = -form.symmetric_block_det()
    return CubicCoeffs(
        alpha, beta, gamma, delta, mu, nu, e1, e2, e3,
        g0=e3 * e3,
        g1=e2 * e2 - 2 * e1 * e3,
        g2=e1 * e1 - 2 * e2,
        g0_expanded=g0_expanded,
        factored=(B - C) ** 2,
    )


def signed_roots(coeffs: CubicCoeffs) -> Tuple[float, float, float]:
    """
    Autovalores de M·P (raízes de μ³ − e1μ² + e2μ − e3) por |μ| crescente

    A raiz de maior módulo vem da cúbica; as outras duas do quadrático
    deflacionado μ² − (e1 − μ₃)μ + e3/μ₃, resolvido na forma estável.

    Raises:
        CubicRootError: par complexo (M não é positiva)
    """
    roots = solve_monic_cubic(-coeffs.e1, coeffs.e2, -coeffs.e3)
    big = float(max(roots, key=abs))
    if big == 0.0:
        return 0.0, 0.0, 0.0

    s = coeffs.e1 - big
    p = coeffs.e3 / big
    if abs(p) <= DEFLATION_TOL * big * big:
        p = 0.0
    disc = s * s - 4 * p
    if disc < -ROOT_NEGATIVE_TOL * max(1.0, big * big):
        raise CubicRootError(f"❌ Cúbica com par complexo (discriminante {disc:.3e})")
    q = 0.5 * (s + math.copysign(math.sqrt(max(disc, 0.0)), s))
    other = p / q if q != 0.0 else 0.0
    small, mid = sorted((q, other), key=abs)
    return small, mid, big


def cubic_roots(coeffs: CubicCoeffs) -> Tuple[float, float, float]:
    """
    (x², y², z²) crescentes de t³ − g₂t² + g₁t − g₀

    Raises:
        CubicRootError: par complexo no bloco simétrico
    """
    x, y, z = signed_roots(coeffs)
    return x * x, y * y, z * z


def kappa_from_roots(roots: Tuple[float, float, float]) -> float:
    """κ = z − (x + y) a partir de (x², y², z²) crescentes"""
    x2, y2, z2 = roots
    return math.sqrt(z2) - math.sqrt(x2) - math.sqrt(y2)


def invariance_residual(coeffs: CubicCoeffs, kappa: float) -> float:
    """
    |2κ√g₀ − [¼(κ² − g₂)² − g₁]| com √g₀ = |det M|

    Raises:
        InvalidCorrelatorError: g₀ < −1e−12
    """
    if coeffs.g0 < -1e-12:
        raise InvalidCorrelatorError(f"❌ g₀ = {coeffs.g0:.3e} < 0")
    root = abs(coeffs.e3)
    return abs(2 * kappa * root - (0.25 * (kappa * kappa - coeffs.g2) ** 2 - coeffs.g1))


def concurrence_ising(form: IsingForm) -> ConcurrenceReport:
    """Concorrência pelas raízes da cúbica mais o fator |B − C_off|"""
    x, y, z = (abs(m) for m in signed_roots(ising_cubic(form)))
    return report_from_roots(np.array([x, y, z, abs(form.B - form.C_off)]))


def symmetric_kappa(form: IsingForm) -> float:
    """κ = 2F − (B + C_off): √(AD) + F é a maior raiz"""
    return 2 * form.F - (form.B + form.C_off)


def xxz_field_kappa(form: IsingForm) -> float:
    """κ = B + C_off − 2√(AD): |B + C_off| é a maior raiz (XXZ em campo z)"""
    return form.B + form.C_off - 2 * math.sqrt(max(form.A * form.D, 0.0))


def ising_family(form: IsingForm, t: float) -> IsingForm:
    """Entradas a, b escaladas por t com as entradas Z2-pares fixas"""
    return replace(form, a=t * form.a, b=t * form.b)


def z2_symmetrize(form: IsingForm) -> IsingForm:
    """Membro a = b = 0 da família (média sobre a rotação Z2)"""
    return ising_family(form, 0.0)


def largest_root_is_symmetric(form: IsingForm) -> bool:
    """√(AD) + F é a maior raiz de ρρ̃ no membro a = b = 0"""
    root = math.sqrt(max(form.A * form.D, 0.0))
    return bool(root + form.F > max(abs(root - form.F), abs(form.B + form.C_off), abs(form.B - form.C_off)))


def z2_form_from_correlators(corr: CorrelatorSet) -> Z2Form:
    return Z2Form.from_correlators(corr)


def u1_form_from_correlators(corr: CorrelatorSet) -> U1BrokenForm:
    return U1BrokenForm.from_correlators(corr)


def ising_form_from_correlators(corr: CorrelatorSet) -> IsingForm:
    return IsingForm.from_correlators(corr)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/model.py
💾 FUNÇÃO: Redes, modelos de spin e Hamiltonianos matrix-free
🔧 DESCRIÇÃO: XXZ com campo alternado e Ising transversa com campo em x,
              aplicados por operações de bits sobre a base 2^N
🔒 ESTRUTURA: OperatorAction (diagonal + termos de inversão de bits),
              imutável após a construção
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

import numpy as np
from scipy.sparse.linalg import LinearOperator

from .errors import ModelSpecError, SizeLimitError
from .pauli import PAULI, spin_values

logger = logging.getLogger(__name__)

BOUNDARY_ALIASES = {
    "periodic": "periodic",
    "pbc": "periodic",
    "open": "open",
    "obc": "open",
}

FAMILIES = ("xxz", "tfim")

# Acima disso to_dense recusa (2^12 = 4096)
DENSE_LIMIT_SITES = 12


@dataclass(frozen=True)
class LatticeSpec:
    """
    Cadeia de N sítios com condição de contorno

    Sítio i pertence à subrede (−1)^i. Com contorno periódico e N = 2 existe
    uma única ligação (0, 1).
    """

    num_sites: int
    boundary: str = "periodic"

    def __post_init__(self):
        if int(self.num_sites) != self.num_sites or self.num_sites < 1:
            raise ModelSpecError(f"❌ num_sites inválido: {self.num_sites}")
        if self.num_sites > 24:
            raise ModelSpecError(f"❌ num_sites={self.num_sites} acima do suportado (24)")
        boundary = BOUNDARY_ALIASES.get(str(self.boundary).lower())
        if boundary is None:
            raise ModelSpecError(f"❌ Contorno desconhecido: {self.boundary}")
        object.__setattr__(self, "boundary", boundary)

    @property
    def dimension(self) -> int:
        return 1 << self.num_sites

    @property
    def is_bipartite(self) -> bool:
        return self.boundary == "open" or self.num_sites % 2 == 0

    def bonds(self) -> Tuple[Tuple[int, int], ...]:
        """Ligações de primeiros vizinhos, em ordem fixa"""
        n = self.num_sites
        bonds = [(i, i + 1) for i in range(n - 1)]
        if self.boundary == "periodic" and n > 2:
            bonds.append((n - 1, 0))
        return tuple(bonds)

    def sublattice_parity(self, site: int) -> int:
        """+1 na subrede de sítios pares, −1 na de ímpares"""
        self._check_site(site)
        return 1 if site % 2 == 0 else -1

    def separation(self, i: int, j: int) -> int:
        """Distância na cadeia (mínima imagem no caso periódico)"""
        self._check_site(i)
        self._check_site(j)
        d = abs(i - j)
        if self.boundary == "periodic":
            d = min(d, self.num_sites - d)
        return d

    def _check_site(self, site: int):
        if not 0 <= site < self.num_sites:
            raise ModelSpecError(f"❌ Sítio {site} fora da rede de {self.num_sites} sítios")


@dataclass(frozen=True)
class ModelSpec:
    """
    Parâmetros do Hamiltoniano

    family:
        'xxz':  H = Σ⟨ij⟩ [−(σˣσˣ + σʸσʸ) + Δ σᶻσᶻ] + h Σ (−1)^i σᶻᵢ
                    + field_z Σ σᶻᵢ + field_x Σ σˣᵢ
        'tfim': H = −Σ⟨ij⟩ σˣσˣ + h_z Σ σᶻᵢ + h Σ σˣᵢ

    breaking_field é h: campo alternado em z (XXZ) ou campo uniforme em x (TFIM).
    field_x / field_z são campos uniformes extras do XXZ (quebra de U(1) e campo
    magnético ao longo de z).
    """

    family: str
    lattice: LatticeSpec
    delta: float = 0.0
    hz_transverse: float = 0.0
    breaking_field: float = 0.0
    field_x: float = 0.0
    field_z: float = 0.0

    def __post_init__(self):
        family = str(self.family).lower()
        if family not in FAMILIES:
            raise ModelSpecError(f"❌ Família desconhecida: {self.family}")
        object.__setattr__(self, "family", family)

        if self.breaking_field < 0:
            raise ModelSpecError(f"❌ Campo de quebra deve ser ≥ 0: {self.breaking_field}")

        if family == "xxz":
            if self.hz_transverse != 0:
                raise ModelSpecError("❌ hz_transverse não se aplica ao XXZ")
            if self.breaking_field != 0 and not self.lattice.is_bipartite:
                raise ModelSpecError(
                    f"❌ Campo alternado frustrado: anel periódico com N={self.lattice.num_sites} ímpar"
                )
        else:
            if self.delta != 0:
                raise ModelSpecError("❌ delta não se aplica à Ising transversa")
            if self.hz_transverse < 0:
                raise ModelSpecError(f"❌ hz_transverse deve ser ≥ 0: {self.hz_transverse}")
            if self.field_x != 0 or self.field_z != 0:
                raise ModelSpecError("❌ field_x/field_z só existem no XXZ (use breaking_field)")

    @classmethod
    def xxz(cls, num_sites: int, delta: float, breaking_field: float = 0.0,
            boundary: str = "periodic", field_x: float = 0.0, field_z: float = 0.0) -> "ModelSpec":
        return cls("xxz", LatticeSpec(num_sites, boundary), delta=delta,
                   breaking_field=breaking_field, field_x=field_x, field_z=field_z)

    @classmethod
    def tfim(cls, num_sites: int, hz_transverse: float, breaking_field: float = 0.0,
             boundary: str = "periodic") -> "ModelSpec":
        return cls("tfim", LatticeSpec(num_sites, boundary), hz_transverse=hz_transverse,
                   breaking_field=breaking_field)

    @property
    def num_sites(self) -> int:
        return self.lattice.num_sites

    @property
    def lam(self) -> float:
        """λ ≡ 1/(2h_z) da Ising transversa (derivado, nunca armazenado)"""
        if self.family != "tfim":
            raise ModelSpecError("❌ λ só existe para a Ising transversa")
        if self.hz_transverse == 0:
            return float("inf")
        return 1.0 / (2.0 * self.hz_transverse)

    @property
    def parameter(self) -> float:
        """Parâmetro varrido: Δ (XXZ) ou h_z (TFIM)"""
        return self.delta if self.family == "xxz" else self.hz_transverse

    @property
    def has_z2_symmetry(self) -> bool:
        """True quando nenhum campo quebra a simetria Z2 do modelo"""
        if self.family == "xxz":
            return self.breaking_field == 0 and self.field_z == 0 and self.field_x == 0
        return self.breaking_field == 0


@dataclass(frozen=True)
class FlipTerm:
    """
    Termo fora da diagonal: (O v)[k] += weights[k] · v[k ^ mask]

    weights é escalar ou array de comprimento 2^N.
    """

    mask: int
    weights: Union[float, complex, np.ndarray] = field(compare=False)


class OperatorAction:
    """
    Operador matrix-free na base de 2^N estados: diagonal + inversões de bits

    A soma é feita sempre na mesma ordem (diagonal, depois termos na ordem de
    construção), então a mesma entrada produz a mesma saída bit a bit.
    """

    def __init__(self, num_sites: int, diagonal: Union[float, np.ndarray],
                 flips: Tuple[FlipTerm, ...] = (), label: str = ""):
        self.num_sites = num_sites
        self.dimension = 1 << num_sites
        self.label = label

        if np.ndim(diagonal) == 0:
            diagonal = np.full(self.dimension, diagonal)
        diagonal = np.array(diagonal)
        diagonal.setflags(write=False)
        self._diagonal = diagonal

        frozen = []
        for term in flips:
            weights = term.weights
            if np.ndim(weights) != 0:
                weights = np.array(weights)
                weights.setflags(write=False)
            frozen.append(FlipTerm(term.mask, weights))
        self._flips = tuple(frozen)

        index = np.arange(self.dimension, dtype=np.int64)
        index.setflags(write=False)
        self._index = index

    @property
    def diagonal(self) -> np.ndarray:
        return self._diagonal

    @property
    def flips(self) -> Tuple[FlipTerm, ...]:
        return self._flips

    @property
    def is_real(self) -> bool:
        if np.iscomplexobj(self._diagonal):
            return False
        return not any(np.iscomplexobj(t.weights) for t in self._flips)

    def apply(self, v: np.ndarray) -> np.ndarray:
        """
        O·v para um vetor (dim,) ou bloco de colunas (dim, k)

        Args:
            v: vetor ou bloco

        Returns:
            np.ndarray: novo array com o resultado
        """
        v = np.asarray(v)
        if v.shape[0] != self.dimension:
            raise ValueError(f"❌ Vetor de dimensão {v.shape[0]}, esperado {self.dimension}")

        column = v.ndim > 1
        diagonal = self._diagonal[:, None] if column else self._diagonal
        out = diagonal * v

        for term in self._flips:
            gathered = v[self._index ^ term.mask]
            weights = term.weights
            if column and np.ndim(weights) != 0:
                weights = weights[:, None]
            out += weights * gathered
        return out

    __call__ = apply

    def as_linear_operator(self) -> LinearOperator:
        """Embrulho scipy para eigsh e afins"""
        dtype = np.float64 if self.is_real else np.complex128
        return LinearOperator(
            (self.dimension, self.dimension),
            matvec=self.apply,
            matmat=self.apply,
            rmatvec=self.apply if self.is_real else None,
            dtype=dtype,
        )

    def to_dense(self, max_sites: int = DENSE_LIMIT_SITES, block: int = 256) -> np.ndarray:
        """
        Matriz densa realizada aplicando o operador a blocos da base

        Raises:
            SizeLimitError: se num_sites > max_sites
        """
        if self.num_sites > max_sites:
            raise SizeLimitError(
                f"❌ Matriz densa com N={self.num_sites} > {max_sites}: use Lanczos"
            )
        dim = self.dimension
        dtype = np.float64 if self.is_real else np.complex128
        matrix = np.empty((dim, dim), dtype=dtype)
        for start in range(0, dim, block):
            stop = min(start + block, dim)
            columns = np.zeros((dim, stop - start), dtype=dtype)
            columns[np.arange(start, stop), np.arange(stop - start)] = 1.0
            matrix[:, start:stop] = self.apply(columns)
        return matrix


class ProductAction:
    """Produto de operadores aplicados da direita para a esquerda"""

    def __init__(self, factors: Tuple[OperatorAction, ...], label: str = ""):
        if not factors:
            raise ValueError("❌ Produto sem fatores")
        self.factors = tuple(factors)
        self.num_sites = factors[0].num_sites
        self.dimension = factors[0].dimension
        self.label = label

    def apply(self, v: np.ndarray) -> np.ndarray:
        out = np.asarray(v)
        for factor in reversed(self.factors):
            out = factor.apply(out)
        return out

    __call__ = apply


class HamiltonianAction(OperatorAction):
    """Hamiltoniano matrix-free com o ModelSpec que o gerou"""

    def __init__(self, spec: ModelSpec, diagonal: np.ndarray, flips: Tuple[FlipTerm, ...]):
        super().__init__(spec.num_sites, diagonal, flips, label=spec.family)
        self.spec = spec


# ============================================================================
# CONSTRUÇÃO DOS HAMILTONIANOS
# ============================================================================

def build_xxz(spec: ModelSpec) -> HamiltonianAction:
    """
    H = Σ⟨ij⟩ [−(σˣσˣ + σʸσʸ) + Δ σᶻσᶻ] + h Σ (−1)^i σᶻᵢ + field_z Σ σᶻᵢ + field_x Σ σˣᵢ

    −(σˣσˣ + σʸσʸ) = −2(σ⁺σ⁻ + σ⁻σ⁺): elemento −2 entre configurações
    antiparalelas da ligação.

    Raises:
        ModelSpecError: família errada ou campo alternado em anel ímpar
    """
    if spec.family != "xxz":
        raise ModelSpecError(f"❌ build_xxz recebeu família {spec.family}")

    lattice = spec.lattice
    index = np.arange(lattice.dimension, dtype=np.int64)
    spins = [spin_values(index, site) for site in range(lattice.num_sites)]

    diagonal = np.zeros(lattice.dimension)
    flips = []
    for i, j in lattice.bonds():
        diagonal += spec.delta * spins[i] * spins[j]
        antiparallel = spins[i] != spins[j]
        flips.append(FlipTerm((1 << i) | (1 << j), np.where(antiparallel, -2.0, 0.0)))

    if spec.breaking_field != 0:
        for site in range(lattice.num_sites):
            diagonal += spec.breaking_field * lattice.sublattice_parity(site) * spins[site]
    if spec.field_z != 0:
        for site in range(lattice.num_sites):
            diagonal += spec.field_z * spins[site]
    if spec.field_x != 0:
        for site in range(lattice.num_sites):
            flips.append(FlipTerm(1 << site, float(spec.field_x)))

    logger.debug(f"⚡ XXZ N={lattice.num_sites} Δ={spec.delta} h={spec.breaking_field}")
    return HamiltonianAction(spec, diagonal, tuple(flips))


def build_tfim(spec: ModelSpec) -> HamiltonianAction:
    """
    H = −Σ⟨ij⟩ σˣᵢσˣⱼ + h_z Σ σᶻᵢ + h Σ σˣᵢ

    Raises:
        ModelSpecError: família errada
    """
    if spec.family != "tfim":
        raise ModelSpecError(f"❌ build_tfim recebeu família {spec.family}")

    lattice = spec.lattice
    index = np.arange(lattice.dimension, dtype=np.int64)

    diagonal = np.zeros(lattice.dimension)
    for site in range(lattice.num_sites):
        diagonal += spec.hz_transverse * spin_values(index, site)

    flips = [FlipTerm((1 << i) | (1 << j), -1.0) for i, j in lattice.bonds()]
    if spec.breaking_field != 0:
        flips.extend(FlipTerm(1 << site, float(spec.breaking_field))
                     for site in range(lattice.num_sites))

    logger.debug(f"⚡ TFIM N={lattice.num_sites} h_z={spec.hz_transverse} h_x={spec.breaking_field}")
    return HamiltonianAction(spec, diagonal, tuple(flips))


def build_hamiltonian(spec: ModelSpec) -> HamiltonianAction:
    """Despacha pela família"""
    return build_xxz(spec) if spec.family == "xxz" else build_tfim(spec)


# ============================================================================
# OBSERVÁVEIS E OPERADORES DE SIMETRIA
# ============================================================================

def single_site_operator(num_sites: int, site: int, matrix: np.ndarray) -> OperatorAction:
    """
    Operador 2×2 arbitrário num sítio (base ↑ = 0, ↓ = 1)

    (O v)[k] = m[b, b]·v[k] + m[b, 1−b]·v[k ^ 2^site], b = bit do sítio em k
    """
    if not 0 <= site < num_sites:
        raise ModelSpecError(f"❌ Sítio {site} fora da rede de {num_sites} sítios")
    matrix = np.asarray(matrix)
    bits = (np.arange(1 << num_sites, dtype=np.int64) >> site) & 1
    diagonal = np.where(bits == 0, matrix[0, 0], matrix[1, 1])
    off = np.where(bits == 0, matrix[0, 1], matrix[1, 0])
    if not np.iscomplexobj(matrix) or not np.any(np.imag(matrix)):
        diagonal, off = np.real(diagonal), np.real(off)
    flips = (FlipTerm(1 << site, off),) if np.any(off) else ()
    return OperatorAction(num_sites, diagonal, flips, label=f"op[{site}]")


def local_operator(num_sites: int, ops: Dict[int, np.ndarray]) -> ProductAction:
    """Produto de operadores 2×2 em sítios distintos"""
    factors = tuple(single_site_operator(num_sites, site, m) for site, m in sorted(ops.items()))
    return ProductAction(factors, label="·".join(f"op[{s}]" for s in sorted(ops)))


def pauli_product(num_sites: int, labels: Dict[int, str]) -> ProductAction:
    """Produto de Paulis, ex: {0: 'z', 3: 'z'} → σᶻ₀σᶻ₃"""
    return local_operator(num_sites, {site: PAULI[a] for site, a in labels.items()})


def global_spin_flip(num_sites: int) -> OperatorAction:
    """Πᵢ σˣᵢ: rotação π em torno de x (Z2 do XXZ)"""
    return OperatorAction(num_sites, 0.0, (FlipTerm((1 << num_sites) - 1, 1.0),), label="Πσx")


def global_z_rotation(num_sites: int) -> OperatorAction:
    """Πᵢ σᶻᵢ: rotação π em torno de z (Z2 da Ising transversa)"""
    index = np.arange(1 << num_sites, dtype=np.int64)
    parity = np.ones(1 << num_sites)
    for site in range(num_sites):
        parity *= spin_values(index, site)
    return OperatorAction(num_sites, parity, label="Πσz")


def sublattice_rotation(lattice: LatticeSpec) -> OperatorAction:
    """Π_{i ímpar} σᶻᵢ: troca o sinal de σˣ e σʸ numa subrede"""
    index = np.arange(lattice.dimension, dtype=np.int64)
    sign = np.ones(lattice.dimension)
    for site in range(1, lattice.num_sites, 2):
        sign *= spin_values(index, site)
    return OperatorAction(lattice.num_sites, sign, label="Π_odd σz")


def total_magnetization(num_sites: int) -> OperatorAction:
    """Σᵢ σᶻᵢ"""
    index = np.arange(1 << num_sites, dtype=np.int64)
    total = sum(spin_values(index, site) for site in range(num_sites))
    return OperatorAction(num_sites, total, label="Σσz")


def z2_symmetry(spec: ModelSpec) -> Optional[OperatorAction]:
    """Operador Z2 que comuta com H, ou None se algum campo o quebra"""
    if not spec.has_z2_symmetry:
        return None
    if spec.family == "xxz":
        return global_spin_flip(spec.num_sites)
    return global_z_rotation(spec.num_sites)


def tfim_lambda(spec: ModelSpec) -> float:
    """λ = 1/(2h_z): H/(2h_z) = −λΣσˣσˣ + ½Σσᶻ"""
    return spec.lam

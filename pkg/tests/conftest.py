# -*- coding: utf-8 -*-
"""
Fixtures compartilhadas: geradores semeados, estados de referência e
construção explícita por produto de Kronecker
"""

from functools import reduce

import numpy as np
import pytest

from spin_entangle.pauli import IDENTITY, PAULI
from spin_entangle.reduced import TwoSiteDensityMatrix

SINGLET = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
TRIPLET_ZERO = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2)


def kron_operator(num_sites, ops):
    """Σ via kron: sítio k ocupa o fator N−1−k (bit k = sítio k)"""
    factors = [IDENTITY] * num_sites
    for site, matrix in ops.items():
        factors[num_sites - 1 - site] = matrix
    return reduce(np.kron, factors)


def kron_pauli(num_sites, labels):
    return kron_operator(num_sites, {site: PAULI[a] for site, a in labels.items()})


def projector(psi):
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


@pytest.fixture
def rng():
    return np.random.default_rng(20031)


@pytest.fixture
def singlet_rho():
    return TwoSiteDensityMatrix.from_array(projector(SINGLET))


@pytest.fixture
def maximally_mixed():
    return TwoSiteDensityMatrix.from_array(np.eye(4) / 4)

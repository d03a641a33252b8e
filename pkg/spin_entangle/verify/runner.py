#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/verify/runner.py
💾 FUNÇÃO: Registro e execução das suítes de verificação
🔧 DESCRIÇÃO: Nome → (função, tentativas padrão); 'all' roda todas em ordem
              com o mesmo Generator semeado por suíte
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..config import DEFAULT_SEED
from ..errors import ConfigError
from .suites import (SuiteResult, suite_conditions, suite_convexity, suite_ising, suite_mixture,
                     suite_u1, suite_wootters, suite_z2)

logger = logging.getLogger(__name__)

SuiteFunction = Callable[[np.random.Generator, int], SuiteResult]

SUITES: Dict[str, Tuple[SuiteFunction, int]] = {
    'wootters': (suite_wootters, 1000),
    'mixture': (suite_mixture, 200),
    'convexity': (suite_convexity, 500),
    'z2': (suite_z2, 1000),
    'u1': (suite_u1, 1000),
    'ising': (suite_ising, 1000),
    'conditions': (suite_conditions, 1000),
}

SUITE_NAMES = tuple(SUITES) + ('all',)


def run_suite(name: str, trials: Optional[int] = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """
    Roda uma suíte

    Raises:
        ConfigError: nome desconhecido ou trials < 1
    """
    if name not in SUITES:
        raise ConfigError(f"❌ Suíte desconhecida: {name} (use {', '.join(SUITE_NAMES)})")
    function, default_trials = SUITES[name]
    trials = default_trials if trials is None else int(trials)
    if trials < 1:
        raise ConfigError(f"❌ trials deve ser ≥ 1: {trials}")
    logger.info(f"⚡ Suíte {name}: {trials} tentativas (semente {seed})")
    return function(np.random.default_rng(seed), trials)


def run_suites(name: str, trials: Optional[int] = None, seed: int = DEFAULT_SEED) -> List[SuiteResult]:
    """'all' expande para todas as suítes registradas"""
    names = list(SUITES) if name == 'all' else [name]
    return [run_suite(n, trials, seed) for n in names]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/config.py
💾 FUNÇÃO: Variáveis de ambiente, arquivo JSON de varredura e logging
🔧 DESCRIÇÃO: Flags da linha de comando sobrescrevem o arquivo JSON; o JSON
              sobrescreve os padrões. Chaves desconhecidas são erro.
"""

import os
import json
import logging
from typing import Any, Dict, Optional, Tuple

from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20031
DEFAULT_BREAKING_FIELD = 1e-3

# Chaves aceitas no JSON (espelham as flags do CLI)
CONFIG_KEYS = (
    "model", "sites", "boundary", "grid", "sep", "break", "beta",
    "jobs", "seed", "out", "field_x", "field_z", "site_i", "solver",
)
SOLVER_KEYS = ("max_iterations", "tolerance", "degeneracy_tolerance", "perturbation")

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def env_jobs() -> int:
    """SPIN_ENTANGLE_JOBS (padrão 1)"""
    raw = os.getenv("SPIN_ENTANGLE_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ConfigError(f"❌ SPIN_ENTANGLE_JOBS inválido: {raw}")
    if jobs < 1:
        raise ConfigError(f"❌ SPIN_ENTANGLE_JOBS deve ser ≥ 1: {jobs}")
    return jobs


def env_seed() -> int:
    """SPIN_ENTANGLE_SEED (padrão 20031)"""
    raw = os.getenv("SPIN_ENTANGLE_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"❌ SPIN_ENTANGLE_SEED inválido: {raw}")


def env_log_level() -> str:
    return os.getenv("SPIN_ENTANGLE_LOG_LEVEL", "INFO").upper()


def configure_logging(level: Optional[str] = None):
    """Configuração única do logging (chamada pelo app.py)"""
    name = (level or env_log_level()).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        raise ConfigError(f"❌ Nível de log desconhecido: {name}")
    logging.basicConfig(level=numeric, format=LOG_FORMAT)


def parse_float_list(text: str, name: str) -> Tuple[float, ...]:
    """'0.5,1.0, 1.5' → (0.5, 1.0, 1.5)"""
    items = [item.strip() for item in str(text).split(",") if item.strip()]
    try:
        return tuple(float(item) for item in items)
    except ValueError:
        raise ConfigError(f"❌ Lista numérica inválida em {name}: {text}")


def parse_int_list(text: str, name: str) -> Tuple[int, ...]:
    items = [item.strip() for item in str(text).split(",") if item.strip()]
    try:
        return tuple(int(item) for item in items)
    except ValueError:
        raise ConfigError(f"❌ Lista de inteiros inválida em {name}: {text}")


def as_list(value: Any, name: str, kind=float) -> Tuple:
    """Aceita lista JSON, número único ou string separada por vírgulas"""
    if value is None:
        return ()
    if isinstance(value, str):
        return parse_int_list(value, name) if kind is int else parse_float_list(value, name)
    if isinstance(value, (list, tuple)):
        try:
            return tuple(kind(item) for item in value)
        except (TypeError, ValueError):
            raise ConfigError(f"❌ Lista inválida em {name}: {value}")
    try:
        return (kind(value),)
    except (TypeError, ValueError):
        raise ConfigError(f"❌ Valor inválido em {name}: {value}")


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Carrega o JSON de varredura

    Args:
        path: caminho do arquivo

    Returns:
        dict: valores do arquivo (chaves validadas)

    Raises:
        ConfigError: arquivo ausente, JSON inválido ou chave desconhecida
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except FileNotFoundError:
        raise ConfigError(f"❌ Arquivo de configuração não encontrado: {path}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"❌ JSON inválido em {path}: {e}")

    if not isinstance(data, dict):
        raise ConfigError(f"❌ {path} deve conter um objeto JSON")

    unknown = sorted(set(data) - set(CONFIG_KEYS))
    if unknown:
        raise ConfigError(f"❌ Chaves desconhecidas em {path}: {', '.join(unknown)}")

    solver = data.get("solver")
    if solver is not None:
        if not isinstance(solver, dict):
            raise ConfigError("❌ 'solver' deve ser um objeto")
        unknown = sorted(set(solver) - set(SOLVER_KEYS))
        if unknown:
            raise ConfigError(f"❌ Chaves desconhecidas em solver: {', '.join(unknown)}")

    logger.info(f"📁 Configuração carregada: {path}")
    return data


def merge_config(file_values: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Flags com valor (não None) sobrescrevem o arquivo"""
    merged = dict(file_values)
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value
    return merged

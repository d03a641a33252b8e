#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/sweep.py
💾 FUNÇÃO: Varreduras em Δ / h_z, análise de uma matriz e escrita das tabelas
🔧 DESCRIÇÃO: Uma diagonalização por (parâmetro, campo); uma linha por
              (parâmetro, separação, campo) em ordem de grade. Pontos com falha
              viram linhas {'status': 'erro'} e a varredura continua.
"""

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, TextIO, Tuple

import numpy as np

from .config import DEFAULT_BREAKING_FIELD, DEFAULT_SEED, as_list, env_jobs, env_seed
from .entangle import concurrence
from .errors import ConfigError, CubicRootError, InvalidCorrelatorError, ModelSpecError, SpinEntangleError
from .model import FAMILIES, LatticeSpec, ModelSpec, build_hamiltonian
from .reduced import CorrelatorSet, TwoSiteDensityMatrix, correlators_from_rho, read_matrix_file, reduce_pure, reduce_thermal
from .solver import SolverOptions, dense_spectrum, solve_ground_state
from .symmetry import (Classification, classify_form, concurrence_ising, concurrence_u1,
                       concurrence_z2, sublattice_flip, tfim_invariance_condition)

logger = logging.getLogger(__name__)

COLUMNS = (
    'param', 'r', 'h_break', 'C_general', 'C_closed_form', 'form',
    'branch_valid', 'tfim_condition', 'xx', 'yy', 'zz', 'sz_i', 'sz_j', 'sx_i', 'sx_j',
    'gap', 'E_f', 'status', 'erro',
)

# Concordância exigida entre o caminho geral e a forma fechada
CROSS_CHECK_TOL = 1e-9

LANCZOS_MAX_SITES = 22


@dataclass(frozen=True)
class SweepConfig:
    model: str
    sites: int
    grid: Tuple[float, ...]
    separations: Tuple[int, ...] = (1,)
    breaking_fields: Tuple[float, ...] = (0.0, DEFAULT_BREAKING_FIELD)
    boundary: str = "periodic"
    beta: float = 0.0
    jobs: int = 1
    seed: int = DEFAULT_SEED
    out: Optional[str] = None
    field_x: float = 0.0
    field_z: float = 0.0
    site_i: int = 0
    solver: SolverOptions = field(default_factory=SolverOptions)

    def __post_init__(self):
        if self.model not in FAMILIES:
            raise ConfigError(f"❌ Modelo desconhecido: {self.model} (use xxz ou tfim)")
        if not self.grid:
            raise ConfigError("❌ Grade de parâmetros vazia")
        if not self.separations:
            raise ConfigError("❌ Lista de separações vazia")
        if not self.breaking_fields:
            raise ConfigError("❌ Lista de campos de quebra vazia")
        if self.jobs < 1:
            raise ConfigError(f"❌ jobs deve ser ≥ 1: {self.jobs}")
        if self.beta < 0:
            raise ConfigError(f"❌ β deve ser ≥ 0: {self.beta}")
        if self.model == "tfim" and (self.field_x or self.field_z):
            raise ConfigError("❌ field_x/field_z só existem no XXZ")

        try:
            lattice = LatticeSpec(self.sites, self.boundary)
        except ModelSpecError as e:
            raise ConfigError(str(e))
        object.__setattr__(self, "boundary", lattice.boundary)

        if self.sites < 2:
            raise ConfigError("❌ Varreduras exigem N ≥ 2")
        if self.beta > 0 and self.sites > self.solver.dense_limit_sites:
            raise ConfigError(
                f"❌ β > 0 usa o espectro denso: N={self.sites} > {self.solver.dense_limit_sites}"
            )
        if self.sites > LANCZOS_MAX_SITES:
            raise ConfigError(f"❌ N={self.sites} acima do limite do Lanczos ({LANCZOS_MAX_SITES})")
        if not 0 <= self.site_i < self.sites:
            raise ConfigError(f"❌ site_i={self.site_i} fora da rede")
        for r in self.separations:
            if r < 1 or r >= self.sites:
                raise ConfigError(f"❌ Separação {r} fora de [1, {self.sites - 1}]")
            if lattice.boundary == "open" and self.site_i + r >= self.sites:
                raise ConfigError(f"❌ Separação {r} sai da cadeia aberta a partir do sítio {self.site_i}")

        for param in self.grid:
            for h in self.breaking_fields:
                try:
                    self.model_spec(param, h)
                except ModelSpecError as e:
                    raise ConfigError(f"{e} (ponto param={param}, h={h})")

    def model_spec(self, param: float, h: float) -> ModelSpec:
        if self.model == "xxz":
            return ModelSpec.xxz(self.sites, param, h, self.boundary, self.field_x, self.field_z)
        return ModelSpec.tfim(self.sites, param, h, self.boundary)

    def site_j(self, r: int) -> int:
        return (self.site_i + r) % self.sites

    @classmethod
    def from_mapping(cls, values: Dict[str, Any]) -> "SweepConfig":
        """
        Constrói a partir do JSON/flags mesclados (chaves do CLI)

        Raises:
            ConfigError: chave obrigatória ausente ou valor inválido
        """
        for key in ("model", "sites", "grid"):
            if values.get(key) is None:
                raise ConfigError(f"❌ '{key}' é obrigatório")

        solver_values = dict(values.get("solver") or {})
        try:
            seed = int(values["seed"]) if values.get("seed") is not None else env_seed()
            solver = SolverOptions(seed=seed, **solver_values)
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"❌ Bloco solver inválido: {e}")

        breaking = values.get("break")
        try:
            return cls(
                model=str(values["model"]).lower(),
                sites=int(values["sites"]),
                grid=as_list(values["grid"], "grid"),
                separations=as_list(values.get("sep", (1,)), "sep", kind=int),
                breaking_fields=(0.0, DEFAULT_BREAKING_FIELD) if breaking is None else as_list(breaking, "break"),
                boundary=str(values.get("boundary", "periodic")),
                beta=float(values.get("beta", 0.0)),
                jobs=int(values["jobs"]) if values.get("jobs") is not None else env_jobs(),
                seed=seed,
                out=values.get("out"),
                field_x=float(values.get("field_x", 0.0)),
                field_z=float(values.get("field_z", 0.0)),
                site_i=int(values.get("site_i", 0)),
                solver=solver,
            )
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"❌ Configuração inválida: {e}")


# ============================================================================
# LINHAS
# ============================================================================

def closed_form(classification: Classification, corr: CorrelatorSet) -> Tuple[Optional[float], Optional[bool], Optional[bool]]:
    """
    (C fechada, ramo válido, condição de invariância) para a forma detectada

    'general' não tem forma fechada. Falhas de positividade das correlações
    deixam a forma fechada vazia.
    """
    kind = classification.kind
    try:
        if kind == "z2":
            return concurrence_z2(corr), True, None
        if kind == "u1":
            result = concurrence_u1(corr)
            if not result.branch_valid:
                flipped = concurrence_u1(sublattice_flip(corr))
                if flipped.branch_valid:
                    result = flipped
            return result.concurrence, result.branch_valid, None
        if kind == "ising":
            value = concurrence_ising(classification.form).concurrence
            return value, True, tfim_invariance_condition(corr)
    except (InvalidCorrelatorError, CubicRootError) as e:
        logger.warning(f"⚠️ Forma fechada indisponível: {e}")
    return None, None, None


def build_row(param: float, r: int, h: float, rho: TwoSiteDensityMatrix, gap: float) -> Dict[str, Any]:
    """Linha completa da tabela para uma matriz reduzida"""
    report = concurrence(rho)
    corr = correlators_from_rho(rho)
    classification = classify_form(rho)
    closed, branch_valid, tfim_condition = closed_form(classification, corr)

    mismatch = ""
    if branch_valid and closed is not None and abs(closed - report.concurrence) > CROSS_CHECK_TOL:
        mismatch = (f"❌ Forma {classification.kind} diverge do caminho geral: "
                    f"{closed:.12g} vs {report.concurrence:.12g}")
        logger.error(f"{mismatch} (param={param} r={r} h={h})")

    row = {
        'param': param,
        'r': r,
        'h_break': h,
        'C_general': report.concurrence,
        'C_closed_form': closed,
        'form': classification.kind,
        'branch_valid': branch_valid,
        'tfim_condition': tfim_condition,
        'gap': gap,
        'E_f': report.eof,
        'status': 'erro' if mismatch else 'sucesso',
        'erro': mismatch,
    }
    row.update(corr.as_dict())
    return row


def failed_row(param: float, r: int, h: float, message: str) -> Dict[str, Any]:
    row = {key: None for key in COLUMNS}
    row.update({'param': param, 'r': r, 'h_break': h, 'status': 'erro', 'erro': message})
    return row


@dataclass(frozen=True)
class SweepTask:
    config: SweepConfig
    param: float
    h: float


def run_point(task: SweepTask) -> List[Dict[str, Any]]:
    """
    Uma diagonalização e as linhas de todas as separações

    Returns:
        list: linhas na ordem de config.separations
    """
    config = task.config
    try:
        H = build_hamiltonian(config.model_spec(task.param, task.h))
        if config.beta > 0:
            spectrum = dense_spectrum(H, config.solver)
            ensemble = spectrum.at_beta(config.beta)
            gap = spectrum.gap

            def reduce(j):
                return reduce_thermal(ensemble, config.site_i, j)
        else:
            psi, report = solve_ground_state(H, config.solver)
            gap = report.gap

            def reduce(j):
                return reduce_pure(psi, config.site_i, j)

        rows = [build_row(task.param, r, task.h, reduce(config.site_j(r)), gap)
                for r in config.separations]
        logger.info(f"✅ Ponto param={task.param:g} h={task.h:g} concluído")
        return rows

    except (SpinEntangleError, np.linalg.LinAlgError) as e:
        logger.error(f"❌ Falha em param={task.param:g} h={task.h:g}: {e}")
        return [failed_row(task.param, r, task.h, str(e)) for r in config.separations]


@dataclass(frozen=True)
class SweepResult:
    rows: List[Dict[str, Any]]

    @property
    def failures(self) -> int:
        return sum(1 for row in self.rows if row['status'] == 'erro')


def sweep(config: SweepConfig) -> SweepResult:
    """
    Executa a grade (paralela com config.jobs > 1) e ordena param → r → h

    ProcessPoolExecutor.map devolve na ordem de submissão; a saída não
    depende da ordem de término.
    """
    tasks = [SweepTask(config, param, h) for param in config.grid for h in config.breaking_fields]
    logger.info(f"⚡ Varredura {config.model.upper()} N={config.sites}: {len(tasks)} diagonalizações")

    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(run_point, tasks))
    else:
        results = [run_point(task) for task in tasks]

    by_point = {(task.param, task.h): rows for task, rows in zip(tasks, results)}
    ordered = []
    for param in config.grid:
        for k, _r in enumerate(config.separations):
            for h in config.breaking_fields:
                ordered.append(by_point[(param, h)][k])

    result = SweepResult(ordered)
    if result.failures:
        logger.warning(f"⚠️ {result.failures} linhas com falha")
    else:
        logger.info(f"✅ Varredura concluída: {len(ordered)} linhas")
    return result


# ============================================================================
# ESCRITA
# ============================================================================

def format_value(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return '%.12g' % value
    return str(value)


def write_csv(rows: List[Dict[str, Any]], handle: TextIO):
    """Cabeçalho de uma linha, floats com 12 dígitos significativos, '\\n'"""
    writer = csv.DictWriter(handle, fieldnames=COLUMNS, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow({key: format_value(row.get(key)) for key in COLUMNS})


def write_output(result: SweepResult, config: SweepConfig, handle_stdout: Optional[TextIO] = None):
    """
    .xlsx → planilha; '-' ou None → CSV no handle dado; outro caminho → CSV
    """
    out = config.out
    if out and out.lower().endswith('.xlsx'):
        from .planilha import gerar_planilha_varredura
        resumo = {
            'Modelo': config.model.upper(),
            'Sítios': config.sites,
            'Contorno': config.boundary,
            'β': config.beta,
            'Semente': config.seed,
            'Linhas': len(result.rows),
            'Falhas': result.failures,
        }
        gerar_planilha_varredura(result.rows, COLUMNS, out, resumo)
        return
    if out and out != '-':
        with open(out, 'w', encoding='utf-8', newline='') as handle:
            write_csv(result.rows, handle)
        logger.info(f"📁 CSV gravado: {out}")
        return
    if handle_stdout is not None:
        write_csv(result.rows, handle_stdout)


# ============================================================================
# ANÁLISE DE UMA MATRIZ
# ============================================================================

def analyze_rho(rho: TwoSiteDensityMatrix) -> Dict[str, Any]:
    """Validade, forma, raízes, C, E_f e condições de ramo"""
    report = concurrence(rho)
    corr = correlators_from_rho(rho)
    classification = classify_form(rho)
    closed, branch_valid, tfim_condition = closed_form(classification, corr)
    eigenvalues = rho.eigenvalues

    result = {
        'status': 'sucesso',
        'hermitian': True,
        'trace': float(np.real(np.trace(rho.entries))),
        'min_eigenvalue': float(eigenvalues[0]),
        'form': classification.kind,
        'form_residual': classification.residual,
        'roots': list(report.roots),
        'concurrence': report.concurrence,
        'eof': report.eof,
        'closed_form': closed,
        'branch_valid': branch_valid,
        'tfim_condition': tfim_condition,
        'correlators': corr.as_dict(),
    }
    if classification.kind == "u1":
        flags = concurrence_u1(corr)
        result['u1_flags'] = {
            'yy_plus_zz_above_xx_minus_1': flags.upper_sum_positive,
            'yy_above_zz': flags.yy_above_zz,
            'u_plus_largest': flags.u_plus_largest,
        }
    return result


def analyze(path: str) -> Dict[str, Any]:
    """
    Lê o arquivo de 16 entradas e analisa

    Raises:
        DensityMatrixError: arquivo malformado ou matriz inválida
    """
    rho = read_matrix_file(path)
    logger.info(f"📊 Analisando {path}")
    return analyze_rho(rho)

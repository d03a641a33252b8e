#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
⚛️ Emaranhamento de Dois Spins - Linha de Comando
📦 FUNCIONALIDADE: varredura → ρ reduzida → concorrência → CSV/planilha
🔧 COMANDOS: sweep, analyze, verify
📤 SAÍDA: 0 sucesso, 1 uso/configuração, 2 falha numérica
"""

import json
import logging
import sys

import click
import numpy as np

from spin_entangle import __version__
from spin_entangle.config import configure_logging, env_seed, load_config_file, merge_config
from spin_entangle.errors import ConfigError, SpinEntangleError
from spin_entangle.sweep import SweepConfig, analyze, sweep, write_output
from spin_entangle.verify import SUITE_NAMES, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2


class SpinGroup(click.Group):
    """Erros de uso do click saem com código 1"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


def _json_default(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} não serializável")


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False, default=_json_default)


def _usage_failure(e: Exception):
    click.echo(str(e), err=True)
    sys.exit(EXIT_USAGE)


# ============================================================================
# GRUPO
# ============================================================================

@click.group(cls=SpinGroup)
@click.version_option(__version__, prog_name="spin-entangle")
@click.option('--log-level', default=None, help="Nível de log (padrão: SPIN_ENTANGLE_LOG_LEVEL ou INFO)")
@click.option('--verbose', '-v', is_flag=True, help="Atalho para --log-level DEBUG")
def cli(log_level, verbose):
    """Concorrência de dois spins em cadeias XXZ e Ising transversa"""
    try:
        configure_logging("DEBUG" if verbose else log_level)
    except ConfigError as e:
        _usage_failure(e)


# ============================================================================
# SWEEP
# ============================================================================

@cli.command(name='sweep')
@click.option('--config', 'config_path', default=None, help="Arquivo JSON de varredura")
@click.option('--model', default=None, help="xxz ou tfim")
@click.option('--sites', type=int, default=None, help="Número de sítios N")
@click.option('--boundary', default=None, help="pbc ou obc")
@click.option('--grid', default=None, help="Δ (xxz) ou h_z (tfim), separados por vírgula")
@click.option('--sep', default=None, help="Separações r, separadas por vírgula")
@click.option('--break', 'breaking', default=None, help="Campos de quebra h, separados por vírgula")
@click.option('--beta', type=float, default=None, help="β > 0 usa o ensemble térmico (N ≤ 12)")
@click.option('--jobs', type=int, default=None, envvar='SPIN_ENTANGLE_JOBS', help="Processos paralelos")
@click.option('--seed', type=int, default=None, help="Semente do vetor inicial")
@click.option('--out', default=None, help="Arquivo .csv ou .xlsx ('-' = stdout)")
@click.option('--field-x', type=float, default=None, help="Campo uniforme em x (xxz)")
@click.option('--field-z', type=float, default=None, help="Campo uniforme em z (xxz)")
@click.option('--site-i', type=int, default=None, help="Sítio de referência i")
def sweep_command(config_path, model, sites, boundary, grid, sep, breaking, beta, jobs, seed, out,
                  field_x, field_z, site_i):
    """Varre a grade e emite uma linha por (parâmetro, r, h)"""
    overrides = {
        'model': model, 'sites': sites, 'boundary': boundary, 'grid': grid, 'sep': sep,
        'break': breaking, 'beta': beta, 'jobs': jobs, 'seed': seed, 'out': out,
        'field_x': field_x, 'field_z': field_z, 'site_i': site_i,
    }
    try:
        file_values = load_config_file(config_path) if config_path else {}
        config = SweepConfig.from_mapping(merge_config(file_values, overrides))
    except ConfigError as e:
        _usage_failure(e)

    result = sweep(config)
    try:
        write_output(result, config, sys.stdout)
    except OSError as e:
        click.echo(f"❌ Erro gravando {config.out}: {e}", err=True)
        sys.exit(EXIT_NUMERICAL)

    if result.failures:
        logger.error(f"❌ {result.failures} linhas com falha")
        sys.exit(EXIT_NUMERICAL)
    sys.exit(EXIT_OK)


# ============================================================================
# ANALYZE
# ============================================================================

def _format_report(path: str, result: dict) -> str:
    corr = result['correlators']
    lines = [
        f"📊 ANÁLISE: {path}",
        f"   Traço: {result['trace']:.12g}",
        f"   Menor autovalor: {result['min_eigenvalue']:.6e}",
        f"   Forma: {result['form']} (resíduo {result['form_residual']:.2e})",
        "   √λ: " + ", ".join(f"{r:.12g}" for r in result['roots']),
        f"   Concorrência: {result['concurrence']:.12g}",
        f"   E_f: {result['eof']:.12g}",
    ]
    if result['closed_form'] is not None:
        lines.append(f"   Forma fechada: {result['closed_form']:.12g}")
    if result['branch_valid'] is not None:
        lines.append(f"   Ramo válido: {'sim' if result['branch_valid'] else 'não'}")
    for name, flag in result.get('u1_flags', {}).items():
        lines.append(f"      {name}: {'sim' if flag else 'não'}")
    if result['tfim_condition'] is not None:
        lines.append(f"   Condição de invariância: {'sim' if result['tfim_condition'] else 'não'}")
    lines.append("   Correlações: " + ", ".join(f"{k}={v:.12g}" for k, v in corr.items()))
    return "\n".join(lines)


@cli.command(name='analyze')
@click.argument('path')
@click.option('--json', 'as_json', is_flag=True, help="Saída JSON")
def analyze_command(path, as_json):
    """Analisa um arquivo de 16 entradas complexas"""
    try:
        result = analyze(path)
    except SpinEntangleError as e:
        if as_json:
            click.echo(_dump({'status': 'erro', 'erro': str(e)}))
        else:
            click.echo(str(e), err=True)
        sys.exit(EXIT_NUMERICAL)

    click.echo(_dump(result) if as_json else _format_report(path, result))
    sys.exit(EXIT_OK)


# ============================================================================
# VERIFY
# ============================================================================

@cli.command(name='verify')
@click.argument('suite')
@click.option('--trials', type=int, default=None, help="Tentativas por suíte (padrão da suíte)")
@click.option('--seed', type=int, default=None, help="Semente (padrão SPIN_ENTANGLE_SEED)")
def verify_command(suite, trials, seed):
    """Roda uma suíte de propriedades (ou 'all') e imprime JSON"""
    if suite not in SUITE_NAMES:
        _usage_failure(ConfigError(f"❌ Suíte desconhecida: {suite} (use {', '.join(SUITE_NAMES)})"))
    try:
        results = run_suites(suite, trials, env_seed() if seed is None else seed)
    except ConfigError as e:
        _usage_failure(e)

    passed = all(r.passed for r in results)
    click.echo(_dump({'passed': passed, 'suites': [r.to_dict() for r in results]}))
    sys.exit(EXIT_OK if passed else EXIT_NUMERICAL)


if __name__ == '__main__':
    cli()

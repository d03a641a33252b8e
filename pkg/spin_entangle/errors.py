#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/errors.py
💾 FUNÇÃO: Hierarquia de exceções do pacote
🔧 DESCRIÇÃO: Código de biblioteca levanta estas exceções; a orquestração
              (sweep, analyze, verify) converte em envelopes {'status': 'erro'}
"""


class SpinEntangleError(Exception):
    """Base de todos os erros do pacote"""


class ModelSpecError(SpinEntangleError, ValueError):
    """Parâmetros de rede/modelo inválidos"""


class SizeLimitError(SpinEntangleError, ValueError):
    """Caminho denso pedido acima do limite de sítios"""


class ConvergenceError(SpinEntangleError):
    """
    Lanczos não convergiu dentro do número máximo de iterações

    Attributes:
        best_residual: menor resíduo ‖Hψ − Eψ‖ obtido
        iterations: iterações executadas
    """

    def __init__(self, message: str, best_residual: float, iterations: int):
        super().__init__(message)
        self.best_residual = best_residual
        self.iterations = iterations


class DensityMatrixError(SpinEntangleError, ValueError):
    """Matriz densidade não Hermitiana, traço errado, autovalor negativo ou arquivo malformado"""


class InvalidCorrelatorError(SpinEntangleError, ValueError):
    """Correlações incompatíveis com ρ positiva"""


class HypothesisError(SpinEntangleError, ValueError):
    """Hipótese de uma fórmula fechada violada"""


class CubicRootError(SpinEntangleError):
    """Raiz da cúbica negativa além da tolerância"""


class ConfigError(SpinEntangleError, ValueError):
    """Configuração de varredura inválida ou suíte desconhecida"""

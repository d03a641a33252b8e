# Módulo de verificação das formas fechadas
from .runner import SUITE_NAMES, SUITES, run_suite, run_suites
from .suites import SuiteResult

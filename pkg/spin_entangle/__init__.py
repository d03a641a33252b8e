# -*- coding: utf-8 -*-
"""
Módulo de Emaranhamento de Dois Spins (XXZ / Ising transversa)
"""

__version__ = "0.3.0"

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/cubic.py
💾 FUNÇÃO: Raízes reais de x³ + b x² + c x + d
🔧 DESCRIÇÃO: Ramo trigonométrico (três raízes reais), Cardano (uma raiz real),
              numpy.roots perto do discriminante nulo, polimento de Newton
"""

import math
from typing import Tuple

import numpy as np

# |discriminante| abaixo disso (relativo à escala^6) usa numpy.roots
DISCRIMINANT_TOL = 1e-12
IMAG_TOL = 1e-7


def _cube_root(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _polish(root: float, b: float, c: float, d: float, steps: int = 3) -> float:
    """Newton em f(x) = x³ + bx² + cx + d, só aceita passos que reduzem |f|"""
    for _ in range(steps):
        f = ((root + b) * root + c) * root + d
        fp = (3.0 * root + 2.0 * b) * root + c
        if f == 0.0 or fp == 0.0:
            break
        candidate = root - f / fp
        if abs(((candidate + b) * candidate + c) * candidate + d) >= abs(f):
            break
        root = candidate
    return root


def solve_depressed_cubic(p: float, q: float) -> Tuple[float, ...]:
    """Raízes reais de t³ + p t + q = 0"""
    if p == 0.0:
        return (-_cube_root(q),)

    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc > 0.0:
        s = math.sqrt(disc)
        return (_cube_root(-q / 2.0 + s) + _cube_root(-q / 2.0 - s),)

    argument = (3.0 * q / (2.0 * p)) * math.sqrt(-3.0 / p)
    phi = math.acos(max(-1.0, min(1.0, argument))) / 3.0
    amplitude = 2.0 * math.sqrt(-p / 3.0)
    return tuple(amplitude * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3))


def solve_monic_cubic(b: float, c: float, d: float) -> np.ndarray:
    """
    Raízes reais de x³ + b x² + c x + d em ordem crescente

    Perto de raiz múltipla devolve as partes reais dos três autovalores da
    matriz companheira (pares complexos com parte imaginária < 1e−7·escala
    contam como raiz dupla).

    Returns:
        np.ndarray: 1 ou 3 raízes
    """
    p = c - b * b / 3.0
    q = d - b * c / 3.0 + 2.0 * b ** 3 / 27.0
    scale = max(1.0, abs(b), math.sqrt(abs(c)), _cube_root(abs(d)))
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3

    if abs(disc) <= DISCRIMINANT_TOL * scale ** 6:
        raw = np.roots([1.0, b, c, d])
        roots = [z.real for z in raw if abs(z.imag) <= IMAG_TOL * scale]
        if not roots:
            roots = [raw[np.argmin(np.abs(raw.imag))].real]
    else:
        roots = [t - b / 3.0 for t in solve_depressed_cubic(p, q)]

    return np.sort(np.array([_polish(r, b, c, d) for r in roots]))

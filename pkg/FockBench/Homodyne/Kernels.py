#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Conditional collapse kernels |alpha| <alpha|_2 Pi^l |alpha>_2 on the signal mode and their quadrature limits.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from FockBench.config import NUMERICS
from FockBench.Fock.Errors import InvalidParameterError
from FockBench.Fock.Operators import DenseOperator, quad_eigenvectors
from FockBench.Fock.States import (CoherentParams, as_coherent_params, check_truncation_budget, coherent_state,
                                   default_cutoff)
from FockBench.Homodyne.Projectors import eigen_index, eigenbasis_block, interval_outcomes

logger = logging.getLogger()

SQRT_2PI = math.sqrt(2 * math.pi)


@dataclass(frozen=True, eq=False)
class CollapseKernel:
    """
    Effective operator on the signal mode after outcome l.

    Attributes
    ----------
    matrix: np.ndarray
        mode-1 number-basis matrix, Hermitian positive semidefinite
    alpha: CoherentParams
        local oscillator
    l: int
        count difference outcome
    """

    matrix: np.ndarray
    alpha: CoherentParams
    l: int

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def as_operator(self) -> DenseOperator:
        return DenseOperator(self.matrix)


def braunstein_density(x: float, alpha, beta: complex) -> float:
    """Gaussian outcome density of x = l/|alpha| for signal |beta>, centred at (conj(a) b + a conj(b)) / |a|."""
    p = as_coherent_params(alpha)
    if p.magnitude == 0:
        raise InvalidParameterError("The Gaussian outcome density needs |alpha| > 0.")
    centre = 2 * (np.conj(p.alpha) * complex(beta)).real / p.magnitude
    return float(np.exp(-0.5 * (x - centre) ** 2) / SQRT_2PI)


def kernel_total_cutoff(alpha_mag: float, mode1_cutoff: int) -> int:
    """Default total cutoff of a kernel: the local oscillator cutoff rule plus room for the signal photons."""
    return default_cutoff(alpha_mag) + mode1_cutoff


def _oscillator_amplitudes(p: CoherentParams, mode1_cutoff: int, total_cutoff: int,
                           budget: float, what: str) -> np.ndarray:
    # the largest signal occupation leaves total_cutoff - mode1_cutoff + 2 levels for the oscillator
    check_truncation_budget(p, total_cutoff - mode1_cutoff + 2, budget, offset=mode1_cutoff - 2, what=what)
    return coherent_state(p, total_cutoff + 1).amps


def _projected_columns(N: int, coherent: np.ndarray, mode1_cutoff: int) -> np.ndarray:
    """M[n, m] = <eigenvector m of block N | (|n> (x) |alpha>)>, n < mode1_cutoff."""
    n = np.arange(min(mode1_cutoff, N + 1))
    return eigenbasis_block(N)[n, :] * coherent[N - n][:, None]


def conditional_kernel(l: int, alpha, mode1_cutoff: int, total_cutoff: Optional[int] = None,
                       budget: float = NUMERICS.truncation_budget) -> CollapseKernel:
    """
    K[m, n] = |alpha| <(|m> (x) |alpha>), Pi^l (|n> (x) |alpha>)>, m, n < mode1_cutoff.

    Pi^l is applied block by block on the vectors |n> (x) |alpha>; the two-mode projector is never stored.
    Raises TruncationBudgetError when the oscillator does not fit into the total cutoff.
    """
    p = as_coherent_params(alpha)
    if p.magnitude == 0:
        return CollapseKernel(np.zeros((mode1_cutoff, mode1_cutoff), dtype=complex), p, l)
    if total_cutoff is None:
        total_cutoff = kernel_total_cutoff(p.magnitude, mode1_cutoff)
    coherent = _oscillator_amplitudes(p, mode1_cutoff, total_cutoff, budget, "local oscillator")

    factor = np.zeros((total_cutoff + 1, mode1_cutoff), dtype=complex)
    for N in range(total_cutoff + 1):
        m = eigen_index(l, N)
        if m is None:
            continue
        column = _projected_columns(N, coherent, mode1_cutoff)[:, m]
        factor[N, :column.size] = column
    matrix = p.magnitude * (np.conj(factor).T @ factor)
    logger.debug("Conditional kernel l=%d |alpha|=%.3g at total cutoff %d", l, p.magnitude, total_cutoff)
    return CollapseKernel(matrix, p, l)


def limit_kernel(theta: float, x: float, mode1_cutoff: int) -> DenseOperator:
    """(1/sqrt(2 pi)) |theta;x><theta;x| truncated to mode1_cutoff."""
    v = quad_eigenvectors(theta, x, mode1_cutoff)[0]
    return DenseOperator(np.outer(v, np.conj(v)) / SQRT_2PI)


def _interval_grid(a: float, b: float):
    nodes = max(2, int(math.ceil((b - a) * NUMERICS.interval_nodes_per_unit)) + 1)
    r = np.linspace(a, b, nodes)
    w = np.full(nodes, r[1] - r[0])
    w[0] = w[-1] = 0.5 * (r[1] - r[0])
    return r, w


def quadrature_interval_projector(theta: float, a: float, b: float, cutoff: int) -> DenseOperator:
    """Trapezoid estimate of P^(a,b] = (1/sqrt(2 pi)) int_a^b |theta;r><theta;r| dr."""
    if not a < b:
        raise InvalidParameterError("Interval needs a < b, got ({}, {}].".format(a, b))
    r, w = _interval_grid(a, b)
    vectors = quad_eigenvectors(theta, r, cutoff)
    return DenseOperator((vectors.T * w) @ np.conj(vectors) / SQRT_2PI)


def riemann_interval_projector(theta: float, a: float, b: float, alpha_mag: float, cutoff: int) -> DenseOperator:
    """(1/(|alpha| sqrt(2 pi))) sum over a|alpha| < l <= b|alpha| of |theta;l/|alpha|><theta;l/|alpha||."""
    first, last = interval_outcomes(a, b, alpha_mag)
    if first > last:
        return DenseOperator(np.zeros((cutoff, cutoff)))
    xs = np.arange(first, last + 1) / alpha_mag
    vectors = quad_eigenvectors(theta, xs, cutoff)
    return DenseOperator(vectors.T @ np.conj(vectors) / (alpha_mag * SQRT_2PI))


def interval_kernel_sum(alpha, ls: Iterable[int], mode1_cutoff: int, total_cutoff: int,
                        budget: float = NUMERICS.truncation_budget) -> np.ndarray:
    """Sum over l in `ls` of <alpha|_2 Pi^l |alpha>_2 on the signal mode, without the |alpha| prefactor."""
    p = as_coherent_params(alpha)
    coherent = _oscillator_amplitudes(p, mode1_cutoff, total_cutoff, budget, "local oscillator")
    wanted = set(int(l) for l in ls)
    total = np.zeros((mode1_cutoff, mode1_cutoff), dtype=complex)
    for N in range(total_cutoff + 1):
        keep = [m for m in range(N + 1) if 2 * m - N in wanted]
        if not keep:
            continue
        columns = _projected_columns(N, coherent, mode1_cutoff)[:, keep]
        k = columns.shape[0]
        total[:k, :k] += np.conj(columns) @ columns.T
    return total


def collapse_distance(beta: complex, alpha, a: float, b: float, signal_cutoff: Optional[int] = None,
                      total_cutoff: Optional[int] = None) -> float:
    """
    || Pi^(a|alpha|, b|alpha|] psi - (P^(a,b] (x) I) psi ||^2 for psi = |beta>_1 (x) |alpha>_2.

    The quadrature projector uses theta = arg(alpha). Truncation losses of both coherent states must stay below
    the collapse loss threshold, otherwise TruncationBudgetError (a PrecisionError) is raised.
    """
    p = as_coherent_params(alpha)
    if signal_cutoff is None:
        signal_cutoff = default_cutoff(abs(beta)) + NUMERICS.signal_guard
    if total_cutoff is None:
        total_cutoff = default_cutoff(p.magnitude) + signal_cutoff
    threshold = NUMERICS.collapse_loss_threshold
    check_truncation_budget(beta, signal_cutoff, threshold, what="signal state")

    first, last = interval_outcomes(a, b, p.magnitude)
    signal = coherent_state(beta, signal_cutoff).amps
    oscillator_loss = 1.0 - float(np.linalg.norm(coherent_state(p, total_cutoff + 1).amps)) ** 2

    kernel = interval_kernel_sum(p, range(first, last + 1), signal_cutoff, total_cutoff, budget=threshold)
    projector = quadrature_interval_projector(p.phase, a, b, signal_cutoff).entries
    projected = projector @ signal

    measured = np.vdot(signal, kernel @ signal).real
    ideal = np.vdot(projected, projected).real * (1.0 - oscillator_loss)
    cross = np.vdot(signal, kernel @ projected).real
    distance = measured + ideal - 2 * cross
    logger.debug("collapse_distance |alpha|=%.3g: measured=%.6g ideal=%.6g cross=%.6g",
                 p.magnitude, measured, ideal, cross)
    return float(max(distance, 0.0))

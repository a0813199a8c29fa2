#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Count-difference observable Xi = c2* c1 + c1* c2 on two modes, its eigenprojectors and the outcome statistics of a
balanced homodyne measurement.

The eigenvectors (u1 + u2)^m (-u1 + u2)^n / sqrt(2^{m+n} m! n!) with eigenvalue m - n are the columns of the 50:50
beamsplitter U(pi/4): column m of block N belongs to the eigenvalue l = 2m - N.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from FockBench.config import NUMERICS, LRoundingMode
from FockBench.Fock.Errors import DomainError, InvalidParameterError, ShapeError
from FockBench.Fock.LogDomain import SeriesTruncationRule, log_abs, log_factorial, sum_log_series
from FockBench.Fock.Operators import BlockOperator, _beamsplitter_block_spectral, apply, beamsplitter
from FockBench.Fock.States import MultiModeState, as_coherent_params

logger = logging.getLogger()

QUARTER_PI = math.pi / 4


def eigenbasis_block(N: int) -> np.ndarray:
    """Real orthogonal matrix whose column m is the Xi eigenvector of block N with eigenvalue 2m - N."""
    return _beamsplitter_block_spectral(QUARTER_PI, N)


def eigen_index(l: int, N: int):
    """Column of block N belonging to eigenvalue l, or None if l does not occur in block N."""
    if abs(l) > N or (N - l) % 2:
        return None
    return (N + l) // 2


@dataclass(frozen=True)
class OutcomeDistribution:
    """
    Probabilities of the count difference l.

    Attributes
    ----------
    probs: dict
        maps every possible integer l to its probability
    """

    probs: Dict[int, float] = field(default_factory=dict)

    @property
    def total(self) -> float:
        """Sum of all probabilities; the deficit to 1 is the truncation loss."""
        return math.fsum(self.probs.values())

    def outcomes(self) -> np.ndarray:
        return np.array(sorted(self.probs), dtype=int)

    def probabilities(self) -> np.ndarray:
        return np.array([self.probs[l] for l in sorted(self.probs)])

    def mean(self) -> float:
        return float(np.dot(self.outcomes(), self.probabilities()) / self.total)

    def variance(self) -> float:
        ls = self.outcomes()
        p = self.probabilities() / self.total
        mean = float(np.dot(ls, p))
        return float(np.dot((ls - mean) ** 2, p))


#
# operators
#


def xi_operator(total_cutoff: int) -> BlockOperator:
    """Blocks of Xi; entries Xi[i-1, i] = Xi[i, i-1] = sqrt(i (N - i + 1))."""
    blocks = []
    for N in range(total_cutoff + 1):
        i = np.arange(1, N + 1, dtype=float)
        couplings = np.sqrt(i * (N - i + 1))
        blocks.append(np.diag(couplings, k=1) + np.diag(couplings, k=-1))
    return BlockOperator(tuple(blocks))


def projector_l(l: int, total_cutoff: int) -> BlockOperator:
    """Orthogonal projector onto the eigenvalue-l eigenspace of Xi. Zero operator for |l| > total_cutoff."""
    blocks = []
    for N in range(total_cutoff + 1):
        m = eigen_index(l, N)
        if m is None:
            blocks.append(np.zeros((N + 1, N + 1)))
        else:
            v = eigenbasis_block(N)[:, m]
            blocks.append(np.outer(v, v))
    return BlockOperator(tuple(blocks))


def phi_l_state(phi: float, l: int, total_cutoff: int) -> MultiModeState:
    """
    Truncated generalized vector |phi, l> = sum_j e^{i j phi} |l + j, j> (eigenbasis, l >= 0).

    For l < 0 the terms are |j, j + |l|>. Every retained j contributes one unit to the squared norm.
    """
    blocks = []
    for N in range(total_cutoff + 1):
        m = eigen_index(l, N)
        if m is None:
            blocks.append(np.zeros(N + 1, dtype=complex))
        else:
            j = (N - abs(l)) // 2
            blocks.append(np.exp(1j * j * phi) * eigenbasis_block(N)[:, m])
    return MultiModeState.from_blocks(blocks)


def phase_integral_projector(l: int, total_cutoff: int, nodes: int = NUMERICS.phase_nodes) -> np.ndarray:
    """
    Periodic trapezoid of (1/2 pi) int |phi,l><phi,l| d phi on the flattened occupation grid.

    Cross-block terms cancel only through the quadrature, so the result is dense; compare with
    projector_l(l, total_cutoff).to_dense().
    """
    phis = 2 * math.pi * np.arange(nodes) / nodes
    vectors = np.array([phi_l_state(phi, l, total_cutoff).amps.ravel() for phi in phis])
    return vectors.T @ np.conj(vectors) / nodes


def phi_l_bargmann(u: complex, phi: float, l: int, alpha,
                   rule: SeriesTruncationRule = SeriesTruncationRule()) -> complex:
    """
    Bargmann function of <alpha|_2 |phi, l> evaluated at u:

        e^{-|a|^2/2} z^{|l|} sum_j e^{i j phi} w^j / (2^{|l|/2 + j} sqrt(j! (j + |l|)!))

    with z = u + conj(a) for l >= 0, z = -u + conj(a) for l < 0 and w = conj(a)^2 - u^2.
    """
    a_bar = np.conj(as_coherent_params(alpha).alpha)
    u = complex(u)
    z = (u if l >= 0 else -u) + a_bar
    w = a_bar ** 2 - u ** 2
    L = abs(l)
    if L > 0 and z == 0:
        return 0j
    log_z = float(log_abs(z)) if L > 0 else 0.0
    arg_z = float(np.angle(z)) if L > 0 else 0.0
    prefix = -0.5 * abs(a_bar) ** 2 + L * log_z - 0.5 * L * math.log(2)
    log_w = float(log_abs(w)) if w != 0 else 0.0
    arg_w = float(np.angle(w)) if w != 0 else 0.0

    def term(j):
        log_mag = (prefix + j * log_w - j * math.log(2)
                   - 0.5 * (float(log_factorial(j)) + float(log_factorial(j + L))))
        return log_mag, L * arg_z + j * (arg_w + phi)

    value, used = sum_log_series(term, rule, last=0 if w == 0 else None)
    logger.debug("phi_l_bargmann(l=%d) summed %d terms", l, used)
    return value


#
# measurement statistics
#


def _check_two_mode(s: MultiModeState):
    if s.modes != 2:
        raise ShapeError("Count-difference measurements act on two-mode states, got {:d} modes.".format(s.modes))


def outcome_distribution(s: MultiModeState) -> OutcomeDistribution:
    """P(l) = <s|Pi^l|s>, computed from the eigenbasis coefficients of each block."""
    _check_two_mode(s)
    T = s.total_cutoff
    probs = np.zeros(2 * T + 1)
    for N in range(T + 1):
        coefficients = eigenbasis_block(N).T @ s.block(N)
        ls = 2 * np.arange(N + 1) - N
        np.add.at(probs, ls + T, np.abs(coefficients) ** 2)
    return OutcomeDistribution({l: float(probs[l + T]) for l in range(-T, T + 1)})


def difference_count_distribution(s: MultiModeState) -> OutcomeDistribution:
    """Distribution of N2 - N1 counted after U(pi/4); equals the distribution of Xi before it."""
    _check_two_mode(s)
    T = s.total_cutoff
    rotated = apply(beamsplitter(QUARTER_PI, T), s).amps
    m, n = np.indices(rotated.shape)
    diff = (n - m).ravel()
    probs = np.zeros(2 * T + 1)
    np.add.at(probs, diff + T, np.abs(rotated.ravel()) ** 2)
    return OutcomeDistribution({l: float(probs[l + T]) for l in range(-T, T + 1)})


def difference_count_collapse(s: MultiModeState, l: int) -> MultiModeState:
    """State after U(pi/4) and the outcome N2 - N1 = l; equals U(pi/4) Pi^l s."""
    _check_two_mode(s)
    rotated = apply(beamsplitter(QUARTER_PI, s.total_cutoff), s).amps
    m, n = np.indices(rotated.shape)
    return MultiModeState(np.where(n - m == l, rotated, 0.0))


def interval_outcomes(a: float, b: float, alpha_mag: float):
    """Integers l with a |alpha| < l <= b |alpha|, as (first, last); empty if first > last."""
    if not a < b:
        raise InvalidParameterError("Interval needs a < b, got ({}, {}].".format(a, b))
    if alpha_mag <= 0:
        raise InvalidParameterError("Interval scaling needs |alpha| > 0, got {}.".format(alpha_mag))
    return math.floor(a * alpha_mag) + 1, math.floor(b * alpha_mag)


def interval_project(s: MultiModeState, a: float, b: float, alpha_mag: float) -> MultiModeState:
    """Applies the sum of Pi^l over a |alpha| < l <= b |alpha| without building the projectors."""
    _check_two_mode(s)
    first, last = interval_outcomes(a, b, alpha_mag)
    blocks = []
    for N in range(s.total_cutoff + 1):
        basis = eigenbasis_block(N)
        ls = 2 * np.arange(N + 1) - N
        keep = (ls >= first) & (ls <= last)
        blocks.append(basis @ np.where(keep, basis.T @ s.block(N), 0.0))
    return MultiModeState.from_blocks(blocks)


#
# outcome scaling and sampling
#


def outcome_to_x(l: int, alpha_mag: float, mode: LRoundingMode = LRoundingMode.ROUND) -> float:
    """x = l / |alpha|; floored outcomes map to the midpoint of their bin, (l + 1/2) / |alpha|."""
    if alpha_mag <= 0:
        raise InvalidParameterError("Outcome scaling needs |alpha| > 0, got {}.".format(alpha_mag))
    if mode is LRoundingMode.FLOOR:
        return (l + 0.5) / alpha_mag
    return l / alpha_mag


def x_to_outcome(x: float, alpha_mag: float, mode: LRoundingMode = LRoundingMode.ROUND) -> int:
    """l = [x |alpha|], rounded half away from zero or floored."""
    scaled = x * alpha_mag
    if mode is LRoundingMode.FLOOR:
        return int(math.floor(scaled))
    return int(math.copysign(math.floor(abs(scaled) + 0.5), scaled))


def sample_outcomes(dist: OutcomeDistribution, n_shots: int, seed: int) -> np.ndarray:
    """I.i.d. draws of l by inverse CDF over the sorted outcomes, renormalized by the distribution total."""
    if n_shots < 1:
        raise InvalidParameterError("Need at least one shot, got {}.".format(n_shots))
    ls = dist.outcomes()
    cdf = np.cumsum(dist.probabilities())
    if cdf[-1] <= 0:
        raise DomainError("Cannot sample from a distribution with zero total probability.")
    cdf /= cdf[-1]
    rng = np.random.default_rng(seed)
    idx = np.searchsorted(cdf, rng.random(n_shots), side="right")
    return ls[np.minimum(idx, ls.size - 1)]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Helpers for quantities that are products of factorials and powers. They are carried as
(log-magnitude, phase) pairs and exponentiated once per term.
"""

import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from scipy.special import gammaln

from FockBench.config import NUMERICS
from FockBench.Fock.Errors import PrecisionError, ResourceError

# exp() overflows above this
MAX_LOG_MAGNITUDE = 700.0


def log_factorial(n):
    """log(n!) for scalars or integer arrays."""
    return gammaln(np.asarray(n, dtype=float) + 1.0)


def log_abs(z):
    """log|z| with log 0 = -inf and no floating point warning."""
    with np.errstate(divide="ignore"):
        return np.log(np.abs(z))


def assemble(log_magnitude, phase):
    """Turns (log-magnitude, phase) pairs into complex numbers. A log-magnitude of -inf gives exactly 0."""
    log_magnitude = np.asarray(log_magnitude, dtype=float)
    if np.any(log_magnitude > MAX_LOG_MAGNITUDE):
        raise PrecisionError("Term with log-magnitude {:.1f} overflows double precision.".format(
            float(np.max(log_magnitude))))
    return np.exp(log_magnitude) * np.exp(1j * np.asarray(phase, dtype=float))


def power_terms(z: complex, n_max: int):
    """log|z^n| and arg(z^n) for n = 0..n_max, with 0^0 = 1."""
    n = np.arange(n_max + 1, dtype=float)
    if z == 0:
        log_mag = np.full(n_max + 1, -np.inf)
        log_mag[0] = 0.0
        return log_mag, np.zeros(n_max + 1)
    return n * math.log(abs(z)), n * np.angle(z)


def compensated_sum(values) -> complex:
    """Sum of complex values with real and imaginary parts accumulated separately by math.fsum."""
    values = np.asarray(values, dtype=complex).ravel()
    return complex(math.fsum(values.real), math.fsum(values.imag))


@dataclass(frozen=True)
class SeriesTruncationRule:
    """Stop a series once `patience` consecutive terms fall below `rel_tol` times the largest term seen."""

    patience: int = NUMERICS.series_patience
    rel_tol: float = NUMERICS.series_rel_tol
    max_terms: int = NUMERICS.series_max_terms

    def describe(self) -> str:
        return "stop after {:d} consecutive terms below {:.0e} x running max (at most {:d} terms)".format(
            self.patience, self.rel_tol, self.max_terms)


def sum_log_series(term: Callable[[int], Tuple[float, float]],
                   rule: SeriesTruncationRule = SeriesTruncationRule(),
                   first: int = 0,
                   last: int = None) -> Tuple[complex, int]:
    """
    Sums term(j) for j = first, first+1, ... where term returns (log-magnitude, phase).

    The summation ends at `last` (inclusive) if given, otherwise by the truncation rule.

    Returns
    -------
    tuple
        the compensated sum and the number of terms used
    """
    values = []
    running_max = -np.inf
    small_streak = 0
    j = first
    while True:
        if last is not None and j > last:
            break
        if len(values) >= rule.max_terms:
            raise ResourceError("Series did not terminate within {:d} terms.".format(rule.max_terms))

        log_mag, phase = term(j)
        if np.isnan(log_mag) or log_mag == np.inf:
            raise PrecisionError("Series term {:d} is not finite.".format(j))
        values.append(assemble(log_mag, phase))

        if log_mag > running_max:
            running_max = log_mag
            small_streak = 0
        elif log_mag < running_max + math.log(rule.rel_tol):
            small_streak += 1
        else:
            small_streak = 0

        if last is None and small_streak >= rule.patience:
            break
        j += 1

    return compensated_sum(values), len(values)

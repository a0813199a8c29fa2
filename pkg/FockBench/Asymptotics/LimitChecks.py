#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Scalar checks of the limits behind the kernel convergence: Poisson concentration, Stirling ratios, the Dirac
sequence of the phase integral and the factor-by-factor approximation of <alpha|phi, l>.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple

import numpy as np
from scipy.integrate import quad
from scipy.special import erf, gammaln, logsumexp

from FockBench.config import NUMERICS
from FockBench.Fock.Errors import DomainError, InvalidParameterError, PrecisionError, ResourceError
from FockBench.Fock.LogDomain import SeriesTruncationRule, log_abs, sum_log_series
from FockBench.Homodyne.Projectors import phi_l_bargmann

logger = logging.getLogger()


@dataclass(frozen=True)
class LimitCheckResult:
    """
    Attributes
    ----------
    value: complex
        the finite-scale quantity
    target: complex
        its limit
    abs_error: float
        |value - target|
    params: dict
        the inputs, plus the series rule if a series was summed
    """

    value: complex
    target: complex
    abs_error: float
    params: Dict[str, object] = field(default_factory=dict)

    @classmethod
    def compare(cls, value: complex, target: complex, **params) -> "LimitCheckResult":
        return cls(value=value, target=target, abs_error=float(abs(value - target)), params=params)


def _log_poisson_terms(mean: float, first: int, last: int) -> np.ndarray:
    j = np.arange(first, last + 1, dtype=float)
    return -mean + j * math.log(mean) - gammaln(j + 1)


def poisson_tail(m: float, lam: float) -> Tuple[float, float]:
    """
    Two-sided Poisson(m) tail outside (m - lam sqrt(m), m + lam sqrt(m)) and its Chebyshev bound 1/lam^2.

    Returns
    -------
    tuple
        (tail, bound)
    """
    if m <= 0 or lam <= 0:
        raise InvalidParameterError("poisson_tail needs m > 0 and lambda > 0, got m={}, lambda={}.".format(m, lam))
    spread = lam * math.sqrt(m)
    last = int(math.ceil(m + 40 * math.sqrt(m) + 100))
    if last > NUMERICS.iteration_budget:
        raise ResourceError("Poisson tail of mean {:g} needs {:d} terms, budget is {:d}.".format(
            m, last, NUMERICS.iteration_budget))

    log_terms = []
    lower_end = math.floor(m - spread)
    if lower_end >= 0:
        log_terms.append(_log_poisson_terms(m, 0, lower_end))
    upper_start = math.ceil(m + spread)
    if upper_start <= last:
        log_terms.append(_log_poisson_terms(m, upper_start, last))
    tail = float(np.exp(logsumexp(np.concatenate(log_terms)))) if log_terms else 0.0
    return tail, 1.0 / lam ** 2


def log_poisson_head(M: float, theta_frac: float) -> float:
    """log of e^{-M} sum_{j <= theta M} M^j / j!."""
    if not 0 < theta_frac < 1:
        raise InvalidParameterError("Head fraction must lie in (0, 1), got {}.".format(theta_frac))
    if M <= 0:
        raise InvalidParameterError("Poisson mean must be positive, got {}.".format(M))
    last = math.floor(theta_frac * M)
    if last > NUMERICS.iteration_budget:
        raise ResourceError("Poisson head needs {:d} terms, budget is {:d}.".format(last, NUMERICS.iteration_budget))
    return float(logsumexp(_log_poisson_terms(M, 0, last)))


def poisson_head(M: float, theta_frac: float) -> float:
    return math.exp(log_poisson_head(M, theta_frac))


def _dirac_nodes(a: float, nodes: int) -> np.ndarray:
    if nodes < NUMERICS.dirac_min_nodes:
        raise InvalidParameterError("Dirac sequence needs at least {:d} nodes, got {:d}.".format(
            NUMERICS.dirac_min_nodes, nodes))
    return a - math.pi + 2 * math.pi * np.arange(nodes) / nodes


def dirac_sequence(g: Callable[[float], complex], a: float, alpha_mag: float,
                   nodes: int = NUMERICS.dirac_min_nodes) -> complex:
    """Periodic trapezoid of (|alpha| / sqrt(2 pi)) int g(phi) e^{(cos(phi - a) - 1) |alpha|^2} d phi."""
    phis = _dirac_nodes(a, nodes)
    values = np.array([g(phi) for phi in phis], dtype=complex)
    weights = np.exp((np.cos(phis - a) - 1.0) * alpha_mag ** 2)
    return complex(alpha_mag / math.sqrt(2 * math.pi) * np.sum(values * weights) * 2 * math.pi / nodes)


@dataclass(frozen=True)
class DiracSandwich:
    """Normalized (|alpha|/sqrt(2 pi)) integrals over |phi| <= delta and the outer remainder of the phase kernel."""

    delta: float
    lower: float
    middle: float
    upper: float
    outer: float

    @property
    def holds(self) -> bool:
        return self.lower <= self.middle <= self.upper


def dirac_sandwich(alpha_mag: float) -> DiracSandwich:
    """
    Bounds of the kernel mass near the peak at delta = |alpha|^{-3/4}:

        Gaussian <= kernel <= e^{delta^4 |alpha|^2 / 24} Gaussian  on |phi| <= delta.
    """
    if alpha_mag <= 0:
        raise InvalidParameterError("Dirac sandwich needs |alpha| > 0, got {}.".format(alpha_mag))
    delta = alpha_mag ** -0.75
    scale = alpha_mag / math.sqrt(2 * math.pi)
    gaussian = float(erf(delta * alpha_mag / math.sqrt(2)))

    def kernel(phi):
        return math.exp((math.cos(phi) - 1.0) * alpha_mag ** 2)

    middle, _ = quad(kernel, -delta, delta, epsabs=1e-14, epsrel=1e-12)
    outer, _ = quad(kernel, delta, math.pi, epsabs=1e-14, epsrel=1e-12)
    return DiracSandwich(
        delta=delta,
        lower=gaussian,
        middle=scale * middle,
        upper=math.exp(delta ** 4 * alpha_mag ** 2 / 24) * gaussian,
        outer=2 * scale * outer,
    )


def _stirling_indices(m: float, x: float, mu: float, eps_l: int, delta_j: int) -> Tuple[int, int]:
    if eps_l not in (0, 1) or delta_j not in (0, 1):
        raise InvalidParameterError("eps_l and delta_j must be 0 or 1.")
    half_l = math.floor(x * math.sqrt(2 * m) / 2) + eps_l
    j = math.floor(mu * m) + delta_j
    if j < half_l:
        raise DomainError("Stirling ratio needs j >= l/2, got j={:d}, l/2={:d}.".format(j, half_l))
    return half_l, j


def stirling_ratio(m: float, x: float, mu: float, eps_l: int = 0, delta_j: int = 0) -> float:
    """j! / sqrt((j + l/2)! (j - l/2)!) with l/2 = [x sqrt(2m)/2] + eps_l and j = [mu m] + delta_j; never above 1."""
    half_l, j = _stirling_indices(m, x, mu, eps_l, delta_j)
    log_ratio = gammaln(j + 1) - 0.5 * gammaln(j + half_l + 1) - 0.5 * gammaln(j - half_l + 1)
    if log_ratio > 0:
        raise PrecisionError("Stirling ratio exceeds 1 at j={:d}, l/2={:d}.".format(j, half_l))
    return float(math.exp(log_ratio))


def stirling_ratio_error(m: float, x: float, mu: float, eps_l: int = 0, delta_j: int = 0) -> float:
    return abs(stirling_ratio(m, x, mu, eps_l, delta_j) - math.exp(-x ** 2 / (4 * mu)))


def poly_exp_error(u: complex, theta: float, x: float, alpha_mag: float) -> float:
    """|(u + conj(a))^{l/2} / (-u + conj(a))^{l/2} - e^{x e^{i theta} u}| for l = x |alpha| even."""
    l_float = x * alpha_mag
    l = int(round(l_float))
    if abs(l - l_float) > 1e-9 or l <= 0 or l % 2:
        raise DomainError("x |alpha| must be an even positive integer, got {}.".format(l_float))
    u = complex(u)
    if abs(u) >= alpha_mag:
        raise DomainError("Need |u| < |alpha|, got |u|={:g}.".format(abs(u)))
    # (u + conj(a)) / (-u + conj(a)) = (1 + w) / (1 - w) with w = e^{i theta} u / |alpha|
    w = np.exp(1j * theta) * u / alpha_mag
    log_value = 0.5 * l * (np.log1p(w) - np.log1p(-w))
    return float(abs(np.exp(log_value) - np.exp(x * np.exp(1j * theta) * u)))


def power_log_error(z: complex, a: complex, m: float) -> float:
    """|m a log(1 + z/m) - z a| on the principal branch."""
    if m <= 0:
        raise InvalidParameterError("m must be positive, got {}.".format(m))
    z = complex(z)
    if abs(z) >= m:
        raise DomainError("Need |z/m| < 1, got {:g}.".format(abs(z) / m))
    return float(abs(a) * abs(m * np.log1p(z / m) - z))


def head_truncation_error(u: complex, phi: float, theta: float, x: float, alpha_mag: float,
                          rule: SeriesTruncationRule = SeriesTruncationRule()) -> float:
    """|e^{-|a|^2/2} sum_{j=0}^{l/2} e^{i j phi} (-u^2 + conj(a)^2)^j / (2^j j!)| with l/2 = [x |alpha| / 2]."""
    if x <= 0:
        raise InvalidParameterError("Head truncation needs x > 0, got {}.".format(x))
    half_l = math.floor(x * alpha_mag / 2)
    a_bar = alpha_mag * np.exp(-1j * theta)
    w = a_bar ** 2 - complex(u) ** 2
    if w == 0:
        return math.exp(-0.5 * alpha_mag ** 2)
    log_w, arg_w = float(log_abs(w)), float(np.angle(w))

    def term(j):
        return -0.5 * alpha_mag ** 2 + j * (log_w - math.log(2)) - float(gammaln(j + 1)), j * (arg_w + phi)

    value, _ = sum_log_series(term, rule, last=half_l)
    return abs(value)


def mainprop_factor_check(u: complex, phi: float, theta: float, x: float, alpha_mag: float,
                          rule: SeriesTruncationRule = SeriesTruncationRule()) -> LimitCheckResult:
    """
    Compares e^{i l phi/2} <alpha|phi, l> at u with its factored approximation

        e^{x e^{i theta} u} e^{-e^{i phi} u^2/2} e^{-x^2/4} e^{(cos(phi - 2 theta) - 1)|a|^2/2}
        e^{i sin(phi - 2 theta)|a|^2/2}

    for alpha = |alpha| e^{i theta} and l = round(x |alpha|).
    """
    l = int(round(x * alpha_mag))
    if l < 2:
        raise DomainError("Need l = round(x |alpha|) >= 2, got {:d}.".format(l))
    u = complex(u)
    alpha = alpha_mag * np.exp(1j * theta)
    value = np.exp(0.5j * l * phi) * phi_l_bargmann(u, phi, l, alpha, rule)
    target = np.exp(x * np.exp(1j * theta) * u - 0.5 * np.exp(1j * phi) * u ** 2 - 0.25 * x ** 2
                    + 0.5 * alpha_mag ** 2 * (np.cos(phi - 2 * theta) - 1)
                    + 0.5j * alpha_mag ** 2 * np.sin(phi - 2 * theta))
    return LimitCheckResult.compare(complex(value), complex(target), u=u, phi=phi, theta=theta, x=x,
                                    alpha_mag=alpha_mag, l=l, series_rule=rule.describe())

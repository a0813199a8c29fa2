#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Reference values for the endpoints every experiment reports, computed along a second route.

Count-difference statistics come from the Skellam law of two independent Poisson counts, kernels from the
closed form of |n>_1 |alpha>_2 in the normal modes c_(+/-) = (c_1 +/- c_2) / sqrt(2) in which Xi = N_+ - N_-.
Scalar limits use Bessel functions, finite products and plain recurrences. The runner compares each endpoint with
its reference value and fixture files are pinned from these values, never from a run.
"""

import cmath
import logging
import math
from typing import Callable, Dict, Iterable

import numpy as np
from scipy.special import gammaln, ive
from scipy.stats import poisson, skellam

from FockBench.config import NUMERICS, ExperimentKind, LRoundingMode
from FockBench.Fock.Errors import InvalidParameterError
from FockBench.Fock.Operators import apply, beamsplitter
from FockBench.Fock.States import as_coherent_params, coherent_state, default_cutoff
from FockBench.Homodyne.Kernels import braunstein_density, limit_kernel, quadrature_interval_projector
from FockBench.Homodyne.Projectors import interval_outcomes, outcome_to_x, x_to_outcome
from FockBench.Teleport.Teleportation import input_channel_state, limit_bell_amplitudes

logger = logging.getLogger()

SERIES_TERMS = 2000


#
# count-difference statistics and kernels
#


def count_difference_pmf(ls, alpha, beta: complex) -> np.ndarray:
    """
    P(l) for |beta>_1 (x) |alpha>_2: the difference of two Poisson counts with means |beta +/- alpha|^2 / 2.
    """
    ls = np.asarray(ls, dtype=int)
    alpha = as_coherent_params(alpha).alpha
    mean_plus = abs(complex(beta) + alpha) ** 2 / 2
    mean_minus = abs(complex(beta) - alpha) ** 2 / 2
    if mean_minus == 0:
        return poisson.pmf(ls, mean_plus)
    if mean_plus == 0:
        return poisson.pmf(-ls, mean_minus)
    return skellam.pmf(ls, mean_plus, mean_minus)


def normal_mode_amplitudes(n: int, alpha, occupations: int) -> np.ndarray:
    """
    Amplitudes of |n>_1 (x) |alpha>_2 on |p>_+ |r>_-, p, r < occupations.

    The state is (2^n n!)^{-1/2} (c_+^dag + c_-^dag)^n |alpha / sqrt(2)>_+ |-alpha / sqrt(2)>_-, so

        A[p, r] = e^{-|a|^2/2} (a / sqrt(2))^{p + r - n} (-1)^{r - n} sqrt(p! r! / (2^n n!))
                  sum_k (-1)^k C(n, k) / ((p - k)! (r - n + k)!)
    """
    p = as_coherent_params(alpha)
    if p.magnitude == 0:
        raise InvalidParameterError("Normal mode amplitudes need |alpha| > 0.")
    occ_p = np.arange(occupations)[:, None]
    occ_r = np.arange(occupations)[None, :]
    common = ((occ_p + occ_r - n) * math.log(p.magnitude / math.sqrt(2)) - 0.5 * p.magnitude ** 2
              - 0.5 * (n * math.log(2) + gammaln(n + 1)) + 0.5 * (gammaln(occ_p + 1) + gammaln(occ_r + 1)))
    total = np.zeros((occupations, occupations))
    for k in range(n + 1):
        valid = (occ_p >= k) & (occ_r >= n - k)
        log_term = (common + gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)
                    - gammaln(np.maximum(occ_p - k, 0) + 1) - gammaln(np.maximum(occ_r - n + k, 0) + 1))
        total += (-1) ** k * np.where(valid, np.exp(np.where(valid, log_term, 0.0)), 0.0)
    phase = np.exp(1j * p.phase * (occ_p + occ_r - n)) * (-1.0) ** ((occ_r - n) % 2)
    return total * phase


def normal_mode_kernel(ls: Iterable[int], alpha, mode1_cutoff: int) -> np.ndarray:
    """Sum over l in `ls` of <alpha|_2 Pi^l |alpha>_2 on the signal mode, without the |alpha| prefactor."""
    p = as_coherent_params(alpha)
    occupations = default_cutoff(p.magnitude) + mode1_cutoff
    amplitudes = np.array([normal_mode_amplitudes(n, p, occupations) for n in range(mode1_cutoff)])
    difference = np.subtract.outer(np.arange(occupations), np.arange(occupations))
    kept = amplitudes[:, np.isin(difference, list(ls))]
    return np.conj(kept) @ kept.T


#
# scalar limits
#


def head_truncation_recurrence(u: complex, phi: float, theta: float, x: float, alpha_mag: float) -> float:
    """|e^{-|a|^2/2} sum_{j <= l/2} t_j| with t_{j+1} = t_j e^{i phi} (conj(a)^2 - u^2) / (2 (j + 1))."""
    half_l = math.floor(x * alpha_mag / 2)
    w = cmath.exp(1j * phi) * ((alpha_mag * cmath.exp(-1j * theta)) ** 2 - complex(u) ** 2)
    term = complex(math.exp(-0.5 * alpha_mag ** 2))
    terms = [term]
    for j in range(half_l):
        term *= w / (2 * (j + 1))
        terms.append(term)
    return abs(complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)))


def factored_bargmann_error(u: complex, phi: float, theta: float, x: float, alpha_mag: float,
                            terms: int = SERIES_TERMS) -> float:
    """
    Distance of e^{i l phi/2} <alpha|phi, l> at u from its factored form, the series summed over a fixed number of
    terms by the ratio t_{j+1} / t_j = e^{i phi} w / (2 sqrt((j + 1)(j + 1 + l))).
    """
    l = int(round(x * alpha_mag))
    u = complex(u)
    a_bar = alpha_mag * cmath.exp(-1j * theta)
    z = u + a_bar
    w = a_bar ** 2 - u ** 2
    term = cmath.exp(-0.5 * alpha_mag ** 2 - 0.5 * l * math.log(2) - 0.5 * gammaln(l + 1)) * z ** l
    series = [term]
    for j in range(terms - 1):
        term *= cmath.exp(1j * phi) * w / (2 * math.sqrt((j + 1) * (j + 1 + l)))
        series.append(term)
    value = cmath.exp(0.5j * l * phi) * complex(math.fsum(t.real for t in series),
                                                math.fsum(t.imag for t in series))
    target = cmath.exp(x * cmath.exp(1j * theta) * u - 0.5 * cmath.exp(1j * phi) * u ** 2 - 0.25 * x ** 2
                       + 0.5 * alpha_mag ** 2 * (math.cos(phi - 2 * theta) - 1)
                       + 0.5j * alpha_mag ** 2 * math.sin(phi - 2 * theta))
    return abs(value - target)


def stirling_product_ratio(m: float, x: float, mu: float) -> float:
    """j! / sqrt((j + h)! (j - h)!) as sqrt(prod_{k <= h} (j - k + 1) / (j + k)), h = [x sqrt(2m)/2], j = [mu m]."""
    half_l = math.floor(x * math.sqrt(2 * m) / 2)
    j = math.floor(mu * m)
    k = np.arange(1, half_l + 1)
    return math.exp(0.5 * math.fsum(np.log1p(-(2 * k - 1) / (j + k))))


def dirac_cos_bessel(alpha_mag: float) -> float:
    """(|a| / sqrt(2 pi)) int cos(phi) e^{(cos(phi) - 1)|a|^2} d phi = |a| sqrt(2 pi) I_1(|a|^2) e^{-|a|^2}."""
    return alpha_mag * math.sqrt(2 * math.pi) * float(ive(1, alpha_mag ** 2))


#
# per-experiment reference endpoints
#


def structural_reference(p: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    # completeness and spectral decomposition hold exactly on every block
    return {'max_projector_dev': 0.0}


def distribution_reference(p: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    alpha_mag = p['alpha_magnitudes'][-1]
    alpha = alpha_mag * np.exp(1j * p['theta'])
    reference = {}
    for beta in p['betas']:
        total_cutoff = default_cutoff(abs(beta)) + default_cutoff(alpha_mag)
        ls = np.arange(-total_cutoff, total_cutoff + 1)
        scaled = alpha_mag * count_difference_pmf(ls, alpha, beta)
        density = np.array([braunstein_density(outcome_to_x(int(l), alpha_mag, rounding), alpha, beta) for l in ls])
        key = "max_abs_err[alpha={:g},beta={:g}]".format(alpha_mag, beta)
        reference[key] = float(np.max(np.abs(scaled - density)))
    return reference


def collapse_reference(p: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    alpha_mag = p['alpha_magnitudes'][-1]
    block = p['block']
    reference = {}
    for theta in p['thetas']:
        for x in p['xs']:
            l = x_to_outcome(x, alpha_mag, rounding)
            kernel = alpha_mag * normal_mode_kernel([l], alpha_mag * np.exp(1j * theta), block)
            distance = np.linalg.norm(kernel - limit_kernel(theta, x, block).entries)
            reference["frobenius_dist[alpha={:g},theta={:g},x={:g}]".format(alpha_mag, theta, x)] = float(distance)
    return reference


def pitop_reference(p: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    alpha_mag = p['alpha_magnitudes'][-1]
    signal_cutoff = default_cutoff(abs(p['beta'])) + NUMERICS.signal_guard
    first, last = interval_outcomes(p['a'], p['b'], alpha_mag)
    signal = coherent_state(p['beta'], signal_cutoff).amps
    kernel = normal_mode_kernel(range(first, last + 1), alpha_mag * np.exp(1j * p['theta']), signal_cutoff)
    projected = quadrature_interval_projector(p['theta'], p['a'], p['b'], signal_cutoff).entries @ signal
    distance = (np.vdot(signal, kernel @ signal).real + np.vdot(projected, projected).real
                - 2 * np.vdot(signal, kernel @ projected).real)
    return {"distance[alpha={:g}]".format(alpha_mag): float(max(distance, 0.0))}


def asymptotics_reference(p: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    reference = {}
    alpha_mag = p['head_truncation_alphas'][-1]
    reference["head_truncation[alpha={:g}]".format(alpha_mag)] = head_truncation_recurrence(1.0, 0.3, 0.0, 1.0,
                                                                                           alpha_mag)
    for alpha_mag in p['mainprop_alphas'][:2]:
        reference["mainprop_abs_error[alpha={:g}]".format(alpha_mag)] = factored_bargmann_error(0.5, 0.0, 0.0, 1.0,
                                                                                                alpha_mag)
    m = p['stirling_convergence_ms'][0]
    reference["stirling_error[m={:g}]".format(m)] = abs(stirling_product_ratio(m, 1.0, 1.0) - math.exp(-0.25))
    alpha_mag = p['dirac_alphas'][-1]
    reference["dirac_cos[alpha={:g}]".format(alpha_mag)] = abs(dirac_cos_bessel(alpha_mag) - 1.0)
    return reference


def coherent_teleport_fidelity(beta: complex, alpha_c: complex, q: float) -> float:
    """Fidelity of the ideal Bell measurement output to D(alpha_c)^dag |beta>: exp(-|beta - alpha_c|^2 (1 - q)^2)."""
    return math.exp(-abs(complex(beta) - alpha_c) ** 2 * (1 - q) ** 2)


def homodyne_fidelity_to_limit(psi_alpha: float, q: float, lo_mag: float, l: int, k: int,
                               three_mode_cutoff: int) -> float:
    """
    <f|rho|f> / (|f|^2 Tr rho) for the double homodyne output rho and the limit-kernel amplitudes f.

    With v = <f|_2 chi, the numerator is <v|K_l (x) K_k|v> and the trace is the sum over mode-2 slices of
    <chi_c|K_l (x) K_k|chi_c>; both kernels come from the normal-mode closed form.
    """
    T = three_mode_cutoff
    psi0 = coherent_state(psi_alpha, default_cutoff(abs(psi_alpha)))
    chi = apply(beamsplitter(math.pi / 4, T), input_channel_state(psi0, q, T), modes=(0, 1)).amps
    k_l = lo_mag * normal_mode_kernel([l], lo_mag, T + 1)
    k_k = lo_mag * normal_mode_kernel([k], 1j * lo_mag, T + 1)
    f = limit_bell_amplitudes(psi0, q, lo_mag, l, k, three_mode_cutoff=T).amps

    v = chi @ np.conj(f)
    overlap = np.vdot(v, k_l @ v @ k_k.T).real
    mass = sum(np.vdot(chi[:, :, c], k_l @ chi[:, :, c] @ k_k.T).real for c in range(T + 1))
    return float(min(1.0, max(0.0, overlap / (np.vdot(f, f).real * mass))))


def teleport_reference(p: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    alpha_c = complex(p['x_minus'], p['p_plus'])
    fidelities = [coherent_teleport_fidelity(p['psi_alpha'], alpha_c, q) for q in p['qs']]
    lo_mag = p['lo_magnitudes'][-1]
    return {
        'ideal_fidelity_margin': fidelities[-1] - fidelities[0],
        "homodyne_fidelity_to_ideal[lo={:g}]".format(lo_mag): homodyne_fidelity_to_limit(
            p['psi_alpha'], p['homodyne_q'], lo_mag, p['l'], p['k'], p['three_mode_cutoff']),
    }


def sample_reference(p: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    return {}


ORACLES: Dict[ExperimentKind, Callable[[Dict, LRoundingMode], Dict[str, float]]] = {
    ExperimentKind.STRUCTURAL: structural_reference,
    ExperimentKind.DISTRIBUTION: distribution_reference,
    ExperimentKind.COLLAPSE: collapse_reference,
    ExperimentKind.PITOP: pitop_reference,
    ExperimentKind.ASYMPTOTICS: asymptotics_reference,
    ExperimentKind.TELEPORT: teleport_reference,
    ExperimentKind.SAMPLE: sample_reference,
}


def reference_endpoints(kind: ExperimentKind, parameters: Dict, rounding: LRoundingMode) -> Dict[str, float]:
    """Reference values for the endpoints of experiment `kind` run with `parameters` (SweepParam values)."""
    p = {k: v.value for k, v in parameters.items()}
    reference = ORACLES[kind](p, rounding)
    logger.debug("Reference values for %s: %s", kind, reference)
    return reference

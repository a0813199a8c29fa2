#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import math

import numpy as np
import pandas as pd

from FockBench.Fock.LogDomain import log_factorial
from FockBench.Fock.Operators import (apply, beamsplitter, beamsplitter_generator, displacement, ladder,
                                      quadrature_completeness)
from FockBench.Fock.States import (FockState, bargmann_eval, coherent_resolution_of_identity, coherent_state,
                                   contract_mode, inner, tensor)
from FockBench.Homodyne.Projectors import (difference_count_collapse, difference_count_distribution,
                                           outcome_distribution, phase_integral_projector, phi_l_state, projector_l,
                                           xi_operator)
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.SweepAPI.Sweepparam import (SweepParamBool, SweepParamFloat, SweepParamFloatList, SweepParamInt,
                                                   SweepParamIntList, SweepParamString)


def projector_block_deviations(total_cutoff: int) -> pd.DataFrame:
    """Per total photon block: deviations of the Pi^l family from completeness, idempotence, orthogonality,
    hermiticity and the spectral resolution of Xi."""
    projectors = {l: projector_l(l, total_cutoff) for l in range(-total_cutoff, total_cutoff + 1)}
    xi = xi_operator(total_cutoff)
    rows = []
    for N in range(total_cutoff + 1):
        blocks = {l: p.blocks[N] for l, p in projectors.items() if abs(l) <= N and (N - l) % 2 == 0}
        identity = np.eye(N + 1)
        completeness = np.max(np.abs(sum(blocks.values()) - identity))
        idempotence = max(np.max(np.abs(b @ b - b)) for b in blocks.values())
        hermiticity = max(np.max(np.abs(b - b.conj().T)) for b in blocks.values())
        orthogonality = max((np.max(np.abs(blocks[l] @ blocks[k])) for l in blocks for k in blocks if l != k),
                            default=0.0)
        spectral = np.max(np.abs(sum(l * b for l, b in blocks.items()) - xi.blocks[N]))
        rows.append([N, completeness, idempotence, orthogonality, hermiticity, spectral])
    return pd.DataFrame(rows, columns=list(StructuralSuite.get_csv_schema()['structural_blocks.csv']))


def beamsplitter_block_deviations(max_block: int, theta_1: float, theta_2: float,
                                  method: str = "spectral") -> pd.DataFrame:
    """Unitarity of U(pi/4) and the group law U(t1) U(t2) = U(t1 + t2) per block."""
    u = beamsplitter(math.pi / 4, max_block, method=method)
    composed = beamsplitter(theta_1, max_block, method=method) @ beamsplitter(theta_2, max_block, method=method)
    direct = beamsplitter(theta_1 + theta_2, max_block, method=method)
    rows = []
    for N in range(max_block + 1):
        b = u.blocks[N]
        rows.append([N, np.max(np.abs(b.T @ b - np.eye(N + 1))),
                     np.max(np.abs(composed.blocks[N] - direct.blocks[N]))])
    return pd.DataFrame(rows, columns=list(StructuralSuite.get_csv_schema()['beamsplitter_blocks.csv']))


def generator_deviation(max_block: int, epsilon: float) -> float:
    """Largest deviation of the central difference (U(eps) - U(-eps)) / (2 eps) from the generator, N <= max_block."""
    central = (beamsplitter(epsilon, max_block) - beamsplitter(-epsilon, max_block)).scaled(1 / (2 * epsilon))
    return central.max_deviation(beamsplitter_generator(max_block))


def phase_integral_deviation(l: int, total_cutoff: int, nodes: int) -> float:
    dense = phase_integral_projector(l, total_cutoff, nodes)
    return float(np.max(np.abs(dense - projector_l(l, total_cutoff).to_dense())))


def _phase_integral_point(point) -> float:
    return phase_integral_deviation(*point)


def closed_form_deviation(alpha: float, phi: float, total_cutoff: int, block: int) -> float:
    """
    <alpha|_2 |phi, 0> against the Taylor coefficients of e^{-|a|^2/2} e^{e^{i phi}(-u^2 + conj(a)^2)/2},
    compared on the number states below `block`.
    """
    state = phi_l_state(phi, 0, total_cutoff)
    reduced = contract_mode(state, 1, coherent_state(alpha, total_cutoff + 1)).amps[:block]
    n = np.arange(block)
    k = n // 2
    prefactor = np.exp(-0.5 * abs(alpha) ** 2 + 0.5 * np.exp(1j * phi) * np.conj(alpha) ** 2)
    # coefficient of u^{2k} is (-e^{i phi}/2)^k / k!, amplitude multiplies by sqrt((2k)!)
    coefficients = (-0.5 * np.exp(1j * phi)) ** k * np.exp(0.5 * log_factorial(n) - log_factorial(k))
    expected = np.where(n % 2 == 0, prefactor * coefficients, 0.0)
    return float(np.max(np.abs(reduced - expected)))


def measurement_equivalence(total_cutoff: int, states: int, seed: int):
    """
    Largest probability difference between Xi before and N2 - N1 after the beamsplitter, and the largest state
    distance between U(pi/4) Pi^l s and the N2 - N1 collapse, over seeded random product states.
    """
    rng = np.random.default_rng(seed)
    cutoff = total_cutoff // 2 + 1
    u = beamsplitter(math.pi / 4, total_cutoff)
    prob_dev, state_dev = 0.0, 0.0
    for _ in range(states):
        factors = []
        for _ in range(2):
            v = rng.normal(size=cutoff) + 1j * rng.normal(size=cutoff)
            factors.append(FockState(v / np.linalg.norm(v)))
        s = tensor(factors[0], factors[1], total_cutoff)
        xi_dist = outcome_distribution(s).probs
        diff_dist = difference_count_distribution(s).probs
        prob_dev = max(prob_dev, max(abs(xi_dist[l] - diff_dist[l]) for l in xi_dist))
        for l in range(-total_cutoff, total_cutoff + 1):
            rotated = apply(u, apply(projector_l(l, total_cutoff), s))
            collapsed = difference_count_collapse(s, l)
            state_dev = max(state_dev, float(np.max(np.abs(rotated.amps - collapsed.amps))))
    return prob_dev, state_dev


class StructuralSuite(Sweep):
    """
    Exact algebraic identities of the truncated model: the Pi^l family, beamsplitter blocks, the phase-integral
    representation of Pi^l, the closed form of <alpha|phi, 0> and the equivalence of the two homodyne readouts.
    Also spot checks the single-mode identities of the number basis.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = 'structural'

    @staticmethod
    def get_default_parameter():
        return {
            'total_cutoff': SweepParamInt(24),
            'unitarity_max_block': SweepParamInt(60),
            'group_thetas': SweepParamFloatList([0.3, 0.5], unit='rad'),
            'beamsplitter_method': SweepParamString('spectral'),
            'binomial_cross_check': SweepParamBool(True),
            'binomial_max_block': SweepParamInt(12),
            'generator_max_block': SweepParamInt(12),
            'generator_epsilon': SweepParamFloat(1e-6),
            'phase_ls': SweepParamIntList([0, 1, 2, 5]),
            'phase_total_cutoff': SweepParamInt(16),
            'phase_nodes': SweepParamInt(512),
            'closed_form_alpha': SweepParamFloat(2.0),
            'closed_form_phis': SweepParamFloatList([0.4, 1.1, 2.5], unit='rad'),
            'closed_form_total_cutoff': SweepParamInt(60),
            'closed_form_block': SweepParamInt(12),
            'equivalence_total_cutoff': SweepParamInt(12),
            'equivalence_states': SweepParamInt(3),
        }

    @staticmethod
    def get_default_tolerances():
        return {
            'projector': 1e-10,
            'unitarity': 1e-12,
            'group_law': 1e-10,
            'phase_integral': 1e-8,
            'closed_form': 1e-10,
            'equivalence_probabilities': 1e-12,
            'equivalence_states': 1e-10,
            'binomial': 1e-12,
            'generator': 1e-6,
            'single_mode': 1e-10,
            'quadrature_completeness': 1e-6,
            'coherent_identity': 1e-10,
        }

    @staticmethod
    def get_csv_schema():
        return {
            'structural_blocks.csv': {
                'N': 'total photon number of the block',
                'completeness_dev': 'max |sum_l Pi^l - I|',
                'idempotence_dev': 'max over l of |Pi^l Pi^l - Pi^l|',
                'orthogonality_dev': 'max over l != k of |Pi^l Pi^k|',
                'hermiticity_dev': 'max over l of |Pi^l - (Pi^l)^dag|',
                'spectral_dev': 'max |sum_l l Pi^l - Xi|',
            },
            'beamsplitter_blocks.csv': {
                'N': 'total photon number of the block',
                'unitarity_dev': 'max |U^dag U - I| of U(pi/4)',
                'group_law_dev': 'max |U(t1) U(t2) - U(t1 + t2)|',
            },
            'identities.csv': {
                'identity': 'name of the checked identity',
                'parameter': 'parameter of the instance',
                'deviation': 'largest absolute deviation',
                'tolerance': 'allowed deviation',
                'passed': 'deviation <= tolerance',
            },
        }

    def algorithm(self, data, parameters):
        p = {k: v.value for k, v in parameters.items()}
        tol = self.tolerances
        data['sweep settings'] = self._settings_from(parameters)

        self.logger.info("Projector algebra at total cutoff %d", p['total_cutoff'])
        blocks = projector_block_deviations(p['total_cutoff'])
        data['values']['structural_blocks.csv'] = blocks
        for column in ('completeness_dev', 'idempotence_dev', 'orthogonality_dev', 'hermiticity_dev',
                       'spectral_dev'):
            self.record_check(data, 'projector_' + column, blocks[column].max(), tol['projector'])

        self.logger.info("Beamsplitter blocks up to N = %d (%s)", p['unitarity_max_block'], p['beamsplitter_method'])
        theta_1, theta_2 = p['group_thetas'][0], p['group_thetas'][-1]
        bs = beamsplitter_block_deviations(p['unitarity_max_block'], theta_1, theta_2, p['beamsplitter_method'])
        data['values']['beamsplitter_blocks.csv'] = bs
        self.record_check(data, 'beamsplitter_unitarity', bs['unitarity_dev'].max(), tol['unitarity'])
        self.record_check(data, 'beamsplitter_group_law', bs['group_law_dev'].max(), tol['group_law'])

        identities = []

        def add(identity, parameter, deviation, tolerance):
            deviation = float(deviation)
            identities.append([identity, parameter, deviation, tolerance, bool(deviation <= tolerance)])
            self.record_check(data, "{:s}[{:s}]".format(identity, parameter), deviation, tolerance)

        self.logger.info("Phase integral identity for l in %s", p['phase_ls'])
        deviations = self.map_points(_phase_integral_point,
                                     [(l, p['phase_total_cutoff'], p['phase_nodes']) for l in p['phase_ls']])
        for l, deviation in zip(p['phase_ls'], deviations):
            add('phase_integral', 'l={:d}'.format(l), deviation, tol['phase_integral'])

        for phi in p['closed_form_phis']:
            deviation = closed_form_deviation(p['closed_form_alpha'], phi, p['closed_form_total_cutoff'],
                                              p['closed_form_block'])
            add('phi0_closed_form', 'phi={:g}'.format(phi), deviation, tol['closed_form'])

        prob_dev, state_dev = measurement_equivalence(p['equivalence_total_cutoff'], p['equivalence_states'],
                                                      self.seed)
        add('equivalence_probabilities', 'N_tot={:d}'.format(p['equivalence_total_cutoff']), prob_dev,
            tol['equivalence_probabilities'])
        add('equivalence_states', 'N_tot={:d}'.format(p['equivalence_total_cutoff']), state_dev,
            tol['equivalence_states'])

        binomial_max = p['binomial_max_block']
        if p['binomial_cross_check']:
            binomial = beamsplitter(0.7, binomial_max, method="binomial")
            spectral = beamsplitter(0.7, binomial_max)
            add('beamsplitter_binomial_vs_spectral', 'N<={:d}'.format(binomial_max),
                binomial.max_deviation(spectral), tol['binomial'])

        epsilon = p['generator_epsilon']
        add('beamsplitter_generator', 'eps={:g}'.format(epsilon),
            generator_deviation(p['generator_max_block'], epsilon), tol['generator'])

        for identity, parameter, deviation, tolerance in self._single_mode_identities(tol):
            add(identity, parameter, deviation, tolerance)

        data['values']['identities.csv'] = pd.DataFrame(
            identities, columns=list(self.get_csv_schema()['identities.csv']))
        data['endpoints'] = {
            'max_projector_dev': float(blocks[['completeness_dev', 'spectral_dev']].to_numpy().max()),
        }
        data['summary'] = {
            'blocks_checked': int(len(blocks)),
            'identities_checked': len(identities),
        }
        self._check_data(data)
        return data

    @staticmethod
    def _single_mode_identities(tol):
        """Number-basis identities: truncated CCR, coherent overlaps, reproducing kernel and resolutions of I."""
        cutoff = 64
        a, a_dag = ladder(8)
        commutator = a.entries @ a_dag.entries - a_dag.entries @ a.entries
        expected = np.eye(8)
        expected[-1, -1] = 1 - 8
        yield 'ladder_commutator', 'cutoff=8', np.max(np.abs(commutator - expected)), tol['single_mode']

        overlap_dev = 0.0
        for alpha, beta in ((1.0, 1.0), (0.0, 2.0), (1 + 0.5j, -0.7 + 1.2j), (2.0, 2j)):
            value = inner(coherent_state(alpha, cutoff), coherent_state(beta, cutoff))
            closed = np.exp(-0.5 * abs(alpha) ** 2 - 0.5 * abs(beta) ** 2 + np.conj(alpha) * beta)
            overlap_dev = max(overlap_dev, abs(value - closed))
        yield 'coherent_overlap', 'cutoff=64', overlap_dev, tol['single_mode']

        s = FockState(np.r_[np.linspace(1.0, 0.2, cutoff - 8), np.zeros(8)]).normalized()
        kernel_dev = 0.0
        for alpha in (0.5, -1 + 1j, 2.0, 1.2j):
            lhs = inner(coherent_state(alpha, cutoff), s)
            rhs = np.exp(-0.5 * abs(alpha) ** 2) * bargmann_eval(s, np.conj(alpha))
            kernel_dev = max(kernel_dev, abs(lhs - rhs))
        yield 'reproducing_kernel', 'cutoff=64', kernel_dev, tol['single_mode']

        d = displacement(1.0, cutoff)
        column_dev = np.max(np.abs(d.entries[:, 0] - coherent_state(1.0, cutoff).amps))
        yield 'displacement_column', 'alpha=1', column_dev, tol['single_mode']

        completeness = quadrature_completeness(0.7, 40, block=8)
        yield ('quadrature_completeness', 'theta=0.7', np.max(np.abs(completeness - np.eye(8))),
               tol['quadrature_completeness'])

        identity = coherent_resolution_of_identity(block=4)
        yield 'coherent_resolution', 'block=4', np.max(np.abs(identity - np.eye(4))), tol['coherent_identity']

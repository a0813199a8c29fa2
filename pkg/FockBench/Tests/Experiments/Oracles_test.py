#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import math
import unittest

import numpy as np
from numpy.testing import assert_allclose
from parameterized import parameterized

from FockBench.Asymptotics.LimitChecks import (dirac_sequence, head_truncation_error, mainprop_factor_check,
                                               stirling_ratio)
from FockBench.config import ExperimentKind, LRoundingMode
from FockBench.Experiments.Oracles import (ORACLES, coherent_teleport_fidelity, count_difference_pmf,
                                           dirac_cos_bessel, factored_bargmann_error, head_truncation_recurrence,
                                           normal_mode_amplitudes, normal_mode_kernel, reference_endpoints,
                                           stirling_product_ratio)
from FockBench.Fock.Errors import InvalidParameterError
from FockBench.Fock.States import coherent_state, tensor
from FockBench.Homodyne.Kernels import conditional_kernel, interval_kernel_sum, kernel_total_cutoff
from FockBench.Homodyne.Projectors import outcome_distribution
from FockBench.Sweeps import SWEEPS
from FockBench.Sweeps.CollapseDistanceSweep import CollapseDistanceSweep
from FockBench.Sweeps.DistributionSweep import DistributionSweep
from FockBench.Sweeps.KernelSweep import KernelSweep
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.TeleportSweep import TeleportSweep
from FockBench.Tests.Utils import mark_as_slow_test


class CountDifferenceTest(unittest.TestCase):

    def test_vacuum_signal_at_zero(self):
        # e^{-64} sum_k (32^k / k!)^2
        self.assertAlmostEqual(float(count_difference_pmf([0], 8.0, 0.0)[0]), 4.996605338235645e-02, places=10)

    @parameterized.expand([(2.0, 0.0, 0.0), (3.0, 0.4, 0.5), (4.0, 1.2, -0.7)])
    def test_matches_eigenbasis_distribution(self, alpha_mag, theta, beta):
        alpha = alpha_mag * np.exp(1j * theta)
        total_cutoff = 60
        dist = outcome_distribution(tensor(coherent_state(beta, 30), coherent_state(alpha, 50), total_cutoff))
        ls = dist.outcomes()
        assert_allclose(count_difference_pmf(ls, alpha, beta), dist.probabilities(), atol=1e-12)

    def test_equal_amplitudes(self):
        # beta = alpha leaves only the Poisson count of the symmetric mode
        probs = count_difference_pmf(np.arange(-3, 4), 1.0, 1.0)
        assert_allclose(probs[:3], 0.0)
        self.assertAlmostEqual(probs[3], math.exp(-2.0), places=14)


class NormalModeKernelTest(unittest.TestCase):

    def test_amplitudes_normalized(self):
        for n in (0, 1, 4):
            amps = normal_mode_amplitudes(n, 2.0 * np.exp(0.3j), 60)
            self.assertAlmostEqual(float(np.sum(np.abs(amps) ** 2)), 1.0, places=12)

    def test_zero_oscillator(self):
        with self.assertRaises(InvalidParameterError):
            normal_mode_amplitudes(0, 0.0, 10)

    @parameterized.expand([
        (2.0, 0.0, 0, 4),
        (3.0, 0.4, 1, 5),
        (8.0, math.pi / 4, 0, 6),
        (8.0, math.pi / 4, 4, 6),
        (8.0, 0.0, -8, 6),
    ])
    def test_matches_conditional_kernel(self, alpha_mag, theta, l, block):
        alpha = alpha_mag * np.exp(1j * theta)
        expected = conditional_kernel(l, alpha, block).matrix
        assert_allclose(alpha_mag * normal_mode_kernel([l], alpha, block), expected, atol=1e-10)

    def test_matches_interval_sum(self):
        alpha = 4.0 * np.exp(0.2j)
        ls = range(-4, 5)
        expected = interval_kernel_sum(alpha, ls, 5, kernel_total_cutoff(4.0, 5))
        assert_allclose(normal_mode_kernel(ls, alpha, 5), expected, atol=1e-11)


class ScalarReferenceTest(unittest.TestCase):

    @parameterized.expand([(10.0,), (20.0,), (30.0,)])
    def test_head_truncation(self, alpha_mag):
        expected = head_truncation_error(1.0, 0.3, 0.0, 1.0, alpha_mag)
        self.assertAlmostEqual(head_truncation_recurrence(1.0, 0.3, 0.0, 1.0, alpha_mag) / expected, 1.0, places=10)

    @parameterized.expand([(6.0,), (12.0,)])
    def test_factored_bargmann(self, alpha_mag):
        expected = mainprop_factor_check(0.5, 0.0, 0.0, 1.0, alpha_mag).abs_error
        self.assertAlmostEqual(factored_bargmann_error(0.5, 0.0, 0.0, 1.0, alpha_mag), expected, delta=1e-10)

    @parameterized.expand([(1e2,), (1e3,), (1e4,)])
    def test_stirling_product(self, m):
        self.assertAlmostEqual(stirling_product_ratio(m, 1.0, 1.0), stirling_ratio(m, 1.0, 1.0), delta=1e-10)

    def test_stirling_small(self):
        # m = 2: h = 1, j = 2, ratio sqrt(2 / 3)
        self.assertAlmostEqual(stirling_product_ratio(2.0, 1.0, 1.0), math.sqrt(2 / 3), places=15)

    @parameterized.expand([(5.0,), (20.0,)])
    def test_dirac_cos(self, alpha_mag):
        self.assertAlmostEqual(dirac_cos_bessel(alpha_mag), dirac_sequence(math.cos, 0.0, alpha_mag).real,
                               delta=1e-12)

    def test_coherent_teleport_fidelity(self):
        self.assertEqual(coherent_teleport_fidelity(0.3, 0.3, 0.5), 1.0)
        self.assertAlmostEqual(coherent_teleport_fidelity(0.3, 0.0, 0.9), math.exp(-0.09 * 0.01), places=15)


class ReferenceEndpointsTest(unittest.TestCase):
    """Reference values against the endpoints of reduced sweeps."""

    def assert_matches(self, sweep_class, overrides, kind, rounding=LRoundingMode.ROUND):
        params = sweep_class.get_default_parameter()
        for name, value in overrides.items():
            params[name].value = value
        data = Sweep.setup_return_dict()
        sweep = sweep_class(rounding=rounding)
        sweep.run(data, parameters=params)

        reference = reference_endpoints(kind, sweep.parameters, rounding)
        self.assertEqual(set(reference), set(data['endpoints']))
        for name, value in reference.items():
            self.assertAlmostEqual(value, data['endpoints'][name], delta=1e-8, msg=name)

    def test_every_experiment_has_a_reference(self):
        self.assertEqual(set(ORACLES), set(SWEEPS))

    @parameterized.expand([(LRoundingMode.ROUND,), (LRoundingMode.FLOOR,)])
    def test_distribution(self, rounding):
        self.assert_matches(DistributionSweep, {'alpha_magnitudes': [2.0, 4.0], 'betas': [0.0, 0.5]},
                            ExperimentKind.DISTRIBUTION, rounding)

    def test_collapse(self):
        self.assert_matches(KernelSweep, {'alpha_magnitudes': [2.0, 4.0], 'xs': [0.0, 0.5],
                                          'thetas': [0.0, math.pi / 4], 'block': 4}, ExperimentKind.COLLAPSE)

    def test_pitop(self):
        self.assert_matches(CollapseDistanceSweep, {'alpha_magnitudes': [2.0, 3.0], 'beta': 0.5},
                            ExperimentKind.PITOP)

    @mark_as_slow_test
    def test_teleport(self):
        self.assert_matches(TeleportSweep, {'qs': [0.8, 0.95], 'ideal_cutoff': 30, 'lo_magnitudes': [2.0, 3.0],
                                            'three_mode_cutoff': 12}, ExperimentKind.TELEPORT)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import unittest

import numpy as np
from parameterized import parameterized

from FockBench.config import LRoundingMode
from FockBench.Fock.Errors import InvalidParameterError
from FockBench.Fock.States import FockState, coherent_state, number_state
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.TeleportSweep import TeleportSweep, consistency_levels, homodyne_point, ideal_point
from FockBench.Tests.Utils import mark_as_slow_test, run_shipped_config


def check_TeleportSweep_data_output(test_inst, data_dict, params_dict):
    ideal = data_dict['values']['teleport_ideal.csv']
    homodyne = data_dict['values']['teleport_homodyne.csv']
    test_inst.assertEqual(len(ideal), len(params_dict['qs']))
    test_inst.assertEqual(len(homodyne), len(params_dict['lo_magnitudes']))
    for column in ('fidelity',):
        test_inst.assertTrue(np.all((ideal[column] >= 0) & (ideal[column] <= 1)))
    for column in ('fidelity_to_ideal', 'fidelity_to_target', 'output_purity'):
        test_inst.assertTrue(np.all((homodyne[column] >= 0) & (homodyne[column] <= 1 + 1e-12)))
    test_inst.assertTrue(np.all(homodyne['output_mass'] > 0))


@mark_as_slow_test
class TeleportSweepTest(unittest.TestCase):
    """
    Test for the TeleportSweep with a small three-mode cutoff.
    """

    sweep = None

    def test_reduced_parameters(self):
        data = Sweep.setup_return_dict()
        params = TeleportSweep.get_default_parameter()
        params['qs'].value = [0.8, 0.95]
        params['ideal_cutoff'].value = 30
        params['lo_magnitudes'].value = [3.0, 6.0]
        params['three_mode_cutoff'].value = 12

        self.sweep = TeleportSweep()
        self.sweep.run(data, parameters=params)

        self.sweep._check_data(data=data)
        sweep_params = {key: params[key].value for key in params.keys()}
        check_TeleportSweep_data_output(self, data, sweep_params)

        self.assertTrue(data['checks']['ideal_fidelity_increasing']['passed'])
        self.assertTrue(data['checks']['limit_kernel_consistency']['passed'])
        self.assertEqual(data['summary']['consistency_levels'], 2)
        self.assertIn('homodyne_fidelity_to_ideal[lo=6]', data['endpoints'])
        self.assertGreater(data['endpoints']['ideal_fidelity_margin'], 0)

    def test_shipped_config(self):
        data = run_shipped_config('teleport')

        failed = [name for name, check in data['checks'].items() if not check['passed']]
        self.assertEqual(failed, [])
        homodyne = data['values']['teleport_homodyne.csv']
        np.testing.assert_array_equal(homodyne['lo_mag'], [3.0, 6.0, 9.0])
        np.testing.assert_array_equal(data['values']['teleport_ideal.csv']['q'], [0.8, 0.9, 0.95, 0.99])
        self.assertGreater(data['summary']['consistency_levels'], 0)


class TeleportPointTest(unittest.TestCase):

    def test_ideal_point(self):
        q, x_minus, p_plus, cutoff, norm, discarded, fidelity = ideal_point((0.3, 0.9, 0.0, 0.0, 30))
        self.assertEqual(cutoff, 30)
        self.assertAlmostEqual(discarded, 0.9 ** 60 / (1 - 0.81), places=14)
        # coherent input at alpha = 0: fidelity exp(-|beta|^2 (1 - q)^2)
        self.assertAlmostEqual(fidelity, np.exp(-0.09 * 0.01), places=10)

    def test_homodyne_point_reports_mixed_output(self):
        row = homodyne_point((0.3, 0.5, 2.0, 0, 0, 8, LRoundingMode.ROUND))
        lo_mag, q, l, k, x_minus, p_plus, mass, purity, to_ideal, to_target = row
        self.assertEqual((lo_mag, q, l, k, x_minus, p_plus), (2.0, 0.5, 0, 0, 0.0, 0.0))
        self.assertGreater(mass, 0.0)
        # finite-oscillator kernels are not rank one
        self.assertLess(purity, 1.0)
        self.assertGreater(to_ideal, 0.0)
        self.assertLessEqual(to_target, 1.0)


class ConsistencyLevelsTest(unittest.TestCase):

    @parameterized.expand([(8, 3), (9, 4), (12, 5)])
    def test_finite_input(self, three_mode_cutoff, levels):
        # nothing above |3> is ever dropped while T - 2c >= 3
        psi0 = FockState(np.ones(4) / 2)
        self.assertEqual(consistency_levels(psi0, three_mode_cutoff, 1e-8), levels)

    def test_coherent_input(self):
        # |0.3>: tail norm beyond |9> is about 3e-9, beyond |8> about 3e-8
        self.assertEqual(consistency_levels(coherent_state(0.3, 19), 20, 1e-8), 6)

    def test_no_level(self):
        with self.assertRaises(InvalidParameterError):
            consistency_levels(number_state(6, 8), 4, 1e-8)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import unittest

import numpy as np

from FockBench.Sweeps.AsymptoticsSuite import AsymptoticsSuite, format_parameters
from FockBench.Sweeps.SweepAPI.Sweep import Sweep


def check_AsymptoticsSuite_data_output(test_inst, data_dict, params_dict):
    table = data_dict['values']['asymptotics.csv']
    test_inst.assertFalse(np.any(np.isnan(table['abs_error'])))
    counts = table['check'].value_counts()
    test_inst.assertEqual(counts['poisson_tail'], len(params_dict['tail_means']) * len(params_dict['tail_lambdas']))
    test_inst.assertEqual(counts['stirling_ratio'],
                          4 * len(params_dict['stirling_ms']) * len(params_dict['stirling_xs'])
                          * len(params_dict['stirling_mus']))
    test_inst.assertEqual(counts['mainprop_factor'], len(params_dict['mainprop_alphas']))


class AsymptoticsSuiteTest(unittest.TestCase):
    """
    Test for the AsymptoticsSuite on a trimmed grid.
    """

    sweep = None

    def setUp(self) -> None:
        self.params = AsymptoticsSuite.get_default_parameter()
        self.params['tail_means'].value = [10.0, 100.0]
        self.params['tail_lambdas'].value = [1.0, 4.0]
        self.params['stirling_ms'].value = [100.0]
        self.params['stirling_xs'].value = [0.5, 2.0]
        self.params['stirling_mus'].value = [1.0]
        self.params['dirac_mass_alphas'].value = [12.0]
        self.params['mainprop_alphas'].value = [6.0, 12.0]

    def test_reduced_parameters(self):
        data = Sweep.setup_return_dict()

        self.sweep = AsymptoticsSuite()
        self.sweep.run(data, parameters=self.params)

        self.sweep._check_data(data=data)
        sweep_params = {key: self.params[key].value for key in self.params.keys()}
        check_AsymptoticsSuite_data_output(self, data, sweep_params)

        checks = data['checks']
        for name in ('chebyshev_inequality', 'stirling_ratio_bounded', 'dirac_sandwich[alpha=12]',
                     'dirac_mass_bessel[alpha=12]', 'poisson_head[M=1000]', 'poly_exp_decreasing',
                     'head_truncation[alpha=30]', 'mainprop_decreasing'):
            self.assertTrue(checks[name]['passed'], msg=name)
        self.assertEqual(set(data['endpoints']), {
            'head_truncation[alpha=30]', 'stirling_error[m=10000]', 'dirac_cos[alpha=20]',
            'mainprop_abs_error[alpha=6]', 'mainprop_abs_error[alpha=12]'})

    def test_rerun_starts_with_empty_table(self):
        self.sweep = AsymptoticsSuite()
        first = self.sweep.run(Sweep.setup_return_dict(), parameters=self.params)
        second = self.sweep.run(Sweep.setup_return_dict(), parameters=self.params)
        self.assertEqual(len(first['values']['asymptotics.csv']), len(second['values']['asymptotics.csv']))

    def test_format_parameters(self):
        self.assertEqual(format_parameters(m=100.0, lam=2, u=1 + 0.5j), "m=100;lam=2;u=(1+0.5j)")


if __name__ == '__main__':
    unittest.main()

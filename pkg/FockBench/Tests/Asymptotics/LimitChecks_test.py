#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import math
import unittest

import numpy as np
from parameterized import parameterized
from scipy.special import ive
from scipy.stats import poisson

from FockBench.Asymptotics.LimitChecks import (LimitCheckResult, dirac_sandwich, dirac_sequence, head_truncation_error,
                                               log_poisson_head, mainprop_factor_check, poisson_head, poisson_tail,
                                               poly_exp_error, power_log_error, stirling_ratio,
                                               stirling_ratio_error)
from FockBench.Fock.Errors import DomainError, InvalidParameterError, ResourceError


def kernel_mass(alpha_mag, order=0):
    """Exact (|alpha|/sqrt(2 pi)) int cos(order phi) e^{(cos phi - 1)|alpha|^2} d phi over one period."""
    return alpha_mag * math.sqrt(2 * math.pi) * ive(order, alpha_mag ** 2)


class PoissonTailTest(unittest.TestCase):

    def test_matches_scipy(self):
        tail, bound = poisson_tail(100, 2)
        expected = poisson.cdf(80, 100) + poisson.sf(119, 100)
        self.assertAlmostEqual(tail, expected, delta=1e-12)
        self.assertEqual(bound, 0.25)

    @parameterized.expand([
        (m, lam) for m in (10, 100, 1000, 10000) for lam in (1, 2, 4, 8)
    ])
    def test_chebyshev_holds(self, m, lam):
        tail, bound = poisson_tail(m, lam)
        self.assertGreaterEqual(tail, 0.0)
        self.assertLessEqual(tail, bound)

    def test_bound_grows_for_small_lambda(self):
        _, bound = poisson_tail(100, 1e-3)
        self.assertAlmostEqual(bound, 1e6, delta=1e-6)

    @parameterized.expand([(0, 1), (10, 0), (-1, 2)])
    def test_invalid_parameters(self, m, lam):
        with self.assertRaises(InvalidParameterError):
            poisson_tail(m, lam)

    def test_resource_budget(self):
        with self.assertRaises(ResourceError):
            poisson_tail(1e7, 2)


class PoissonHeadTest(unittest.TestCase):

    def test_probability(self):
        value = poisson_head(10, 0.5)
        self.assertGreater(value, 0.0)
        self.assertLess(value, 1.0)
        self.assertAlmostEqual(value, poisson.cdf(5, 10), delta=1e-14)

    def test_large_mean_in_log_domain(self):
        self.assertLess(log_poisson_head(1000, 0.5), math.log(1e-50))

    def test_decreasing(self):
        self.assertLess(log_poisson_head(2000, 0.5), log_poisson_head(1000, 0.5))

    @parameterized.expand([(10, 0.0), (10, 1.0), (0, 0.5)])
    def test_invalid_parameters(self, M, theta_frac):
        with self.assertRaises(InvalidParameterError):
            poisson_head(M, theta_frac)


class DiracSequenceTest(unittest.TestCase):

    @parameterized.expand([(5.0,), (10.0,), (20.0,)])
    def test_constant_gives_kernel_mass(self, alpha_mag):
        value = dirac_sequence(lambda phi: 1.0, 0.0, alpha_mag)
        self.assertAlmostEqual(value.real, kernel_mass(alpha_mag), delta=1e-10)
        self.assertAlmostEqual(value.imag, 0.0, delta=1e-12)
        self.assertAlmostEqual(value.real, 1.0, delta=1e-2)

    def test_cosine_at_zero(self):
        value = dirac_sequence(math.cos, 0.0, 20.0)
        self.assertAlmostEqual(value.real, kernel_mass(20.0, order=1), delta=1e-10)
        self.assertLess(abs(value - 1), 1e-2)

    def test_cosine_error_decreases(self):
        errors = [abs(dirac_sequence(math.cos, 0.0, a) - 1) for a in (5.0, 20.0)]
        self.assertLess(errors[1], errors[0])

    def test_shifted_centre(self):
        value = dirac_sequence(lambda phi: np.exp(1j * phi), 0.7, 20.0)
        self.assertLess(abs(value - np.exp(0.7j)), 1e-2)

    def test_too_few_nodes(self):
        with self.assertRaises(InvalidParameterError):
            dirac_sequence(math.cos, 0.0, 5.0, nodes=64)


class DiracSandwichTest(unittest.TestCase):

    @parameterized.expand([(2.0,), (5.0,), (10.0,), (20.0,)])
    def test_holds(self, alpha_mag):
        sandwich = dirac_sandwich(alpha_mag)
        self.assertTrue(sandwich.holds)
        self.assertAlmostEqual(sandwich.delta, alpha_mag ** -0.75, places=15)

    @parameterized.expand([(5.0,), (20.0,)])
    def test_inner_and_outer_add_up(self, alpha_mag):
        sandwich = dirac_sandwich(alpha_mag)
        self.assertAlmostEqual(sandwich.middle + sandwich.outer, kernel_mass(alpha_mag), delta=1e-9)

    def test_invalid(self):
        with self.assertRaises(InvalidParameterError):
            dirac_sandwich(0.0)


class StirlingRatioTest(unittest.TestCase):

    def test_zero_x_is_exact(self):
        self.assertEqual(stirling_ratio(100, 0.0, 1.0), 1.0)
        self.assertEqual(stirling_ratio_error(100, 0.0, 1.0), 0.0)

    def test_large_m(self):
        self.assertLess(stirling_ratio_error(1e4, 1.0, 1.0), 1e-2)

    @parameterized.expand([
        (m, x, mu, eps_l, delta_j)
        for m in (1e2, 1e3, 1e4)
        for x in (0.5, 1.0, 2.0)
        for mu in (0.9, 1.0, 1.1)
        for eps_l in (0, 1)
        for delta_j in (0, 1)
    ])
    def test_bounded_by_one(self, m, x, mu, eps_l, delta_j):
        self.assertLessEqual(stirling_ratio(m, x, mu, eps_l, delta_j), 1.0)

    def test_j_below_half_l(self):
        with self.assertRaises(DomainError):
            stirling_ratio(100, 2.0, 0.01)

    def test_offsets_must_be_binary(self):
        with self.assertRaises(InvalidParameterError):
            stirling_ratio(100, 1.0, 1.0, eps_l=2)


class PolyExpErrorTest(unittest.TestCase):

    def test_zero_u(self):
        self.assertEqual(poly_exp_error(0.0, 0.3, 1.0, 10.0), 0.0)

    def test_large_alpha(self):
        self.assertLess(poly_exp_error(1.0, 0.0, 1.0, 100.0), 1e-2)

    def test_error_decreases(self):
        errors = [poly_exp_error(1 + 0.5j, 0.3, 1.0, a) for a in (10.0, 100.0, 1000.0)]
        self.assertLess(errors[1], errors[0])
        self.assertLess(errors[2], errors[1])

    def test_odd_l(self):
        with self.assertRaises(DomainError):
            poly_exp_error(1.0, 0.0, 1.0, 11.0)

    def test_u_outside_disc(self):
        with self.assertRaises(DomainError):
            poly_exp_error(10.0, 0.0, 1.0, 10.0)


class PowerLogErrorTest(unittest.TestCase):

    def test_zero(self):
        self.assertEqual(power_log_error(0.0, 1.0, 10.0), 0.0)

    def test_taylor_remainder(self):
        error = power_log_error(1.0, 1.0, 1e6)
        self.assertGreater(error, 2.5e-7)
        self.assertLess(error, 1e-6)

    def test_linear_in_a(self):
        self.assertEqual(power_log_error(0.5 + 0.5j, 3.0, 100.0), 3.0 * power_log_error(0.5 + 0.5j, 1.0, 100.0))

    def test_branch_guard(self):
        with self.assertRaises(DomainError):
            power_log_error(10.0, 1.0, 5.0)
        with self.assertRaises(InvalidParameterError):
            power_log_error(0.1, 1.0, 0.0)


class HeadTruncationErrorTest(unittest.TestCase):

    def test_single_term(self):
        # l/2 = 0 keeps only e^{-|alpha|^2/2}
        self.assertAlmostEqual(head_truncation_error(1.0, 0.3, 0.0, 1.0, 1.0), math.exp(-0.5), places=14)

    def test_large_alpha(self):
        self.assertLess(head_truncation_error(1.0, 0.3, 0.0, 1.0, 30.0), 1e-10)

    def test_decreasing(self):
        values = [head_truncation_error(1.0, 0.3, 0.0, 1.0, a) for a in (10.0, 20.0, 30.0)]
        self.assertLess(values[1], values[0])
        self.assertLess(values[2], values[1])

    def test_invalid_x(self):
        with self.assertRaises(InvalidParameterError):
            head_truncation_error(1.0, 0.3, 0.0, 0.0, 10.0)


class MainpropFactorCheckTest(unittest.TestCase):

    def test_result_record(self):
        result = mainprop_factor_check(0.5, 0.0, 0.0, 1.0, 6.0)
        self.assertIsInstance(result, LimitCheckResult)
        self.assertAlmostEqual(result.abs_error, abs(result.value - result.target), places=15)
        self.assertEqual(result.params['l'], 6)
        self.assertIn('series_rule', result.params)

    def test_error_decreases(self):
        coarse = mainprop_factor_check(0.5, 0.0, 0.0, 1.0, 6.0)
        fine = mainprop_factor_check(0.5, 0.0, 0.0, 1.0, 12.0)
        self.assertLess(fine.abs_error, coarse.abs_error)

    def test_small_l(self):
        with self.assertRaises(DomainError):
            mainprop_factor_check(0.5, 0.0, 0.0, 0.1, 6.0)


if __name__ == '__main__':
    unittest.main()

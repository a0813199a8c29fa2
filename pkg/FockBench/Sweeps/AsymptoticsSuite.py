#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import itertools
import math

import numpy as np
import pandas as pd
from scipy.special import ive

from FockBench.Asymptotics.LimitChecks import (dirac_sandwich, dirac_sequence, head_truncation_error,
                                               mainprop_factor_check, poisson_head, poisson_tail, poly_exp_error,
                                               power_log_error, stirling_ratio)
from FockBench.Fock.Errors import PrecisionError
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParamFloat, SweepParamFloatList


def format_parameters(**params) -> str:
    """'k=v;...' in call order, floats in %g."""
    parts = []
    for k, v in params.items():
        if isinstance(v, float):
            v = "{:g}".format(v)
        parts.append("{:s}={}".format(k, v))
    return ";".join(parts)


class AsymptoticsSuite(Sweep):
    """
    Scalar limits behind the kernel convergence, each on a fixed grid of its large parameter: Poisson tails and
    heads, Stirling ratios, the Dirac sequence of the phase integral and its inequality sandwich, the power and
    logarithm approximations, the truncated head of the phi-series and the factored form of <alpha|phi, l>.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = 'asymptotics'
        self._rows = []

    @staticmethod
    def get_default_parameter():
        return {
            'tail_means': SweepParamFloatList([10.0, 1e2, 1e3, 1e4]),
            'tail_lambdas': SweepParamFloatList([1.0, 2.0, 4.0, 8.0]),
            'head_means': SweepParamFloatList([1000.0, 2000.0]),
            'head_fraction': SweepParamFloat(0.5),
            'stirling_ms': SweepParamFloatList([1e2, 1e3, 1e4]),
            'stirling_xs': SweepParamFloatList([0.5, 1.0, 2.0]),
            'stirling_mus': SweepParamFloatList([0.9, 1.0, 1.1]),
            'stirling_convergence_ms': SweepParamFloatList([1e4, 1e5, 1e6]),
            'dirac_alphas': SweepParamFloatList([5.0, 10.0, 20.0]),
            'dirac_mass_alphas': SweepParamFloatList([12.0, 24.0]),
            'poly_exp_alphas': SweepParamFloatList([10.0, 100.0, 1000.0]),
            'power_log_ms': SweepParamFloatList([1e4, 2e4, 4e4]),
            'head_truncation_alphas': SweepParamFloatList([10.0, 20.0, 30.0]),
            'mainprop_alphas': SweepParamFloatList([6.0, 12.0, 24.0]),
        }

    @staticmethod
    def get_default_tolerances():
        return {
            'poisson_head': 1e-50,
            'stirling_error': 1e-2,
            'dirac_cos': 1e-2,
            'dirac_mass': 1e-3,
            'dirac_bessel': 1e-10,
            'poly_exp': 1e-2,
            'power_log_factor': 1.0,
            'head_truncation': 1e-10,
        }

    @staticmethod
    def get_csv_schema():
        return {
            'asymptotics.csv': {
                'check': 'name of the limit check',
                'parameters': 'inputs as k=v pairs separated by ;',
                'value': 'finite-scale quantity (modulus if complex)',
                'target': 'limit or bound (modulus if complex)',
                'abs_error': '|value - target| of the underlying (complex) quantities',
            },
        }

    def _add_row(self, check: str, value, target, params: dict, abs_error=None):
        if abs_error is None:
            abs_error = abs(value - target)
        self._rows.append([check, format_parameters(**params), float(abs(value)), float(abs(target)),
                           float(abs_error)])
        return float(abs_error)

    def algorithm(self, data, parameters):
        p = {k: v.value for k, v in parameters.items()}
        tol = self.tolerances
        data['sweep settings'] = self._settings_from(parameters)
        self._rows = []

        self.logger.info("Poisson tails on %d x %d grid", len(p['tail_means']), len(p['tail_lambdas']))
        worst_margin = -np.inf
        for m, lam in itertools.product(p['tail_means'], p['tail_lambdas']):
            tail, bound = poisson_tail(m, lam)
            self._add_row('poisson_tail', tail, bound, dict(m=m, lam=lam))
            worst_margin = max(worst_margin, tail - bound)
        self.record_check(data, 'chebyshev_inequality', worst_margin, 0.0)

        heads = []
        for M in p['head_means']:
            head = poisson_head(M, p['head_fraction'])
            heads.append(head)
            self._add_row('poisson_head', head, 0.0, dict(M=M, theta=p['head_fraction']))
        self.record_check(data, "poisson_head[M={:g}]".format(p['head_means'][0]), heads[0], tol['poisson_head'])
        if len(heads) > 1:
            self.record_decreasing(data, 'poisson_head_decreasing', heads)

        self._stirling_checks(data, p, tol)
        self._dirac_checks(data, p, tol)

        errors = []
        for alpha_mag in p['poly_exp_alphas']:
            u = 1 + 0.5j
            error = poly_exp_error(u, 0.3, 1.0, alpha_mag)
            errors.append(self._add_row('poly_exp', error, 0.0, dict(u=u, theta=0.3, x=1.0, alpha_mag=alpha_mag)))
        self.record_decreasing(data, 'poly_exp_decreasing', errors)
        single = poly_exp_error(1.0, 0.0, 1.0, 100.0)
        self._add_row('poly_exp', single, 0.0, dict(u=1.0, theta=0.0, x=1.0, alpha_mag=100.0))
        self.record_check(data, 'poly_exp[alpha=100]', single, tol['poly_exp'])

        errors = []
        for m in p['power_log_ms']:
            z = 1 + 1j
            errors.append(self._add_row('power_log', power_log_error(z, 1.0, m), 0.0, dict(z=z, a=1.0, m=m)))
        self.record_decreasing(data, 'power_log_decreasing', errors)
        taylor = power_log_error(1.0, 1.0, 1e6)
        self._add_row('power_log', taylor, 0.5e-6, dict(z=1.0, a=1.0, m=1e6))
        self.record_check(data, 'power_log_taylor_factor', abs(math.log2(taylor / 0.5e-6)), tol['power_log_factor'])

        errors = []
        for alpha_mag in p['head_truncation_alphas']:
            error = head_truncation_error(1.0, 0.3, 0.0, 1.0, alpha_mag)
            errors.append(self._add_row('head_truncation', error, 0.0,
                                        dict(u=1.0, phi=0.3, theta=0.0, x=1.0, alpha_mag=alpha_mag)))
        self.record_decreasing(data, 'head_truncation_decreasing', errors)
        self.record_check(data, "head_truncation[alpha={:g}]".format(p['head_truncation_alphas'][-1]), errors[-1],
                          tol['head_truncation'])
        data['endpoints']["head_truncation[alpha={:g}]".format(p['head_truncation_alphas'][-1])] = errors[-1]

        errors = []
        for alpha_mag in p['mainprop_alphas']:
            result = mainprop_factor_check(0.5, 0.0, 0.0, 1.0, alpha_mag)
            params = dict(u=0.5, phi=0.0, theta=0.0, x=1.0, alpha_mag=alpha_mag, l=result.params['l'])
            errors.append(self._add_row('mainprop_factor', result.value, result.target, params,
                                        abs_error=result.abs_error))
            self.logger.debug("mainprop |alpha|=%g: %s", alpha_mag, result.params['series_rule'])
        self.record_decreasing(data, 'mainprop_decreasing', errors)
        for alpha_mag, error in list(zip(p['mainprop_alphas'], errors))[:2]:
            data['endpoints']["mainprop_abs_error[alpha={:g}]".format(alpha_mag)] = error

        data['values']['asymptotics.csv'] = pd.DataFrame(
            self._rows, columns=list(self.get_csv_schema()['asymptotics.csv']))
        data['summary'] = {'rows': len(self._rows)}
        self._check_data(data)
        return data

    def _stirling_checks(self, data, p, tol):
        largest = 0.0
        for m, x, mu, eps_l, delta_j in itertools.product(p['stirling_ms'], p['stirling_xs'], p['stirling_mus'],
                                                          (0, 1), (0, 1)):
            params = dict(m=m, x=x, mu=mu, eps_l=eps_l, delta_j=delta_j)
            try:
                ratio = stirling_ratio(m, x, mu, eps_l, delta_j)
            except PrecisionError as exc:
                self.logger.error("Stirling ratio above 1 at %s: %s", format_parameters(**params), exc)
                ratio = np.inf
            largest = max(largest, ratio)
            self._add_row('stirling_ratio', ratio, math.exp(-x ** 2 / (4 * mu)), params)
        self.record_check(data, 'stirling_ratio_bounded', largest, 1.0)

        errors = []
        for m in p['stirling_convergence_ms']:
            ratio = stirling_ratio(m, 1.0, 1.0)
            errors.append(self._add_row('stirling_convergence', ratio, math.exp(-0.25), dict(m=m, x=1.0, mu=1.0)))
        self.record_check(data, "stirling_error[m={:g}]".format(p['stirling_convergence_ms'][0]), errors[0],
                          tol['stirling_error'])
        self.record_decreasing(data, 'stirling_error_decreasing', errors)
        data['endpoints']["stirling_error[m={:g}]".format(p['stirling_convergence_ms'][0])] = errors[0]

    def _dirac_checks(self, data, p, tol):
        errors = []
        for alpha_mag in p['dirac_alphas']:
            value = dirac_sequence(math.cos, 0.0, alpha_mag)
            errors.append(self._add_row('dirac_cos', value, 1.0, dict(a=0.0, alpha_mag=alpha_mag)))
        self.record_check(data, "dirac_cos[alpha={:g}]".format(p['dirac_alphas'][-1]), errors[-1], tol['dirac_cos'])
        self.record_decreasing(data, 'dirac_cos_decreasing', errors)
        data['endpoints']["dirac_cos[alpha={:g}]".format(p['dirac_alphas'][-1])] = errors[-1]

        for alpha_mag in p['dirac_mass_alphas']:
            mass = dirac_sequence(lambda phi: 1.0, 0.0, alpha_mag)
            bessel = alpha_mag * math.sqrt(2 * math.pi) * float(ive(0, alpha_mag ** 2))
            tag = "alpha={:g}".format(alpha_mag)
            self.record_check(data, "dirac_mass[{:s}]".format(tag),
                              self._add_row('dirac_mass', mass, 1.0, dict(alpha_mag=alpha_mag)), tol['dirac_mass'])
            self.record_check(data, "dirac_mass_bessel[{:s}]".format(tag),
                              self._add_row('dirac_mass_bessel', mass, bessel, dict(alpha_mag=alpha_mag)),
                              tol['dirac_bessel'])

            sandwich = dirac_sandwich(alpha_mag)
            params = dict(alpha_mag=alpha_mag, delta=sandwich.delta)
            self._add_row('dirac_sandwich_lower', sandwich.middle, sandwich.lower, params)
            self._add_row('dirac_sandwich_upper', sandwich.middle, sandwich.upper, params)
            # non-positive exactly when lower <= middle <= upper
            violation = max(sandwich.lower - sandwich.middle, sandwich.middle - sandwich.upper)
            self.record_check(data, "dirac_sandwich[{:s}]".format(tag), violation, 0.0, passed=sandwich.holds)

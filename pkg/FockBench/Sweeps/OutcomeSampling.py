#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import math

import numpy as np
import pandas as pd

from FockBench.Homodyne.Projectors import outcome_to_x, sample_outcomes
from FockBench.Sweeps.DistributionSweep import coherent_pair_distribution
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParamFloat, SweepParamInt


class OutcomeSampling(Sweep):
    """
    Monte-Carlo realization of the count-difference measurement: draws n_shots outcomes from the exact distribution
    of |beta>_1 (x) |alpha>_2 with the configured seed and compares the empirical histogram and mean with it.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = 'sample'

    @staticmethod
    def get_default_parameter():
        return {
            'alpha_mag': SweepParamFloat(8.0),
            'beta': SweepParamFloat(0.0),
            'theta': SweepParamFloat(0.0, unit='rad'),
            'n_shots': SweepParamInt(100000),
        }

    @staticmethod
    def get_default_tolerances():
        return {
            'mean_sigmas': 3.0,
        }

    @staticmethod
    def get_csv_schema():
        return {
            'sample_histogram.csv': {
                'l': 'count difference outcome',
                'x': 'scaled outcome',
                'count': 'number of draws with this outcome',
                'empirical_prob': 'count / n_shots',
                'exact_prob': 'P(l) = <psi|Pi^l|psi>',
            },
        }

    def algorithm(self, data, parameters):
        alpha_mag = parameters['alpha_mag'].value
        beta = parameters['beta'].value
        theta = parameters['theta'].value
        n_shots = parameters['n_shots'].value
        data['sweep settings'] = self._settings_from(parameters)

        dist, _ = coherent_pair_distribution(alpha_mag, beta, theta)
        self.logger.info("Drawing %d outcomes with seed %d", n_shots, self.seed)
        draws = sample_outcomes(dist, n_shots, self.seed)
        ls, counts = np.unique(draws, return_counts=True)

        rows = [[int(l), outcome_to_x(int(l), alpha_mag, self.rounding), int(c), c / n_shots, dist.probs[int(l)]]
                for l, c in zip(ls, counts)]
        data['values']['sample_histogram.csv'] = pd.DataFrame(
            rows, columns=list(self.get_csv_schema()['sample_histogram.csv']))

        empirical_mean = float(np.mean(draws)) / alpha_mag
        exact_mean = dist.mean() / alpha_mag
        sigma = math.sqrt(dist.variance()) / alpha_mag
        self.record_check(data, 'sample_mean', abs(empirical_mean - exact_mean),
                          self.tolerances['mean_sigmas'] * sigma / math.sqrt(n_shots))

        data['summary'] = {
            'n_shots': n_shots,
            'distinct_outcomes': int(ls.size),
            'empirical_mean_x': empirical_mean,
            'exact_mean_x': exact_mean,
            'exact_std_x': sigma,
        }
        self._check_data(data)
        return data

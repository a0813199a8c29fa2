#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging

import numpy as np
import pandas as pd

from FockBench.config import NUMERICS
from FockBench.Fock.States import default_cutoff
from FockBench.Homodyne.Kernels import collapse_distance, quadrature_interval_projector, riemann_interval_projector
from FockBench.Homodyne.Projectors import interval_outcomes
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParamFloat, SweepParamFloatList, SweepParamInt

logger = logging.getLogger()


def collapse_distance_point(point):
    alpha_mag, beta, theta, a, b, riemann_block = point
    alpha = alpha_mag * np.exp(1j * theta)
    signal_cutoff = default_cutoff(abs(beta)) + NUMERICS.signal_guard
    total_cutoff = default_cutoff(alpha_mag) + signal_cutoff
    first, last = interval_outcomes(a, b, alpha_mag)
    logger.info("Collapse distance |alpha|=%g on (%g, %g], outcomes %d..%d, total cutoff %d",
                alpha_mag, a, b, first, last, total_cutoff)

    distance = collapse_distance(beta, alpha, a, b, signal_cutoff=signal_cutoff, total_cutoff=total_cutoff)
    riemann = riemann_interval_projector(theta, a, b, alpha_mag, riemann_block).entries
    integral = quadrature_interval_projector(theta, a, b, riemann_block).entries
    return [alpha_mag, beta, a, b, first, last, total_cutoff, distance, float(np.linalg.norm(riemann - integral))]


class CollapseDistanceSweep(Sweep):
    """
    Squared distance between the state collapsed by the interval projector sum_{a|alpha| < l <= b|alpha|} Pi^l and
    the state collapsed by the quadrature projector P^(a,b] on the signal mode, for |beta>_1 (x) |alpha>_2.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = 'pitop'

    @staticmethod
    def get_default_parameter():
        return {
            'alpha_magnitudes': SweepParamFloatList([2.0, 4.0, 8.0]),
            'beta': SweepParamFloat(0.0),
            'theta': SweepParamFloat(0.0, unit='rad'),
            'a': SweepParamFloat(-1.0),
            'b': SweepParamFloat(1.0),
            'riemann_block': SweepParamInt(6),
        }

    @staticmethod
    def get_csv_schema():
        return {
            'collapse_distance.csv': {
                'alpha_mag': 'local oscillator magnitude |alpha|',
                'beta': 'signal coherent amplitude',
                'a': 'lower interval end (exclusive)',
                'b': 'upper interval end (inclusive)',
                'first_l': 'smallest outcome in the scaled interval',
                'last_l': 'largest outcome in the scaled interval',
                'total_cutoff': 'two-mode total photon cutoff',
                'distance': 'squared norm of the collapse difference',
                'riemann_dist': 'Frobenius distance of the Riemann-sum projector to P^(a,b] on the low block',
            },
        }

    def algorithm(self, data, parameters):
        p = {k: v.value for k, v in parameters.items()}
        data['sweep settings'] = self._settings_from(parameters)

        points = [(a, p['beta'], p['theta'], p['a'], p['b'], p['riemann_block']) for a in p['alpha_magnitudes']]
        rows = self.map_points(collapse_distance_point, points)
        table = pd.DataFrame(rows, columns=list(self.get_csv_schema()['collapse_distance.csv']))
        data['values']['collapse_distance.csv'] = table

        if len(table) > 1:
            self.record_decreasing(data, 'collapse_distance_decreasing', table['distance'])
        data['endpoints']["distance[alpha={:g}]".format(p['alpha_magnitudes'][-1])] = float(table['distance'].iloc[-1])
        data['summary'] = {'points': len(rows), 'final_distance': float(table['distance'].iloc[-1])}
        self._check_data(data)
        return data

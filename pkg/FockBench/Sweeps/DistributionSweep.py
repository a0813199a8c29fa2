#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging

import numpy as np
import pandas as pd

from FockBench.Fock.States import check_truncation_budget, coherent_state, default_cutoff, tensor
from FockBench.Homodyne.Kernels import braunstein_density
from FockBench.Homodyne.Projectors import outcome_distribution, outcome_to_x
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParamFloat, SweepParamFloatList

logger = logging.getLogger()


def coherent_pair_distribution(alpha_mag: float, beta: complex, theta: float):
    """Outcome distribution of |beta>_1 (x) |alpha>_2 at the default cutoffs, and the total cutoff used."""
    alpha = alpha_mag * np.exp(1j * theta)
    signal_cutoff = default_cutoff(abs(beta))
    oscillator_cutoff = default_cutoff(alpha_mag)
    check_truncation_budget(beta, signal_cutoff, what="signal state")
    check_truncation_budget(alpha, oscillator_cutoff, what="local oscillator")
    total_cutoff = signal_cutoff + oscillator_cutoff
    logger.info("Outcome distribution |alpha|=%g beta=%g at total cutoff %d", alpha_mag, beta, total_cutoff)

    state = tensor(coherent_state(beta, signal_cutoff), coherent_state(alpha, oscillator_cutoff), total_cutoff)
    return outcome_distribution(state), total_cutoff


def distribution_point(point):
    """
    Count-difference statistics of |beta>_1 (x) |alpha>_2 against the Gaussian outcome density.

    point is (alpha_mag, beta, theta, x_window, mode). Rows are kept for |x| <= x_window, the maximum error is
    taken over every outcome.
    """
    alpha_mag, beta, theta, x_window, mode = point
    alpha = alpha_mag * np.exp(1j * theta)
    dist, total_cutoff = coherent_pair_distribution(alpha_mag, beta, theta)

    rows = []
    max_abs_err = 0.0
    for l, prob in zip(dist.outcomes(), dist.probabilities()):
        x = outcome_to_x(int(l), alpha_mag, mode)
        scaled = alpha_mag * prob
        density = braunstein_density(x, alpha, beta)
        abs_err = abs(scaled - density)
        max_abs_err = max(max_abs_err, abs_err)
        if abs(x) <= x_window:
            rows.append([alpha_mag, beta, int(l), x, prob, scaled, density, abs_err])

    symmetry = max(abs(dist.probs[l] - dist.probs[-l]) for l in dist.probs)
    x_mean = dist.mean() / alpha_mag
    summary = {
        'alpha_mag': alpha_mag,
        'beta': beta,
        'total_cutoff': total_cutoff,
        'max_abs_err': max_abs_err,
        'total_prob': dist.total,
        'mean_x': x_mean,
        'var_x': dist.variance() / alpha_mag ** 2,
        'symmetry_dev': symmetry,
    }
    return rows, summary


class DistributionSweep(Sweep):
    """
    Outcome distribution P(l) = <psi|Pi^l|psi> of a coherent signal mixed with a coherent local oscillator,
    compared on the scaled axis x = l/|alpha| with the Gaussian density of the rotated quadrature.

    Checks that the largest deviation decreases along the oscillator magnitudes for every signal amplitude and
    that the beta = 0 distribution is symmetric in l.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = 'distribution'

    @staticmethod
    def get_default_parameter():
        return {
            'alpha_magnitudes': SweepParamFloatList([2.0, 4.0, 8.0]),
            'betas': SweepParamFloatList([0.0, 0.5]),
            'theta': SweepParamFloat(0.0, unit='rad'),
            'x_window': SweepParamFloat(6.0),
        }

    @staticmethod
    def get_default_tolerances():
        return {
            'total_probability': 1e-7,
            'symmetry': 1e-10,
        }

    @staticmethod
    def get_csv_schema():
        return {
            'distribution.csv': {
                'alpha_mag': 'local oscillator magnitude |alpha|',
                'beta': 'signal coherent amplitude',
                'l': 'count difference outcome',
                'x': 'scaled outcome l/|alpha| (bin midpoint for floored outcomes)',
                'prob': 'P(l) = <psi|Pi^l|psi>',
                'scaled_prob': '|alpha| P(l)',
                'gauss_density': 'Gaussian outcome density at x',
                'abs_err': '| |alpha| P(l) - density |',
            },
            'distribution_summary.csv': {
                'alpha_mag': 'local oscillator magnitude |alpha|',
                'beta': 'signal coherent amplitude',
                'total_cutoff': 'two-mode total photon cutoff',
                'max_abs_err': 'maximum of abs_err over all outcomes',
                'total_prob': 'sum of P(l); deficit is truncation loss',
                'mean_x': 'mean of l/|alpha|',
                'var_x': 'variance of l/|alpha|',
                'symmetry_dev': 'max |P(l) - P(-l)|',
            },
        }

    def algorithm(self, data, parameters):
        alpha_mags = parameters['alpha_magnitudes'].value
        betas = parameters['betas'].value
        theta = parameters['theta'].value
        x_window = parameters['x_window'].value
        data['sweep settings'] = self._settings_from(parameters)

        points = [(a, b, theta, x_window, self.rounding) for b in betas for a in alpha_mags]
        results = self.map_points(distribution_point, points)

        rows = [row for point_rows, _ in results for row in point_rows]
        summaries = [summary for _, summary in results]
        schema = self.get_csv_schema()
        data['values']['distribution.csv'] = pd.DataFrame(rows, columns=list(schema['distribution.csv']))
        summary_df = pd.DataFrame(summaries, columns=list(schema['distribution_summary.csv']))
        data['values']['distribution_summary.csv'] = summary_df

        for s in summaries:
            tag = "alpha={:g},beta={:g}".format(s['alpha_mag'], s['beta'])
            self.record_check(data, "total_probability[{:s}]".format(tag), abs(1.0 - s['total_prob']),
                              self.tolerances['total_probability'])
            if s['beta'] == 0:
                self.record_check(data, "symmetry[{:s}]".format(tag), s['symmetry_dev'], self.tolerances['symmetry'])

        for beta in betas:
            errors = summary_df.loc[summary_df['beta'] == beta, 'max_abs_err'].to_list()
            if len(errors) > 1:
                self.record_decreasing(data, "max_abs_err_decreasing[beta={:g}]".format(beta), errors)
            data['endpoints']["max_abs_err[alpha={:g},beta={:g}]".format(alpha_mags[-1], beta)] = errors[-1]

        data['summary'] = {'points': len(summaries), 'rows': len(rows)}
        self._check_data(data)
        return data

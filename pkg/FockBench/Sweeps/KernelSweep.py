#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
import math

import numpy as np
import pandas as pd

from FockBench.Homodyne.Kernels import SQRT_2PI, conditional_kernel, kernel_total_cutoff, limit_kernel
from FockBench.Homodyne.Projectors import x_to_outcome
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParamFloatList, SweepParamInt

logger = logging.getLogger()


def limit_entry_02(theta: float) -> complex:
    """[0][2] entry of the x = 0 limit kernel, (1/sqrt(2 pi)) <0|0;0><0;0|2> = -e^{-2 i theta} / (2 sqrt(pi))."""
    return -np.exp(-2j * theta) / (math.sqrt(2) * SQRT_2PI)


def kernel_point(point):
    """Distance of the top-left block of |alpha| <alpha|Pi^l|alpha> to its quadrature limit at one sweep point."""
    alpha_mag, theta, x, block, mode = point
    l = x_to_outcome(x, alpha_mag, mode)
    total_cutoff = kernel_total_cutoff(alpha_mag, block)
    logger.info("Kernel |alpha|=%g theta=%g x=%g (l=%d) at total cutoff %d", alpha_mag, theta, x, l, total_cutoff)

    kernel = conditional_kernel(l, alpha_mag * np.exp(1j * theta), block, total_cutoff).matrix
    limit = limit_kernel(theta, x, block).entries
    entry = kernel[0, 2] if block > 2 else np.nan
    entry_err = abs(entry - limit_entry_02(theta)) if x == 0 and block > 2 else np.nan
    return [
        alpha_mag, theta, x, l, total_cutoff,
        float(np.linalg.norm(kernel - limit)),
        float(np.real(entry)), float(np.imag(entry)), float(entry_err),
        float(np.linalg.eigvalsh(kernel)[0]),
        float(np.max(np.abs(kernel - kernel.conj().T))),
    ]


class KernelSweep(Sweep):
    """
    Convergence of the conditional collapse kernel |alpha| <alpha|_2 Pi^l |alpha>_2, l = [x |alpha|], to the rank
    one quadrature kernel (1/sqrt(2 pi)) |theta;x><theta;x| on a fixed block of the signal mode.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = 'collapse'

    @staticmethod
    def get_default_parameter():
        return {
            'alpha_magnitudes': SweepParamFloatList([2.0, 4.0, 6.0, 8.0]),
            'xs': SweepParamFloatList([0.0, 0.5, 1.0]),
            'thetas': SweepParamFloatList([0.0, math.pi / 4], unit='rad'),
            'block': SweepParamInt(6),
        }

    @staticmethod
    def get_default_tolerances():
        return {
            'hermiticity': 1e-12,
            'positivity': 1e-10,
        }

    @staticmethod
    def get_csv_schema():
        return {
            'kernel_convergence.csv': {
                'alpha_mag': 'local oscillator magnitude |alpha|',
                'theta': 'local oscillator phase',
                'x': 'scaled outcome',
                'l': 'count difference outcome [x |alpha|]',
                'total_cutoff': 'two-mode total photon cutoff',
                'frobenius_dist': 'Frobenius distance of the block to the limit kernel',
                'entry02_re': 'real part of kernel[0][2]',
                'entry02_im': 'imaginary part of kernel[0][2]',
                'entry02_err': '|kernel[0][2] - limit[0][2]| at x = 0, empty otherwise',
                'min_eig': 'smallest eigenvalue of the block',
                'hermiticity_dev': 'max |K - K^dag|',
            },
        }

    def algorithm(self, data, parameters):
        alpha_mags = parameters['alpha_magnitudes'].value
        xs = parameters['xs'].value
        thetas = parameters['thetas'].value
        block = parameters['block'].value
        data['sweep settings'] = self._settings_from(parameters)

        points = [(a, theta, x, block, self.rounding) for theta in thetas for x in xs for a in alpha_mags]
        rows = self.map_points(kernel_point, points)
        table = pd.DataFrame(rows, columns=list(self.get_csv_schema()['kernel_convergence.csv']))
        data['values']['kernel_convergence.csv'] = table

        self.record_check(data, 'kernel_hermiticity', table['hermiticity_dev'].max(), self.tolerances['hermiticity'])
        self.record_check(data, 'kernel_positivity', max(0.0, -table['min_eig'].min()), self.tolerances['positivity'])

        for theta in thetas:
            for x in xs:
                tag = "theta={:g},x={:g}".format(theta, x)
                sub = table[(table['theta'] == theta) & (table['x'] == x)]
                if len(sub) > 1:
                    self.record_decreasing(data, "frobenius_decreasing[{:s}]".format(tag), sub['frobenius_dist'])
                    if x == 0 and block > 2:
                        self.record_decreasing(data, "entry02_decreasing[{:s}]".format(tag), sub['entry02_err'])
                data['endpoints']["frobenius_dist[alpha={:g},{:s}]".format(alpha_mags[-1], tag)] = \
                    float(sub['frobenius_dist'].iloc[-1])

        data['summary'] = {
            'points': len(rows),
            'largest_frobenius_dist': float(table['frobenius_dist'].max()),
        }
        self._check_data(data)
        return data

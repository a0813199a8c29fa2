#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging

import numpy as np
import pandas as pd

from FockBench.Fock.Errors import InvalidParameterError
from FockBench.Fock.States import FockState, coherent_state, default_cutoff
from FockBench.Homodyne.Kernels import SQRT_2PI
from FockBench.Sweeps.SweepAPI.Sweep import Sweep
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParamFloat, SweepParamFloatList, SweepParamInt
from FockBench.Teleport.Teleportation import (epr_channel, homodyne_teleport, ideal_bell_measure,
                                              limit_bell_amplitudes, outcome_to_quadratures, teleport_fidelity)

logger = logging.getLogger()


def _input_state(psi_alpha: float) -> FockState:
    return coherent_state(psi_alpha, default_cutoff(abs(psi_alpha)))


def consistency_levels(psi0: FockState, three_mode_cutoff: int, threshold: float) -> int:
    """
    Number of output levels c for which the input tail beyond |T - 2c> has norm at most `threshold`.

    Output level c of the three-mode computation only sees input levels up to T - 2c; on the returned levels the
    limit-kernel and ideal outputs differ by at most that tail.
    """
    # tail[n] = norm of the amplitudes from level n on
    tail = np.sqrt(np.cumsum(np.abs(psi0.amps[::-1]) ** 2)[::-1])
    levels = 0
    for c in range(three_mode_cutoff // 2 + 1):
        first_missing = three_mode_cutoff - 2 * c + 1
        if first_missing < psi0.cutoff and tail[first_missing] > threshold:
            break
        levels += 1
    if levels == 0:
        raise InvalidParameterError(
            "Three-mode cutoff {:d} drops input mass above the threshold {:g} on every output level.".format(
                three_mode_cutoff, threshold))
    return levels


def ideal_point(point):
    psi_alpha, q, x_minus, p_plus, cutoff = point
    psi0 = _input_state(psi_alpha)
    logger.info("Ideal Bell measurement q=%g at cutoff %d", q, cutoff)
    output = ideal_bell_measure(psi0, q, x_minus, p_plus, cutoff=cutoff)
    return [q, x_minus, p_plus, cutoff, output.norm(), epr_channel(q, cutoff).discarded_mass,
            teleport_fidelity(output, psi0, complex(x_minus, p_plus))]


def homodyne_point(point):
    psi_alpha, q, lo_mag, l, k, three_mode_cutoff, mode = point
    psi0 = _input_state(psi_alpha)
    logger.info("Homodyne Bell measurement q=%g |lo|=%g outcome (%d, %d)", q, lo_mag, l, k)
    outcome = homodyne_teleport(psi0, q, lo_mag, l, k, mode, three_mode_cutoff=three_mode_cutoff)
    # ideal Bell measurement on the same truncated three-mode space
    ideal = limit_bell_amplitudes(psi0, q, lo_mag, l, k, three_mode_cutoff=three_mode_cutoff)
    return [lo_mag, q, l, k, outcome.x_minus, outcome.p_plus, outcome.collapsed.mass(), outcome.collapsed.purity(),
            outcome.collapsed.fidelity(ideal),
            teleport_fidelity(outcome.collapsed, psi0, outcome.correction_alpha)]


class TeleportSweep(Sweep):
    """
    Teleportation of a coherent input through the channel sum_n q^n |n, n>.

    The ideal Bell measurement is swept over q; its output must approach D(alpha)^dag psi. The homodyne Bell
    measurement is swept over the local oscillator magnitude at fixed q and outcome; its output must approach the
    ideal one. The quadrature-limit kernels must reproduce the ideal output up to the factor sqrt(2 pi).
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = 'teleport'

    @staticmethod
    def get_default_parameter():
        return {
            'qs': SweepParamFloatList([0.8, 0.9, 0.95, 0.99]),
            'psi_alpha': SweepParamFloat(0.3),
            'x_minus': SweepParamFloat(0.0),
            'p_plus': SweepParamFloat(0.0),
            'ideal_cutoff': SweepParamInt(40),
            'lo_magnitudes': SweepParamFloatList([3.0, 6.0, 9.0]),
            'homodyne_q': SweepParamFloat(0.9),
            'l': SweepParamInt(0),
            'k': SweepParamInt(0),
            'three_mode_cutoff': SweepParamInt(20),
        }

    @staticmethod
    def get_default_tolerances():
        return {
            'limit_consistency': 1e-6,
        }

    @staticmethod
    def get_csv_schema():
        return {
            'teleport_ideal.csv': {
                'q': 'channel parameter',
                'x_minus': 'Bell outcome x_minus',
                'p_plus': 'Bell outcome p_plus',
                'cutoff': 'retained channel terms',
                'output_norm': 'norm of the unnormalized mode-2 output',
                'discarded_mass': 'channel mass dropped by the cutoff',
                'fidelity': 'fidelity of the output to D(alpha)^dag psi',
            },
            'teleport_homodyne.csv': {
                'lo_mag': 'local oscillator magnitude',
                'q': 'channel parameter',
                'l': 'count difference outcome of the x detector',
                'k': 'count difference outcome of the p detector',
                'x_minus': 'x_minus read from l',
                'p_plus': 'p_plus read from k',
                'output_mass': 'trace of the unnormalized mode-2 output operator',
                'output_purity': 'Tr rho^2 / (Tr rho)^2 of the mode-2 output',
                'fidelity_to_ideal': 'fidelity to the ideal Bell measurement output on the same truncation',
                'fidelity_to_target': 'fidelity of the output to D(alpha)^dag psi',
            },
        }

    def algorithm(self, data, parameters):
        p = {k: v.value for k, v in parameters.items()}
        data['sweep settings'] = self._settings_from(parameters)
        schema = self.get_csv_schema()

        ideal_rows = self.map_points(
            ideal_point, [(p['psi_alpha'], q, p['x_minus'], p['p_plus'], p['ideal_cutoff']) for q in p['qs']])
        ideal = pd.DataFrame(ideal_rows, columns=list(schema['teleport_ideal.csv']))
        data['values']['teleport_ideal.csv'] = ideal
        if len(ideal) > 1:
            self.record_increasing(data, 'ideal_fidelity_increasing', ideal['fidelity'])
        data['endpoints']['ideal_fidelity_margin'] = float(ideal['fidelity'].iloc[-1] - ideal['fidelity'].iloc[0])

        homodyne_rows = self.map_points(
            homodyne_point, [(p['psi_alpha'], p['homodyne_q'], lo, p['l'], p['k'], p['three_mode_cutoff'],
                              self.rounding) for lo in p['lo_magnitudes']])
        homodyne = pd.DataFrame(homodyne_rows, columns=list(schema['teleport_homodyne.csv']))
        data['values']['teleport_homodyne.csv'] = homodyne
        if len(homodyne) > 1:
            self.record_increasing(data, 'homodyne_fidelity_to_ideal_increasing', homodyne['fidelity_to_ideal'])
        data['endpoints']["homodyne_fidelity_to_ideal[lo={:g}]".format(p['lo_magnitudes'][-1])] = \
            float(homodyne['fidelity_to_ideal'].iloc[-1])

        tolerance = self.tolerances['limit_consistency']
        deviation, levels = self._limit_consistency(p, tolerance)
        self.record_check(data, 'limit_kernel_consistency', deviation, tolerance)

        data['summary'] = {
            'best_ideal_fidelity': float(ideal['fidelity'].max()),
            'best_homodyne_fidelity_to_ideal': float(homodyne['fidelity_to_ideal'].max()),
            'consistency_levels': levels,
        }
        self._check_data(data)
        return data

    def _limit_consistency(self, p, tolerance: float):
        """
        Largest difference between sqrt(2 pi) times the limit-kernel output and the ideal output, together with the
        number of low output levels compared.

        The compared levels are those whose input tail lost to the three-mode cutoff stays a hundredfold below
        the tolerance.
        """
        psi0 = _input_state(p['psi_alpha'])
        T = p['three_mode_cutoff']
        lo_mag = p['lo_magnitudes'][-1]
        levels = consistency_levels(psi0, T, tolerance / 100)
        x_minus, p_plus = outcome_to_quadratures(p['l'], p['k'], lo_mag)
        limit = limit_bell_amplitudes(psi0, p['homodyne_q'], lo_mag, p['l'], p['k'], three_mode_cutoff=T)
        ideal = ideal_bell_measure(psi0, p['homodyne_q'], x_minus, p_plus, cutoff=T + 1)
        block = min(levels, limit.cutoff, ideal.cutoff)
        deviation = float(np.max(np.abs(SQRT_2PI * limit.amps[:block] - ideal.amps[:block])))
        self.logger.debug("Limit kernel consistency at |lo|=%g on %d levels: %.3e", lo_mag, block, deviation)
        return deviation, block

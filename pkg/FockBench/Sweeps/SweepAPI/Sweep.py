#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd

from FockBench.config import LRoundingMode
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParam

SWEEP_PARAMS_TYPE = Dict[str, SweepParam]


class Sweep:
    """Super class for the numerical experiments run by the `fockbench` command.

    A sweep evaluates one family of identities or convergence statements on a grid of parameters. Subclasses set
    `name`, declare their parameters in `get_default_parameter`, their tolerances in `get_default_tolerances`, the
    columns of the CSV files they produce in `get_csv_schema`, and implement `algorithm`.

    Attributes:
        check_param (str): Class attribute. Affects what `run` does on missing parameters: `'Raise'` raises an
            exception, `'Debug'` generates a log entry, `'Auto'` fills the missing parameter with its default value.
        name (str): Name of the sweep, equal to its subcommand.
        rounding (LRoundingMode): How continuous quadrature values map to integer count differences.
        seed (int): Seed for sweeps that draw random numbers.
        mapper (callable): `map`-like callable used to evaluate independent sweep points. Results are consumed in
            sweep order, so a parallel mapper must preserve the order of its input.
    """

    check_param = 'Auto'

    def __init__(self, rounding: LRoundingMode = LRoundingMode.ROUND, seed: int = 0,
                 mapper: Optional[Callable] = None):
        self.name = 'ExampleSweepName'
        self.rounding = rounding
        self.seed = seed
        self.mapper = mapper if mapper is not None else map

        self._parameters: SWEEP_PARAMS_TYPE = {}
        """Dict of sweep parameters, values are SweepParam() instances"""

        self._tolerances: Dict[str, float] = {}

        self.logger = logging.getLogger()
        """Logger object, use this to log to console and log file"""

    @property
    def parameters(self) -> SWEEP_PARAMS_TYPE:
        """`dict` of `SweepParam`: the currently set parameters, the defaults if none were set."""
        if self._parameters == {}:
            self._parameters = self.get_default_parameter()
        return self._parameters

    @parameters.setter
    def parameters(self, new_param: SWEEP_PARAMS_TYPE):
        self._parameters = new_param

    @property
    def tolerances(self) -> Dict[str, float]:
        if self._tolerances == {}:
            self._tolerances = self.get_default_tolerances()
        return self._tolerances

    @tolerances.setter
    def tolerances(self, new_tolerances: Dict[str, float]):
        self._tolerances = new_tolerances

    @staticmethod
    def get_default_parameter() -> SWEEP_PARAMS_TYPE:
        """The dictionary of all parameters of this sweep at their default value."""
        raise NotImplementedError()

    @staticmethod
    def get_default_tolerances() -> Dict[str, float]:
        """Tolerances of the checks of this sweep, keyed by check family."""
        return {}

    @staticmethod
    def get_csv_schema() -> Dict[str, Dict[str, str]]:
        """Maps every CSV file name written by this sweep to its columns and their descriptions."""
        raise NotImplementedError()

    #
    # Sweep routine and helper functions
    #

    def run(self, data: Dict, **kwargs):
        """Completes the parameters and tolerances and executes `self.algorithm()`.

        Arguments:
            data (dict): Dictionary in which the results are stored, see `setup_return_dict`.
            **kwargs: `'parameters'` and `'tolerances'` override the stored ones and may be partial.
        """
        if 'parameters' in kwargs:
            self._parameters = dict(kwargs['parameters'])
        if 'tolerances' in kwargs:
            self._tolerances = dict(kwargs['tolerances'])

        for k, v in self.get_default_parameter().items():
            if k not in self._parameters:
                if type(self).check_param == 'Debug':
                    self.logger.warning("Did not find parameter " + k)
                elif type(self).check_param == 'Auto':
                    self._parameters[k] = v
                elif type(self).check_param == 'Raise':
                    raise ValueError("Parameter not found: " + k)
        for k, v in self.get_default_tolerances().items():
            self._tolerances.setdefault(k, v)

        return self.algorithm(data, self.parameters)

    def algorithm(self, data: Dict, parameters: SWEEP_PARAMS_TYPE):
        """The main body of the sweep.

        Generally includes the following steps:
            1. read all parameters to variables
            2. save them in `data['sweep settings']`
            3. evaluate the sweep points, preferably through `self.map_points`
            4. store one `pandas.DataFrame` per CSV file in `data['values']`
            5. record every tolerance assertion with `record_check` and the fixture-pinned endpoint values in
               `data['endpoints']`
            6. call `self._check_data(data)`
        """
        raise NotImplementedError

    def map_points(self, worker: Callable, points: Iterable) -> List:
        """Evaluates `worker` on every point, in order. `worker` must be a module-level function."""
        return list(self.mapper(worker, list(points)))

    @classmethod
    def setup_return_dict(cls) -> Dict[str, Dict]:
        """Gives the keys which need to be filled in the `data` dictionary during an `algorithm()` run."""
        data = {'sweep settings': {}, 'values': {}, 'checks': {}, 'endpoints': {}, 'summary': {}}
        return data

    def _settings_from(self, parameters: SWEEP_PARAMS_TYPE) -> Dict:
        settings = {k: v.value for k, v in parameters.items()}
        settings['rounding'] = str(self.rounding)
        settings['seed'] = self.seed
        return settings

    def record_check(self, data: Dict, name: str, value: float, tolerance: float, passed: Optional[bool] = None):
        """Stores a tolerance assertion. By default it passes when `value <= tolerance`."""
        value = float(value)
        if passed is None:
            passed = bool(np.isfinite(value) and value <= tolerance)
        data['checks'][name] = {'value': value, 'tolerance': float(tolerance), 'passed': bool(passed)}
        log = self.logger.debug if passed else self.logger.warning
        log("Check %s: value %.3e, tolerance %.1e, %s", name, value, tolerance, "passed" if passed else "FAILED")

    def record_decreasing(self, data: Dict, name: str, sequence: Sequence[float]):
        """Stores a check that `sequence` is strictly decreasing; the value is the largest successive ratio."""
        sequence = np.asarray(sequence, dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratios = sequence[1:] / sequence[:-1]
        passed = bool(np.all(np.diff(sequence) < 0))
        value = float(np.nanmax(ratios)) if np.any(np.isfinite(ratios)) else 0.0
        self.record_check(data, name, value, 1.0, passed=passed)

    def record_increasing(self, data: Dict, name: str, sequence: Sequence[float]):
        """Stores a check that `sequence` is strictly increasing; the value is the smallest successive step."""
        sequence = np.asarray(sequence, dtype=float)
        steps = np.diff(sequence)
        passed = bool(np.all(steps > 0))
        value = float(np.min(steps)) if steps.size else 0.0
        self.record_check(data, name, value, 0.0, passed=passed)

    def _check_data(self, data: Dict):
        """Checks if all necessary fields are present in the `data` dict.

        Raises:
            ValueError: If a mandatory key is not present or a CSV table is missing.
            TypeError: If a field has the wrong type.
        """
        for key in ('values', 'sweep settings', 'checks'):
            if key not in data:
                raise ValueError("Data Error - No value specified in data['{:s}']".format(key))
            if not isinstance(data[key], dict):
                raise TypeError("Data Error - data['{:s}'] is not of type dict.".format(key))
            if len(data[key]) == 0:
                self.logger.warning("Data Warning for sweep {:s} - data['{:s}'] dict is empty.".format(self.name, key))
        for file_name, table in data['values'].items():
            if not isinstance(table, pd.DataFrame):
                raise TypeError("Data Error - data['values']['{:s}'] is not a DataFrame.".format(file_name))
        missing = set(self.get_csv_schema()) - set(data['values'])
        if missing:
            raise ValueError("Data Error - tables {} were not produced.".format(sorted(missing)))
        for file_name, columns in self.get_csv_schema().items():
            if list(data['values'][file_name].columns) != list(columns):
                raise ValueError("Data Error - columns of {:s} do not match its schema.".format(file_name))

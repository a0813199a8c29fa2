#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
import math
from dataclasses import dataclass, field
from os.path import abspath, dirname, join
from typing import Dict, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from FockBench.config import ExperimentKind
from FockBench.Experiments.Fixtures import FIXTURE_TOLERANCE, ORACLE_TOLERANCE
from FockBench.Sweeps import SWEEPS
from FockBench.Sweeps.SweepAPI.Sweepparam import SweepParam
from FockBench.Utils import resolve_output_directory

TOP_LEVEL_KEYS = ('experiment', 'output_directory', 'seed', 'fixture', 'parameters', 'tolerances')


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    """
    A parsed experiment configuration.

    Attributes
    ----------
    experiment: ExperimentKind
        the subcommand this configuration runs
    parameters: dict
        every parameter of the sweep, configured ones overriding the defaults
    tolerances: dict
        every tolerance of the sweep plus the fixture and reference tolerances
    seed: int
        seed of the random generator, only used by the `sample` experiment
    output_directory: str or None
        configured output directory, relative to `base_directory`
    fixture: str or None
        configured path of the pinned endpoint file, relative to `base_directory`
    base_directory: str
        directory of the configuration file
    """

    experiment: ExperimentKind
    parameters: Dict[str, SweepParam]
    tolerances: Dict[str, float]
    seed: int = 0
    output_directory: Optional[str] = None
    fixture: Optional[str] = None
    base_directory: str = field(default='.')

    @property
    def fixture_path(self) -> Optional[str]:
        if not self.fixture:
            return None
        return abspath(join(self.base_directory, self.fixture))

    def resolve_output_directory(self) -> str:
        return resolve_output_directory(str(self.experiment), self.output_directory, self.base_directory)

    def snapshot(self) -> dict:
        """The configuration as written to the manifest. Free of absolute paths so reruns elsewhere match."""
        return {
            'experiment': str(self.experiment),
            'seed': self.seed,
            'output_directory': self.output_directory,
            'fixture': self.fixture,
            'parameters': {k: v.as_dict() for k, v in self.parameters.items()},
            'tolerances': dict(self.tolerances),
        }


def default_tolerances(kind: ExperimentKind) -> Dict[str, float]:
    tolerances = dict(SWEEPS[kind].get_default_tolerances())
    tolerances['fixture'] = FIXTURE_TOLERANCE
    tolerances['oracle'] = ORACLE_TOLERANCE
    return tolerances


def default_experiment_config(kind: ExperimentKind) -> ExperimentConfig:
    """Configuration used when no file is given: every parameter and tolerance at its default."""
    return ExperimentConfig(experiment=kind, parameters=SWEEPS[kind].get_default_parameter(),
                            tolerances=default_tolerances(kind))


def _optional_string(document: dict, key: str) -> Optional[str]:
    value = document.get(key)
    if value is not None and type(value) is not str:
        raise ConfigError("'{:s}' must be a string, got {!r}.".format(key, value))
    return value


def _parse_parameters(table, kind: ExperimentKind) -> Dict[str, SweepParam]:
    if not isinstance(table, dict):
        raise ConfigError("[parameters] must be a table.")
    parameters = SWEEPS[kind].get_default_parameter()
    unknown = sorted(set(table) - set(parameters))
    if unknown:
        raise ConfigError("Unknown parameters for experiment {:s}: {}. Known parameters: {}.".format(
            str(kind), unknown, sorted(parameters)))
    for name, value in table.items():
        param = parameters[name].copy()
        try:
            param.value = value
        except ValueError as exc:
            raise ConfigError("Parameter '{:s}': {:s}".format(name, str(exc))) from exc
        parameters[name] = param
    return parameters


def _parse_tolerances(table, kind: ExperimentKind) -> Dict[str, float]:
    if not isinstance(table, dict):
        raise ConfigError("[tolerances] must be a table.")
    tolerances = default_tolerances(kind)
    unknown = sorted(set(table) - set(tolerances))
    if unknown:
        raise ConfigError("Unknown tolerances for experiment {:s}: {}. Known tolerances: {}.".format(
            str(kind), unknown, sorted(tolerances)))
    for name, value in table.items():
        if type(value) not in (int, float) or not math.isfinite(value) or value <= 0:
            raise ConfigError("Tolerance '{:s}' must be a positive number, got {!r}.".format(name, value))
        tolerances[name] = float(value)
    return tolerances


def parse_experiment_config(document: dict, kind: ExperimentKind, base_directory: str = '.') -> ExperimentConfig:
    """
    Validates a decoded TOML document against the sweep of `kind`.

    Raises
    ------
    ConfigError
        on unknown keys, wrong types, empty sweep lists, non-positive tolerances or a mismatching `experiment` key
    """
    unknown = sorted(set(document) - set(TOP_LEVEL_KEYS))
    if unknown:
        raise ConfigError("Unknown configuration keys: {}. Allowed keys: {}.".format(unknown, list(TOP_LEVEL_KEYS)))

    experiment = document.get('experiment', str(kind))
    if experiment != str(kind):
        raise ConfigError("Configuration is for experiment {!r} but subcommand {:s} was called.".format(
            experiment, str(kind)))

    seed = document.get('seed', 0)
    if type(seed) is not int or seed < 0:
        raise ConfigError("'seed' must be a non-negative integer, got {!r}.".format(seed))

    return ExperimentConfig(
        experiment=kind,
        parameters=_parse_parameters(document.get('parameters', {}), kind),
        tolerances=_parse_tolerances(document.get('tolerances', {}), kind),
        seed=seed,
        output_directory=_optional_string(document, 'output_directory'),
        fixture=_optional_string(document, 'fixture'),
        base_directory=base_directory,
    )


def load_experiment_config(path: str, kind: ExperimentKind) -> ExperimentConfig:
    """Reads and validates the TOML file at `path`. Unreadable files and TOML syntax errors raise ConfigError."""
    logger = logging.getLogger()
    try:
        with open(path, 'rb') as fp:
            document = tomllib.load(fp)
    except OSError as exc:
        raise ConfigError("Cannot read configuration file {:s}: {:s}".format(str(path), str(exc))) from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError("Configuration file {:s} is not valid TOML: {:s}".format(str(path), str(exc))) from exc
    logger.debug("Loaded configuration %s with keys %s", path, sorted(document))
    return parse_experiment_config(document, kind, base_directory=dirname(abspath(path)))

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

from os.path import abspath, dirname, join

import numpy as np
import pytest

from FockBench.config import ExperimentKind
from FockBench.Experiments.ExperimentConfig import load_experiment_config
from FockBench.Fock.States import FockState
from FockBench.Sweeps import SWEEPS

SHIPPED_CONFIG_DIRECTORY = join(dirname(dirname(dirname(abspath(__file__)))), 'configs')


def mark_as_slow_test(cls):
    """ Decorator to mark test as slow. These are excluded when runtests is called with --skip_slow_tests. """
    condition = pytest.skip_slow_tests if hasattr(pytest, 'skip_slow_tests') else False
    return pytest.mark.skipif(condition, reason="skip tests running experiments at full size.")(cls)


def random_fock_state(cutoff: int, seed: int) -> FockState:
    """Normalized state with complex Gaussian amplitudes."""
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=cutoff) + 1j * rng.normal(size=cutoff)
    return FockState(amps / np.linalg.norm(amps))


def run_shipped_config(name: str) -> dict:
    """Runs the sweep of configs/<name>.toml with its configured parameters and tolerances, returning the data."""
    kind = ExperimentKind(name)
    config = load_experiment_config(join(SHIPPED_CONFIG_DIRECTORY, name + '.toml'), kind)
    data = SWEEPS[kind].setup_return_dict()
    SWEEPS[kind](seed=config.seed).run(data, parameters=config.parameters, tolerances=config.tolerances)
    return data

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

from dataclasses import dataclass
from enum import Enum


class BaseEnum(Enum):
    def _generate_next_value_(name, start, count, last_values):
        return name.lower()

    def __str__(self) -> str:
        return str(self.value)


class ExperimentKind(BaseEnum):
    """Enumerate the experiments available as CLI subcommands."""
    STRUCTURAL = "structural"
    DISTRIBUTION = "distribution"
    COLLAPSE = "collapse"
    PITOP = "pitop"
    ASYMPTOTICS = "asymptotics"
    TELEPORT = "teleport"
    SAMPLE = "sample"


class LRoundingMode(BaseEnum):
    """How a continuous quadrature value x maps to an integer count difference l = [x|alpha|]."""
    ROUND = "round"
    FLOOR = "floor"


@dataclass(frozen=True)
class NumericsSettings:
    """
    Fixed numerical constants shared by all experiments.

    Every convergence table is computed with these values, so two runs of the same configuration produce
    bit-identical results.
    """

    # uniform trapezoid grid for quadrature completeness checks
    completeness_r_max: float = 12.0
    completeness_nodes: int = 2048

    # interval projectors P^(a,b]
    interval_nodes_per_unit: int = 256

    # phase integral over |phi,l><phi,l|
    phase_nodes: int = 512

    # Dirac sequence quadrature
    dirac_min_nodes: int = 1024

    # coherent state resolution of identity (Gauss-Laguerre radial x trapezoid angular)
    identity_radial_nodes: int = 48
    identity_angular_nodes: int = 64

    # coherent state truncation loss allowed before an experiment runs
    truncation_budget: float = 1e-8

    # truncation loss allowed inside collapse_distance
    collapse_loss_threshold: float = 1e-6

    # extra signal photons kept on top of the default cutoff rule for kernels
    signal_guard: int = 10

    # log-domain series: stop after `series_patience` terms below `series_rel_tol` * running max
    series_patience: int = 50
    series_rel_tol: float = 1e-18
    series_max_terms: int = 1_000_000

    # hard cap on the number of terms of a log-domain Poisson sum
    iteration_budget: int = 10_000_000

    # default cutoff rule ceil(|a|^2 + linear * |a| + constant)
    cutoff_linear: float = 8.0
    cutoff_constant: float = 16.0


NUMERICS = NumericsSettings()

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from enum import IntEnum
from os import makedirs
from os.path import basename, dirname, exists
from typing import Dict, Optional

from FockBench.config import ExperimentKind, LRoundingMode
from FockBench.Experiments.ExperimentConfig import (ConfigError, ExperimentConfig, default_experiment_config,
                                                    load_experiment_config)
from FockBench.Experiments.Fixtures import compare_endpoints, fixture_record, read_fixture
from FockBench.Experiments.Oracles import reference_endpoints
from FockBench.Experiments.TypeHints import FixtureStatus, ManifestRecord
from FockBench.Exporter.ExportCSV import ExportCSV
from FockBench.Exporter.ExportManifest import ExportManifest
from FockBench.Fock.Errors import DomainError, InvalidParameterError, TruncationBudgetError
from FockBench.Sweeps import SWEEPS
from FockBench.Utils import get_fockbench_version

MANIFEST_FILE_NAME = 'manifest.json'


class ExitCode(IntEnum):
    SUCCESS = 0
    CHECK_FAILED = 1
    CONFIG_ERROR = 2
    TRUNCATION_BUDGET = 3
    IO_ERROR = 4


@contextmanager
def point_mapper(jobs: int):
    """`map` for one job, otherwise the order-preserving `map` of a process pool with `jobs` workers."""
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield pool.map


class ExperimentRunner:
    """
    Runs one experiment end to end: configuration, sweep, reference and fixture comparison and result files.

    Every endpoint is compared with its reference value from `Oracles`. A configured fixture file pins those
    reference values; it is written only with `pin_fixtures` and must exist otherwise.

    Result files are staged as `.part` files and renamed only once every table and the manifest were written, so a
    run that ends with a configuration or truncation error leaves no output behind.
    """

    def __init__(self, experiment: ExperimentKind, config_path: Optional[str] = None, jobs: int = 1,
                 rounding: LRoundingMode = LRoundingMode.ROUND, pin_fixtures: bool = False):
        self.experiment = experiment
        self.config_path = config_path
        self.jobs = jobs
        self.rounding = rounding
        self.pin_fixtures = pin_fixtures
        self.output_directory: Optional[str] = None
        self.manifest: Optional[ManifestRecord] = None
        self.logger = logging.getLogger()

    def load_config(self) -> ExperimentConfig:
        if self.config_path is None:
            self.logger.info("No configuration file given, running %s with default parameters.", self.experiment)
            config = default_experiment_config(self.experiment)
        else:
            config = load_experiment_config(self.config_path, self.experiment)
        if config.fixture_path is None:
            if self.pin_fixtures:
                self.logger.warning("No fixture configured for %s, nothing to pin.", self.experiment)
        elif not self.pin_fixtures and not exists(config.fixture_path):
            raise ConfigError("Fixture {:s} does not exist. Run with --pin-fixtures to write it from the reference "
                              "values.".format(config.fixture_path))
        return config

    def run(self) -> ExitCode:
        start = time.monotonic()
        try:
            config = self.load_config()
        except ConfigError as exc:
            self.logger.error("Configuration error: %s", exc)
            return ExitCode.CONFIG_ERROR

        sweep_class = SWEEPS[self.experiment]
        data = sweep_class.setup_return_dict()
        self.logger.info("Running experiment %s with %d job(s), rounding %s, seed %d",
                         self.experiment, self.jobs, self.rounding, config.seed)
        try:
            with point_mapper(self.jobs) as mapper:
                sweep = sweep_class(rounding=self.rounding, seed=config.seed, mapper=mapper)
                sweep.run(data, parameters=config.parameters, tolerances=config.tolerances)
            reference = reference_endpoints(self.experiment, sweep.parameters, self.rounding)
        except TruncationBudgetError as exc:
            self.logger.error("Truncation budget exceeded: loss %.3e > %.1e. Required cutoff: %d",
                              exc.loss, exc.budget, exc.required_cutoff)
            return ExitCode.TRUNCATION_BUDGET
        except (InvalidParameterError, DomainError) as exc:
            self.logger.error("Invalid sweep parameter: %s", exc)
            return ExitCode.CONFIG_ERROR

        unchecked = sorted(set(data['endpoints']) - set(reference))
        if unchecked:
            self.logger.warning("No reference value for endpoints %s.", ", ".join(unchecked))
        data['checks'].update(compare_endpoints(reference, data['endpoints'], config.tolerances['oracle'],
                                                kind='oracle'))
        fixture_status = self._fixtures(config, data, reference)
        passed = all(check['passed'] for check in data['checks'].values())
        version, git_rev = get_fockbench_version()
        self.manifest = ManifestRecord(
            experiment=str(self.experiment),
            config=dict(config.snapshot(), rounding=str(self.rounding)),
            checks=data['checks'],
            metrics=data['summary'],
            endpoints=data['endpoints'],
            reference_endpoints=reference,
            csv_schema=sweep_class.get_csv_schema(),
            fixtures=fixture_status,
            software={'name': 'FockBench', 'version': version, 'git_rev': git_rev},
            passed=passed,
            wall_time_s=time.monotonic() - start,
        )

        self.output_directory = config.resolve_output_directory()
        try:
            self._write_results(data, config, fixture_status)
        except OSError as exc:
            self.logger.error("Could not write results to %s: %s", self.output_directory, exc)
            return ExitCode.IO_ERROR

        failed = sorted(name for name, check in data['checks'].items() if not check['passed'])
        if failed:
            self.logger.warning("%d of %d checks failed: %s", len(failed), len(data['checks']), ", ".join(failed))
            return ExitCode.CHECK_FAILED
        self.logger.info("All %d checks passed. Results written to %s", len(data['checks']), self.output_directory)
        return ExitCode.SUCCESS

    def _fixtures(self, config: ExperimentConfig, data: dict, reference: Dict[str, float]) -> FixtureStatus:
        """Pins the reference values or compares the endpoints with the pinned ones, one check per endpoint."""
        path = config.fixture_path
        if path is None:
            return FixtureStatus(path=None, status='none', endpoints={})
        if self.pin_fixtures:
            self.logger.info("Pinning %d reference values to %s.", len(reference), path)
            return FixtureStatus(path=config.fixture, status='pinned', endpoints=dict(reference))
        pinned = read_fixture(path)
        data['checks'].update(compare_endpoints(pinned, data['endpoints'], config.tolerances['fixture']))
        return FixtureStatus(path=config.fixture, status='compared', endpoints=pinned)

    def _write_results(self, data: dict, config: ExperimentConfig, fixture_status: FixtureStatus):
        makedirs(self.output_directory, exist_ok=True)
        csv_export = ExportCSV(self.output_directory)
        manifest_export = ExportManifest(self.output_directory)
        fixture_export = None
        try:
            for file_name, table in sorted(data['values'].items()):
                csv_export.stage(file_name, table)
            manifest_export.stage(MANIFEST_FILE_NAME, self.manifest)
            if fixture_status['status'] == 'pinned':
                makedirs(dirname(config.fixture_path), exist_ok=True)
                fixture_export = ExportManifest(dirname(config.fixture_path))
                fixture_export.stage(basename(config.fixture_path),
                                     fixture_record(str(self.experiment), fixture_status['endpoints']))
        except OSError:
            for export in (csv_export, manifest_export, fixture_export):
                if export is not None:
                    export.discard()
            raise

        for export in (csv_export, fixture_export, manifest_export):
            if export is not None:
                for path in export.commit():
                    self.logger.debug("Wrote %s", path)

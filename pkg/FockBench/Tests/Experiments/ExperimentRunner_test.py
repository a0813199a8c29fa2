#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import json
import os
import unittest
from os.path import exists, join
from tempfile import TemporaryDirectory
from unittest import mock

from FockBench.config import ExperimentKind, LRoundingMode
from FockBench.Experiments.ExperimentRunner import MANIFEST_FILE_NAME, ExitCode, ExperimentRunner, point_mapper
from FockBench.Fock.Errors import TruncationBudgetError
from FockBench.Sweeps.CollapseDistanceSweep import CollapseDistanceSweep
from FockBench.Tests.Utils import mark_as_slow_test

PITOP_TOML = """
experiment = "pitop"
output_directory = "out"

[parameters]
alpha_magnitudes = [2.0]
riemann_block = 4
"""

FIXTURE_TOML = PITOP_TOML.replace('output_directory = "out"\n',
                                  'output_directory = "out"\nfixture = "fixtures/pitop.json"\n')


def _square(x):
    return x * x


class PointMapperTest(unittest.TestCase):

    def test_single_job_is_builtin_map(self):
        with point_mapper(1) as mapper:
            self.assertIs(mapper, map)

    @mark_as_slow_test
    def test_pool_keeps_order(self):
        with point_mapper(2) as mapper:
            self.assertEqual(list(mapper(_square, range(8))), [x * x for x in range(8)])


class ExperimentRunnerTest(unittest.TestCase):

    def setUp(self) -> None:
        self.tmp = TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        patcher = mock.patch.dict(os.environ)
        patcher.start()
        self.addCleanup(patcher.stop)
        os.environ.pop('FOCKBENCH_OUT', None)
        self.out = join(self.tmp.name, 'out')
        self.fixture = join(self.tmp.name, 'fixtures', 'pitop.json')

    def write_config(self, text=PITOP_TOML, name='pitop.toml'):
        path = join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as fp:
            fp.write(text)
        return path

    def run_pitop(self, config_text=PITOP_TOML, **kwargs):
        runner = ExperimentRunner(ExperimentKind.PITOP, self.write_config(config_text), **kwargs)
        return runner, runner.run()

    def read(self, name):
        with open(join(self.out, name), 'rb') as fp:
            return fp.read()

    def test_writes_results(self):
        runner, code = self.run_pitop()
        self.assertEqual(code, ExitCode.SUCCESS)
        self.assertEqual(os.path.realpath(runner.output_directory), os.path.realpath(self.out))
        self.assertEqual(sorted(os.listdir(self.out)), ['collapse_distance.csv', MANIFEST_FILE_NAME])

        manifest = json.loads(self.read(MANIFEST_FILE_NAME).decode('utf-8'))
        self.assertEqual(manifest['experiment'], 'pitop')
        self.assertTrue(manifest['passed'])
        self.assertEqual(manifest['software']['name'], 'FockBench')
        self.assertEqual(manifest['config']['rounding'], 'round')
        self.assertEqual(manifest['config']['parameters']['alpha_magnitudes']['value'], [2.0])
        self.assertEqual(list(manifest['csv_schema']), ['collapse_distance.csv'])
        self.assertIn('distance[alpha=2]', manifest['endpoints'])
        self.assertEqual(set(manifest['reference_endpoints']), set(manifest['endpoints']))
        self.assertEqual(manifest['fixtures']['status'], 'none')

        header = self.read('collapse_distance.csv').split(b'\r\n')[0].decode('utf-8')
        self.assertEqual(header.split(','), list(CollapseDistanceSweep.get_csv_schema()['collapse_distance.csv']))

    def test_endpoints_compared_with_reference(self):
        runner, code = self.run_pitop()
        self.assertEqual(code, ExitCode.SUCCESS)
        check = runner.manifest['checks']['oracle[distance[alpha=2]]']
        self.assertTrue(check['passed'])
        self.assertEqual(check['tolerance'], 1e-8)

    def test_reference_mismatch_fails_checks(self):
        with mock.patch('FockBench.Experiments.ExperimentRunner.reference_endpoints',
                        return_value={'distance[alpha=2]': 1.0}):
            runner, code = self.run_pitop()
        self.assertEqual(code, ExitCode.CHECK_FAILED)
        self.assertFalse(runner.manifest['checks']['oracle[distance[alpha=2]]']['passed'])
        self.assertTrue(exists(join(self.out, MANIFEST_FILE_NAME)))

    def test_rerun_gives_identical_tables(self):
        self.run_pitop()
        first = self.read('collapse_distance.csv')
        self.run_pitop()
        self.assertEqual(self.read('collapse_distance.csv'), first)
        self.assertFalse([name for name in os.listdir(self.out) if name.endswith('.part')])

    def test_missing_fixture_is_a_config_error(self):
        with self.assertLogs(level='ERROR') as logs:
            _, code = self.run_pitop(FIXTURE_TOML)
        self.assertEqual(code, ExitCode.CONFIG_ERROR)
        self.assertIn('--pin-fixtures', "\n".join(logs.output))
        self.assertFalse(exists(self.out))
        self.assertFalse(exists(self.fixture))

    def test_fixture_pinned_then_compared(self):
        runner, code = self.run_pitop(FIXTURE_TOML, pin_fixtures=True)
        self.assertEqual(code, ExitCode.SUCCESS)
        self.assertTrue(exists(self.fixture))
        manifest = json.loads(self.read(MANIFEST_FILE_NAME).decode('utf-8'))
        self.assertEqual(manifest['fixtures']['status'], 'pinned')
        with open(self.fixture, 'r', encoding='utf-8') as fp:
            record = json.load(fp)
        # pinned values are the reference values, not the endpoints of the run
        self.assertEqual(record['endpoints'], manifest['reference_endpoints'])
        self.assertNotIn('fixture[distance[alpha=2]]', runner.manifest['checks'])

        runner, code = self.run_pitop(FIXTURE_TOML)
        self.assertEqual(code, ExitCode.SUCCESS)
        self.assertEqual(runner.manifest['fixtures']['status'], 'compared')
        self.assertTrue(runner.manifest['checks']['fixture[distance[alpha=2]]']['passed'])

    def test_pin_without_fixture(self):
        with self.assertLogs(level='WARNING') as logs:
            runner, code = self.run_pitop(pin_fixtures=True)
        self.assertEqual(code, ExitCode.SUCCESS)
        self.assertEqual(runner.manifest['fixtures']['status'], 'none')
        self.assertIn('nothing to pin', "\n".join(logs.output))

    def test_fixture_mismatch_fails_checks(self):
        self.run_pitop(FIXTURE_TOML, pin_fixtures=True)
        with open(self.fixture, 'r', encoding='utf-8') as fp:
            record = json.load(fp)
        record['endpoints']['distance[alpha=2]'] += 1.0
        with open(self.fixture, 'w', encoding='utf-8') as fp:
            json.dump(record, fp)

        runner, code = self.run_pitop(FIXTURE_TOML)
        self.assertEqual(code, ExitCode.CHECK_FAILED)
        self.assertFalse(runner.manifest['passed'])
        self.assertTrue(runner.manifest['checks']['oracle[distance[alpha=2]]']['passed'])
        # results are still written when checks fail
        self.assertTrue(exists(join(self.out, MANIFEST_FILE_NAME)))

    def test_environment_output_directory(self):
        target = join(self.tmp.name, 'from_env')
        with mock.patch.dict(os.environ, {'FOCKBENCH_OUT': target}):
            _, code = self.run_pitop()
        self.assertEqual(code, ExitCode.SUCCESS)
        self.assertTrue(exists(join(target, MANIFEST_FILE_NAME)))
        self.assertFalse(exists(self.out))

    def test_floor_rounding_in_manifest(self):
        runner, _ = self.run_pitop(rounding=LRoundingMode.FLOOR)
        self.assertEqual(runner.manifest['config']['rounding'], 'floor')

    def test_missing_config(self):
        runner = ExperimentRunner(ExperimentKind.PITOP, join(self.tmp.name, 'missing.toml'))
        self.assertEqual(runner.run(), ExitCode.CONFIG_ERROR)

    def test_config_error_writes_nothing(self):
        _, code = self.run_pitop(FIXTURE_TOML + "\n[tolerances]\nspeed = 1.0\n", pin_fixtures=True)
        self.assertEqual(code, ExitCode.CONFIG_ERROR)
        self.assertFalse(exists(self.out))
        self.assertFalse(exists(self.fixture))

    def test_invalid_sweep_parameter(self):
        text = 'experiment = "sample"\noutput_directory = "out"\n[parameters]\nalpha_mag = 2.0\nn_shots = 0\n'
        runner = ExperimentRunner(ExperimentKind.SAMPLE, self.write_config(text, 'sample.toml'))
        self.assertEqual(runner.run(), ExitCode.CONFIG_ERROR)
        self.assertFalse(exists(self.out))

    def test_truncation_budget(self):
        error = TruncationBudgetError(1e-3, 1e-8, 57, what="signal state")
        with mock.patch.object(CollapseDistanceSweep, 'algorithm', side_effect=error):
            with self.assertLogs(level='ERROR') as logs:
                _, code = self.run_pitop()
        self.assertEqual(code, ExitCode.TRUNCATION_BUDGET)
        self.assertIn('57', "\n".join(logs.output))
        self.assertFalse(exists(self.out))

    def test_unwritable_output(self):
        # a regular file where the output directory should be
        with open(self.out, 'w') as fp:
            fp.write('occupied')
        _, code = self.run_pitop(FIXTURE_TOML, pin_fixtures=True)
        self.assertEqual(code, ExitCode.IO_ERROR)
        self.assertFalse(exists(self.fixture))

    @mark_as_slow_test
    def test_parallel_jobs_match_serial(self):
        text = PITOP_TOML.replace('[2.0]', '[2.0, 4.0]')
        self.run_pitop(text)
        serial = self.read('collapse_distance.csv')
        self.run_pitop(text, jobs=2)
        self.assertEqual(self.read('collapse_distance.csv'), serial)


if __name__ == '__main__':
    unittest.main()

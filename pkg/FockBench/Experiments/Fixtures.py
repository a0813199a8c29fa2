#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import json
import logging
import math
from os.path import exists
from typing import Dict, Optional

FIXTURE_TOLERANCE = 1e-8
ORACLE_TOLERANCE = 1e-8


def read_fixture(path: str) -> Optional[Dict[str, float]]:
    """Pinned endpoints stored at `path`, or None if the file does not exist."""
    if not exists(path):
        return None
    with open(path, 'r', encoding='utf-8') as fp:
        record = json.load(fp)
    return {k: (math.nan if v is None else float(v)) for k, v in record['endpoints'].items()}


def fixture_record(experiment: str, endpoints: Dict[str, float]) -> dict:
    return {'experiment': experiment, 'endpoints': dict(endpoints)}


def compare_endpoints(pinned: Dict[str, float], endpoints: Dict[str, float], tolerance: float,
                      kind: str = 'fixture') -> Dict[str, dict]:
    """
    One check `kind[name]` per pinned endpoint: passes when the current value is within `tolerance` of the pinned one.

    Endpoints that the current run did not produce fail with an infinite deviation.
    """
    logger = logging.getLogger()
    checks = {}
    for name, pinned_value in sorted(pinned.items()):
        if name in endpoints:
            deviation = abs(float(endpoints[name]) - pinned_value)
        else:
            logger.warning("Endpoint %s was not produced by this run.", name)
            deviation = math.inf
        passed = bool(math.isfinite(deviation) and deviation <= tolerance)
        checks["{:s}[{:s}]".format(kind, name)] = {'value': deviation, 'tolerance': tolerance, 'passed': passed}
        if not passed:
            logger.warning("Endpoint %s deviates from its %s value by %.3e (tolerance %.1e).",
                           name, kind, deviation, tolerance)
    return checks

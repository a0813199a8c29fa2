#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

from typing import Dict, Optional, TypedDict


class CheckRecord(TypedDict):
    value: float
    tolerance: float
    passed: bool


class SoftwareRecord(TypedDict):
    name: str
    version: str
    git_rev: str


class FixtureStatus(TypedDict):
    path: Optional[str]
    status: str  # "none", "pinned" or "compared"
    endpoints: Dict[str, float]


class ManifestRecord(TypedDict):
    experiment: str
    config: dict
    checks: Dict[str, CheckRecord]
    metrics: dict
    endpoints: Dict[str, float]
    reference_endpoints: Dict[str, float]
    csv_schema: Dict[str, Dict[str, str]]
    fixtures: FixtureStatus
    software: SoftwareRecord
    passed: bool
    wall_time_s: float

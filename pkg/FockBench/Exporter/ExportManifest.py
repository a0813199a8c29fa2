#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import json
import math

import numpy as np

from FockBench.Exporter.ExportStep import ExportStep


def to_builtin(obj):
    """Recursively converts numpy scalars and arrays, tuples and enums to JSON types; non-finite floats to None."""
    if isinstance(obj, dict):
        return {str(k): to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_builtin(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_builtin(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        return obj if math.isfinite(obj) else None
    if isinstance(obj, (complex, np.complexfloating)):
        return [to_builtin(obj.real), to_builtin(obj.imag)]
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def dumps_manifest(record: dict) -> str:
    """JSON with sorted keys, two-space indent, raw UTF-8 and a trailing newline."""
    return json.dumps(to_builtin(record), indent=2, sort_keys=True, ensure_ascii=False, allow_nan=False) + "\n"


class ExportManifest(ExportStep):
    FORMAT_TITLE = "JSON manifest (.json)"

    def _render(self, record: dict) -> bytes:
        return dumps_manifest(record).encode('utf-8')

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import pandas as pd

from FockBench.Exporter.ExportStep import ExportStep


class ExportCSV(ExportStep):
    """
    Sweep tables as RFC-4180 CSV: one header row with the column names, CRLF line ends, '.' decimal separator and
    17 significant digits, so every float reads back bit-identical. Missing values are written as empty fields.
    """

    FORMAT_TITLE = "Comma-Separated Values (.csv)"

    def _render(self, table: pd.DataFrame) -> bytes:
        text = table.to_csv(index=False, float_format='%.17g', lineterminator='\r\n', na_rep='')
        return text.encode('utf-8')

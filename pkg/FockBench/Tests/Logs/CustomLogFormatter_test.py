#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
import unittest

from parameterized import parameterized

from FockBench.Logs.CustomLogFormatter import CustomLogFormatter
from FockBench.Logs.MaxLevelFilter import MaxLevelFilter


def make_record(level=logging.INFO, msg="message", filename="Kernels.py", func="conditional_kernel"):
    record = logging.LogRecord("root", level, "/tmp/" + filename, 42, msg, None, None, func=func)
    record.filename = filename
    return record


class CustomLogFormatterTest(unittest.TestCase):

    def test_short_location_is_right_aligned(self):
        out = CustomLogFormatter(use_color=False).format(make_record())
        location = "Kernels.py:conditional_kernel"
        self.assertIn(" " * (CustomLogFormatter.LOCATION_WIDTH - len(location)) + location + ":42 ", out)
        self.assertNotIn("||", out)

    def test_long_location_is_cut(self):
        out = CustomLogFormatter(use_color=False).format(make_record(func="f" * 80))
        self.assertIn("..." + "f" * (CustomLogFormatter.LOCATION_WIDTH - 3) + ":42", out)

    def test_markers_in_message_survive(self):
        out = CustomLogFormatter(use_color=False).format(make_record(msg="a||b||c"))
        self.assertTrue(out.endswith("a||b||c"))

    @parameterized.expand([
        (logging.DEBUG, CustomLogFormatter.grey),
        (logging.WARNING, CustomLogFormatter.yellow),
        (logging.ERROR, CustomLogFormatter.red),
        (logging.CRITICAL, CustomLogFormatter.bold_red),
    ])
    def test_colors(self, level, color):
        out = CustomLogFormatter().format(make_record(level=level))
        self.assertTrue(out.startswith(color))
        self.assertTrue(out.endswith(CustomLogFormatter.reset))

    def test_info_and_file_output_uncolored(self):
        self.assertNotIn("\x1b[", CustomLogFormatter().format(make_record()))
        self.assertNotIn("\x1b[", CustomLogFormatter(use_color=False).format(make_record(level=logging.ERROR)))


class MaxLevelFilterTest(unittest.TestCase):

    @parameterized.expand([
        (logging.DEBUG, True),
        (logging.INFO, True),
        (logging.WARNING, False),
        (logging.ERROR, False),
    ])
    def test_filter(self, level, passes):
        self.assertEqual(MaxLevelFilter(logging.INFO).filter(make_record(level=level)), passes)


if __name__ == '__main__':
    unittest.main()

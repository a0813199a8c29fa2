#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
import os
from os.path import join
from typing import List


class ExportStep:
    """
    Base class for result file writers.

    Subclasses implement `_render`, which turns a payload into the bytes of one file. `stage` writes them to
    `<name>.part` in the output directory; `commit` renames every staged file to its final name. A run that fails
    before `commit` leaves only `.part` files behind, which `discard` removes.
    """

    FORMAT_TITLE = "Example export format (change me)"

    def __init__(self, directory: str):
        self.directory = directory
        self.staged: List[str] = []
        self.logger = logging.getLogger()

    def _render(self, payload) -> bytes:
        raise NotImplementedError

    def stage(self, file_name: str, payload) -> str:
        """Writes `payload` to `<file_name>.part` and returns the final path it will be committed to."""
        final_path = join(self.directory, file_name)
        with open(final_path + ".part", "wb") as fp:
            fp.write(self._render(payload))
        self.staged.append(final_path)
        self.logger.debug("Staged %s file %s", self.FORMAT_TITLE, final_path)
        return final_path

    def commit(self) -> List[str]:
        committed = []
        for final_path in self.staged:
            os.replace(final_path + ".part", final_path)
            committed.append(final_path)
        self.staged = []
        return committed

    def discard(self):
        for final_path in self.staged:
            try:
                os.remove(final_path + ".part")
            except FileNotFoundError:
                pass
        self.staged = []

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
from typing import Callable, Dict


class CustomLogFormatter(logging.Formatter):
    """
    Formatter shared by all FockBench handlers.

    The location part between the || markers is cut or right-aligned to the width given after it. Records are
    coloured by level unless `use_color` is False, e.g. for the log file or a redirected stream.
    """

    grey = "\x1b[38;20m"
    yellow = "\x1b[33;20m"
    red = "\x1b[31;20m"
    bold_red = "\x1b[31;1m"
    reset = "\x1b[0m"

    COLORS: Dict[int, Callable[[str], str]] = {
        logging.DEBUG: (lambda s: CustomLogFormatter.grey + s + CustomLogFormatter.reset),
        logging.INFO: (lambda s: s),
        logging.WARNING: lambda s: CustomLogFormatter.yellow + s + CustomLogFormatter.reset,
        logging.ERROR: lambda s: CustomLogFormatter.red + s + CustomLogFormatter.reset,
        logging.CRITICAL: lambda s: CustomLogFormatter.bold_red + s + CustomLogFormatter.reset,
    }

    LOCATION_WIDTH = 40

    def __init__(self, use_color: bool = True):
        super().__init__(
            "%(asctime)s : ||%(filename)s:%(funcName)s||" + str(self.LOCATION_WIDTH)
            + "||:%(lineno)-3d : %(levelname)-7s : %(message)s"
        )
        self.use_color = use_color

    def format(self, record):
        outstr = super().format(record)

        # message text may contain || itself, only the first marker pair is the location
        splt = outstr.split("||", 3)
        lim_length = int(splt[2])
        del splt[2]

        orig_loc = splt[1]
        if len(orig_loc) > lim_length - 3:
            splt[1] = "..." + orig_loc[-lim_length + 3:]
        else:
            splt[1] = orig_loc.rjust(lim_length)

        outstr = "".join(splt)
        if not self.use_color:
            return outstr
        add_color = self.COLORS.get(record.levelno, lambda s: s)
        return add_color(outstr)

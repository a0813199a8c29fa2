#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""


class InvalidParameterError(ValueError):
    pass


class ShapeError(ValueError):
    pass


class OutOfRangeError(IndexError):
    pass


class DomainError(ValueError):
    pass


class PrecisionError(RuntimeError):
    pass


class ResourceError(RuntimeError):
    pass


class TruncationBudgetError(PrecisionError):
    """
    Raised when a coherent state truncated at the chosen cutoff loses more probability than the budget allows.

    Attributes
    ----------
    loss: float
        the probability mass beyond the cutoff
    budget: float
        the allowed loss
    required_cutoff: int
        smallest cutoff that satisfies the budget, in the same convention as the cutoff that failed
    """

    def __init__(self, loss: float, budget: float, required_cutoff: int, what: str = "coherent state") -> None:
        self.loss = loss
        self.budget = budget
        self.required_cutoff = required_cutoff
        self.what = what
        super().__init__(
            "Truncation loss of {:s} is {:.3e} > budget {:.1e}. Use a cutoff of at least {:d}.".format(
                what, loss, budget, required_cutoff
            )
        )

    def __reduce__(self):
        # keeps the attributes when raised inside a --jobs worker process
        return type(self), (self.loss, self.budget, self.required_cutoff, self.what)

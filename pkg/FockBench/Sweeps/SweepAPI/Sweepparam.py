#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

from typing import Optional, Union


class SweepParam:
    """Implementation of a single sweep parameter.

    Should never be used directly, only the subclasses in this file should be used.

    Attributes:
        value: The value which the parameter represents
        unit (str): What unit the parameter has. Purely informative, written to the manifest.
    """

    def __init__(self, value: Optional[Union[str, float, int, bool, list]] = None, unit=None):
        self.value = value
        self.unit = unit

    def copy(self) -> "SweepParam":
        """Creates and returns a shallow copy of this `SweepParam`."""
        return type(self)(self.value, self.unit)

    def as_dict(self):
        """Returns the stored value as part of a dict."""
        d = {'value': self.value}
        if self.unit is not None:
            d.update({'unit': self.unit})
        return d

    def __str__(self):
        return str(type(self)) + ": " + str(self.value) + " " + str(self.unit)


class SweepParamInt(SweepParam):
    """Implements a SweepParam that represents an integer number."""

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, new_val):
        if type(new_val) is int:
            self._value = new_val
        else:
            raise ValueError(
                "SweepParamInt needs an integer assigned to value. Tried to assign: " + str(new_val) + " of type "
                + str(type(new_val)))


class SweepParamFloat(SweepParam):
    """Implements a SweepParam that represents a floating-point number. Integers are widened to float."""

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, new_val):
        if type(new_val) in (float, int):
            self._value = float(new_val)
        else:
            raise ValueError(
                "SweepParamFloat needs a float assigned to value. Tried to assign: " + str(new_val) + " of type "
                + str(type(new_val)))


class SweepParamString(SweepParam):
    """Implements a SweepParam that represents a string."""

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, new_val):
        if type(new_val) is str:
            self._value = new_val
        else:
            raise ValueError(
                "SweepParamString needs a string assigned to value. Tried to assign: " + str(new_val) + " of type "
                + str(type(new_val)))


class SweepParamBool(SweepParam):
    """Implements a SweepParam that represents a boolean."""

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, new_val):
        if type(new_val) is bool:
            self._value = new_val
        else:
            raise ValueError(
                "SweepParamBool needs a bool assigned to value. Tried to assign: " + str(new_val) + " of type "
                + str(type(new_val)))


class SweepParamFloatList(SweepParam):
    """Implements a SweepParam that holds a non-empty list of floats, one sweep axis."""

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, new_val):
        if type(new_val) is not list or len(new_val) == 0 or not all(type(v) in (float, int) for v in new_val):
            raise ValueError(
                "SweepParamFloatList needs a non-empty list of floats assigned to value. Tried to assign: "
                + str(new_val))
        self._value = [float(v) for v in new_val]

    def copy(self) -> "SweepParamFloatList":
        return SweepParamFloatList(list(self.value), self.unit)


class SweepParamIntList(SweepParam):
    """Implements a SweepParam that holds a non-empty list of integers."""

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, new_val):
        if type(new_val) is not list or len(new_val) == 0 or not all(type(v) is int for v in new_val):
            raise ValueError(
                "SweepParamIntList needs a non-empty list of integers assigned to value. Tried to assign: "
                + str(new_val))
        self._value = list(new_val)

    def copy(self) -> "SweepParamIntList":
        return SweepParamIntList(list(self.value), self.unit)

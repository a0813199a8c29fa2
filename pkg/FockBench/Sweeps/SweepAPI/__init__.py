"""
Sweep API. Defines all classes that are defined as part of the sweep API.
"""

from .Sweepparam import SweepParamBool
from .Sweepparam import SweepParamFloat
from .Sweepparam import SweepParamFloatList
from .Sweepparam import SweepParamInt
from .Sweepparam import SweepParamIntList
from .Sweepparam import SweepParamString
from .Sweep import Sweep

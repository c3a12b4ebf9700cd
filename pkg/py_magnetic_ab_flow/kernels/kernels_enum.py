# Copyright (c) 2026 The py_magnetic_ab_flow authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

"""Module with enums for propagator kernels."""

# Imports
from enum import Enum, auto, unique


@unique
class KernelValueKeys(Enum):
    """Enumerative for kernel value fields."""

    VALUE_RE = auto()
    VALUE_IM = auto()
    ABS_VALUE = auto()
    K_TERMS_USED = auto()
    EST_TAIL = auto()


@unique
class HeatKernelPairKeys(Enum):
    """Enumerative for heat kernel pair fields."""

    SPECTRAL_RE = auto()
    SPECTRAL_IM = auto()
    CLOSED_RE = auto()
    CLOSED_IM = auto()
    REL_DIFF = auto()


@unique
class CalibrationResultKeys(Enum):
    """Enumerative for prefactor calibration fields."""

    RHO_RE = auto()
    RHO_IM = auto()
    RHO_ABS = auto()
    RHO_ARG = auto()
    REFERENCE_TIMES = auto()
    SPREAD = auto()
    DIST_TO_2PI = auto()
    DIST_TO_2PI_I = auto()
    ALIGNMENT = auto()

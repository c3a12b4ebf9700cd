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

"""Module with the decay scan row."""

# Imports
import math
from typing import Optional

from py_magnetic_ab_flow.common import MabEnumDict, MagneticParams
from py_magnetic_ab_flow.decay.decay_enum import DecayScanRowKeys


class DecayScanRow(MabEnumDict):
    """
    Decay scan row class.
    It holds the grid supremum of |x|^-sigma * |K(t, x, y)| * |y|^-sigma at a time, multiplied by the
    sine factor |sin(B0 * t)|^(1 + sigma). Rows that could not be computed carry an error message and
    no supremum.
    """

    def __init__(self,
                 params: MagneticParams,
                 t: float,
                 sigma: float,
                 sup_weighted: Optional[float],
                 grid_points: int,
                 k_max_used: Optional[int] = None,
                 error: Optional[str] = None) -> None:
        """
        Construct class.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            sigma (float)                 : Weight exponent
            sup_weighted (float)          : Weighted supremum, None if not computed
            grid_points (int)             : Number of points of the sample space
            k_max_used (int, optional)    : Angular momentum cutoff used
            error (str, optional)         : Error message, if the row could not be computed
        """
        super().__init__(DecayScanRowKeys)
        sin_factor = abs(math.sin(params.B0() * t)) ** (1.0 + sigma)
        self._Set(DecayScanRowKeys.ALPHA, params.Alpha())
        self._Set(DecayScanRowKeys.B0, params.B0())
        self._Set(DecayScanRowKeys.T, t)
        self._Set(DecayScanRowKeys.SIGMA, sigma)
        self._Set(DecayScanRowKeys.SUP_WEIGHTED, sup_weighted)
        self._Set(DecayScanRowKeys.SIN_FACTOR, sin_factor)
        self._Set(DecayScanRowKeys.PRODUCT, None if sup_weighted is None else sup_weighted * sin_factor)
        self._Set(DecayScanRowKeys.GRID_POINTS, grid_points)
        self._Set(DecayScanRowKeys.K_MAX_USED, k_max_used)
        self._Set(DecayScanRowKeys.ERROR, error)

    def T(self) -> float:
        return self._Get(DecayScanRowKeys.T)

    def Sigma(self) -> float:
        return self._Get(DecayScanRowKeys.SIGMA)

    def SupWeighted(self) -> Optional[float]:
        return self._Get(DecayScanRowKeys.SUP_WEIGHTED)

    def SinFactor(self) -> float:
        return self._Get(DecayScanRowKeys.SIN_FACTOR)

    def Product(self) -> Optional[float]:
        return self._Get(DecayScanRowKeys.PRODUCT)

    def GridPoints(self) -> int:
        return self._Get(DecayScanRowKeys.GRID_POINTS)

    def KMaxUsed(self) -> Optional[int]:
        return self._Get(DecayScanRowKeys.K_MAX_USED)

    def Error(self) -> Optional[str]:
        return self._Get(DecayScanRowKeys.ERROR)

    def IsValid(self) -> bool:
        """
        Get if the row was computed.

        Returns:
            bool: True if computed, false otherwise
        """
        return self.Error() is None

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

"""Module for checking times against the singular times of the propagator."""

# Imports
import math

from py_magnetic_ab_flow.common.mab_errors import SingularTimeError


class SingularTime:
    """Class container for singular time functions, where B0 * t is a multiple of pi."""

    @staticmethod
    def Distance(b0: float,
                 t: float) -> float:
        """
        Get the distance of B0 * t from pi * Z.

        Args:
            b0 (float): Field strength
            t (float) : Time

        Returns:
            float: Distance in [0, pi/2]
        """
        phase = b0 * t
        return abs(phase - math.pi * round(phase / math.pi))

    @staticmethod
    def Check(b0: float,
              t: float,
              time_guard: float) -> None:
        """
        Check that a time is far enough from the singular times.

        Args:
            b0 (float)        : Field strength
            t (float)         : Time
            time_guard (float): Minimum distance of B0 * t from pi * Z

        Raises:
            SingularTimeError: If the time is too close to a singular time
        """
        if not math.isfinite(b0 * t):
            raise SingularTimeError(f"Time shall be finite ({t})")
        distance = SingularTime.Distance(b0, t)
        if distance < time_guard:
            raise SingularTimeError(
                f"Time {t} is too close to a singular time (distance of B0*t from pi*Z: {distance})"
            )

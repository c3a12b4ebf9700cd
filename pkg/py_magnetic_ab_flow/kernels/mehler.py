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

"""Module with the Mehler kernel of the flow with homogeneous field only (alpha = 0)."""

# Imports
import cmath
import math
from typing import Tuple

import numpy as np

from py_magnetic_ab_flow.common import SingularTime, TruncationConfigConst


Point2D = Tuple[float, float]


class MehlerKernel:
    """
    Class container for the Mehler kernel
    K(t, x, y) = B0 / (4 * pi * sin(B0 * t)) * exp(B0 / (4i) * (cot(B0 * t) * |x - y|^2 - 2 * x ^ y)),
    where x ^ y = x1 * y2 - x2 * y1. Points are Cartesian.
    """

    @staticmethod
    def Evaluate(b0: float,
                 t: float,
                 x: Point2D,
                 y: Point2D,
                 time_guard: float = TruncationConfigConst.DEF_TIME_GUARD) -> complex:
        """
        Evaluate the Mehler kernel.

        Args:
            b0 (float)                  : Field strength
            t (float)                   : Time
            x (tuple[float, float])     : First point
            y (tuple[float, float])     : Second point
            time_guard (float, optional): Minimum distance of B0 * t from pi * Z

        Returns:
            complex: Kernel value

        Raises:
            SingularTimeError: If the time is too close to a singular time
        """
        SingularTime.Check(b0, t, time_guard)

        phase = b0 * t
        sin_phase = math.sin(phase)
        dist_sq = (x[0] - y[0]) ** 2 + (x[1] - y[1]) ** 2
        wedge = x[0] * y[1] - x[1] * y[0]
        exponent = b0 / 4j * (math.cos(phase) / sin_phase * dist_sq - 2.0 * wedge)
        return b0 / (4.0 * math.pi * sin_phase) * cmath.exp(exponent)

    @staticmethod
    def EvaluateRotForm(b0: float,
                        t: float,
                        x: Point2D,
                        y: Point2D,
                        time_guard: float = TruncationConfigConst.DEF_TIME_GUARD) -> complex:
        """
        Evaluate the Mehler kernel in its rotated form
        B0 / (4 * pi * sin(B0 * t)) * exp(B0 / (4i) * cot(B0 * t) * (|x|^2 + |y|^2))
        * exp(i * B0 * <y, R(B0 * t) x> / (2 * sin(B0 * t))), with R the rotation matrix.

        Args:
            b0 (float)                  : Field strength
            t (float)                   : Time
            x (tuple[float, float])     : First point
            y (tuple[float, float])     : Second point
            time_guard (float, optional): Minimum distance of B0 * t from pi * Z

        Returns:
            complex: Kernel value

        Raises:
            SingularTimeError: If the time is too close to a singular time
        """
        SingularTime.Check(b0, t, time_guard)

        phase = b0 * t
        sin_phase = math.sin(phase)
        rotated = MehlerKernel.RotationMatrix(phase) @ np.asarray(x, dtype=float)
        scalar = float(np.dot(np.asarray(y, dtype=float), rotated))
        radial = b0 / 4j * math.cos(phase) / sin_phase * (x[0] ** 2 + x[1] ** 2 + y[0] ** 2 + y[1] ** 2)
        return (b0 / (4.0 * math.pi * sin_phase)
                * cmath.exp(radial)
                * cmath.exp(1j * b0 * scalar / (2.0 * sin_phase)))

    @staticmethod
    def SpectralForm(b0: float,
                     t: float,
                     x: Point2D,
                     y: Point2D,
                     time_guard: float = TruncationConfigConst.DEF_TIME_GUARD) -> complex:
        """
        Evaluate the kernel of exp(-i * t * H) for the homogeneous field only, with H having
        the eigenvalues (2m + 1 + |k| + k) * B0. It equals i times the Mehler kernel at time -t.

        Args:
            b0 (float)                  : Field strength
            t (float)                   : Time
            x (tuple[float, float])     : First point
            y (tuple[float, float])     : Second point
            time_guard (float, optional): Minimum distance of B0 * t from pi * Z

        Returns:
            complex: Kernel value

        Raises:
            SingularTimeError: If the time is too close to a singular time
        """
        return 1j * MehlerKernel.Evaluate(b0, -t, x, y, time_guard)

    @staticmethod
    def RotationMatrix(phi: float) -> np.ndarray:
        """
        Get the rotation matrix of an angle.

        Args:
            phi (float): Angle

        Returns:
            numpy.ndarray: 2x2 rotation matrix
        """
        cos_phi, sin_phi = math.cos(phi), math.sin(phi)
        return np.array([[cos_phi, -sin_phi], [sin_phi, cos_phi]])

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

"""Module with the spatial grid of decay scans."""

# Imports
import math
from typing import Any, Dict, Sequence

import numpy as np

from py_magnetic_ab_flow.common import DomainError


class DecayGridConst:
    """Class container for decay grid constants."""

    DEF_R_MIN: float = 0.05
    DEF_R_MAX: float = 8.0
    DEF_N_RADII: int = 48
    DEF_N_ANGLES: int = 24
    # Relative tolerance under which two radius products are the same
    PRODUCT_REL_TOL: float = 1e-12
    # Absolute tolerance under which two angle differences are the same
    ANGLE_TOL: float = 1e-12


class DecayGrid:
    """
    Decay grid class.
    The sample space is the set of (r1, theta1, r2, theta2) with both radii and both angles taken from the
    same lists. The kernel modulus depends on the angles only through theta1 - theta2, so suprema are
    computed over the distinct radius products and angle differences.
    """

    m_radii: np.ndarray
    m_angles: np.ndarray

    def __init__(self,
                 radii: Sequence[float],
                 angles: Sequence[float]) -> None:
        """
        Construct class.

        Args:
            radii (list[float]) : Non-negative radii
            angles (list[float]): Angles in [0, 2*pi)

        Raises:
            DomainError: If the radii or angles are not valid
        """
        radii_arr = np.unique(np.asarray(radii, dtype=float))
        angles_arr = np.unique(np.asarray(angles, dtype=float))
        if radii_arr.size == 0 or not np.all(np.isfinite(radii_arr)) or radii_arr[0] < 0.0:
            raise DomainError("Grid radii shall be finite and non-negative")
        if angles_arr.size == 0 or angles_arr[0] < 0.0 or angles_arr[-1] >= 2.0 * math.pi:
            raise DomainError("Grid angles shall be in [0, 2*pi)")
        self.m_radii = radii_arr
        self.m_angles = angles_arr

    @classmethod
    def LogSpaced(cls,
                  r_min: float = DecayGridConst.DEF_R_MIN,
                  r_max: float = DecayGridConst.DEF_R_MAX,
                  n_radii: int = DecayGridConst.DEF_N_RADII,
                  n_angles: int = DecayGridConst.DEF_N_ANGLES) -> "DecayGrid":
        """
        Create a grid with log-spaced radii and uniform angles.

        Args:
            r_min (float, optional) : Minimum radius
            r_max (float, optional) : Maximum radius
            n_radii (int, optional) : Number of radii
            n_angles (int, optional): Number of angles

        Returns:
            DecayGrid object: DecayGrid object

        Raises:
            DomainError: If the parameters are not valid
        """
        if not 0.0 < r_min < r_max or not math.isfinite(r_max):
            raise DomainError(f"Invalid radius range [{r_min}, {r_max}]")
        if n_radii < 2 or n_angles < 1:
            raise DomainError(f"Invalid grid size ({n_radii} radii, {n_angles} angles)")
        return cls(np.geomspace(r_min, r_max, n_radii), cls.__UniformAngles(n_angles))

    @classmethod
    def FromRadii(cls,
                  radii: Sequence[float],
                  n_angles: int = DecayGridConst.DEF_N_ANGLES) -> "DecayGrid":
        """
        Create a grid with the specified radii and uniform angles.

        Args:
            radii (list[float])     : Radii
            n_angles (int, optional): Number of angles

        Returns:
            DecayGrid object: DecayGrid object

        Raises:
            DomainError: If the parameters are not valid
        """
        if n_angles < 1:
            raise DomainError(f"Invalid number of angles ({n_angles})")
        return cls(radii, cls.__UniformAngles(n_angles))

    def Refined(self) -> "DecayGrid":
        """
        Get the grid with a midpoint between consecutive radii (geometric when positive) and angles.

        Returns:
            DecayGrid object: Refined grid
        """
        lower, upper = self.m_radii[:-1], self.m_radii[1:]
        radii_mid = np.where(lower > 0.0, np.sqrt(lower * upper), 0.5 * (lower + upper))
        angles_next = np.append(self.m_angles[1:], self.m_angles[0] + 2.0 * math.pi)
        angles_mid = 0.5 * (self.m_angles + angles_next)
        angles_mid = angles_mid[angles_mid < 2.0 * math.pi]
        return DecayGrid(np.concatenate((self.m_radii, radii_mid)), np.concatenate((self.m_angles, angles_mid)))

    def WithRMin(self,
                 r_min: float) -> "DecayGrid":
        """
        Get the grid with the specified minimum radius, radii below it being dropped.

        Args:
            r_min (float): Minimum radius

        Returns:
            DecayGrid object: New grid

        Raises:
            DomainError: If the minimum radius is not valid
        """
        if not 0.0 <= r_min < self.RMax():
            raise DomainError(f"Minimum radius shall be in [0, {self.RMax()}) ({r_min})")
        kept = self.m_radii[self.m_radii > r_min]
        return DecayGrid(np.concatenate(([r_min], kept)), self.m_angles)

    def Radii(self) -> np.ndarray:
        return self.m_radii

    def Angles(self) -> np.ndarray:
        return self.m_angles

    def RMin(self) -> float:
        return float(self.m_radii[0])

    def RMax(self) -> float:
        return float(self.m_radii[-1])

    def NumPoints(self) -> int:
        """
        Get the number of points of the 4-dimensional sample space.

        Returns:
            int: Number of points
        """
        return int(self.m_radii.size ** 2 * self.m_angles.size ** 2)

    def Products(self) -> np.ndarray:
        """
        Get the distinct radius products r1 * r2, sorted.

        Returns:
            numpy.ndarray: Products
        """
        products = np.sort(np.outer(self.m_radii, self.m_radii).ravel())
        keep = np.ones(products.size, dtype=bool)
        keep[1:] = np.diff(products) > DecayGridConst.PRODUCT_REL_TOL * products[1:]
        return products[keep]

    def AngleDifferences(self) -> np.ndarray:
        """
        Get the distinct angle differences theta1 - theta2 modulo 2*pi, sorted.

        Returns:
            numpy.ndarray: Angle differences in [0, 2*pi)
        """
        diffs = np.mod(np.subtract.outer(self.m_angles, self.m_angles).ravel(), 2.0 * math.pi)
        diffs = np.sort(np.where(diffs > 2.0 * math.pi - DecayGridConst.ANGLE_TOL, 0.0, diffs))
        keep = np.ones(diffs.size, dtype=bool)
        keep[1:] = np.diff(diffs) > DecayGridConst.ANGLE_TOL
        return diffs[keep]

    def ToDict(self) -> Dict[str, Any]:
        """
        Get grid metadata as a dictionary.

        Returns:
            dict: Grid metadata
        """
        return {
            "r_min": self.RMin(),
            "r_max": self.RMax(),
            "n_radii": int(self.m_radii.size),
            "n_angles": int(self.m_angles.size),
            "grid_points": self.NumPoints(),
        }

    @staticmethod
    def __UniformAngles(n_angles: int) -> np.ndarray:
        return 2.0 * math.pi * np.arange(n_angles) / n_angles

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

"""Module with the decomposition of the sample space by the radius product."""

# Imports
import math

import numpy as np

from py_magnetic_ab_flow.common import MagneticParams
from py_magnetic_ab_flow.decay.decay_enum import OmegaRegionTags


class OmegaRegion:
    """
    Omega region class.
    Omega1 holds the points with |x| * |y| >= 2 * |sin(B0 * t)| / B0, Omega2 the remaining ones.
    """

    m_tag: OmegaRegionTags
    m_threshold: float

    def __init__(self,
                 tag: OmegaRegionTags,
                 threshold: float) -> None:
        """
        Construct class.

        Args:
            tag (OmegaRegionTags) : Region tag
            threshold (float)     : Threshold on the radius product

        Raises:
            TypeError: If the tag is not of the correct type
        """
        if not isinstance(tag, OmegaRegionTags):
            raise TypeError("Tag is not an enumerative of OmegaRegionTags type")
        self.m_tag = tag
        self.m_threshold = threshold

    @classmethod
    def FromPoint(cls,
                  params: MagneticParams,
                  t: float,
                  r1: float,
                  r2: float) -> "OmegaRegion":
        """
        Get the region of a pair of radii.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            r1 (float)                    : First radius
            r2 (float)                    : Second radius

        Returns:
            OmegaRegion object: Region
        """
        threshold = cls.ComputeThreshold(params, t)
        tag = OmegaRegionTags.OMEGA1 if r1 * r2 >= threshold else OmegaRegionTags.OMEGA2
        return cls(tag, threshold)

    @staticmethod
    def ComputeThreshold(params: MagneticParams,
                         t: float) -> float:
        """
        Get the threshold 2 * |sin(B0 * t)| / B0 on the radius product.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time

        Returns:
            float: Threshold
        """
        return 2.0 * abs(math.sin(params.B0() * t)) / params.B0()

    @staticmethod
    def Omega1Mask(params: MagneticParams,
                   t: float,
                   products: np.ndarray) -> np.ndarray:
        """
        Get which radius products lie in Omega1.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            products (numpy.ndarray)      : Radius products

        Returns:
            numpy.ndarray: Boolean mask, its negation being the Omega2 mask
        """
        return np.asarray(products, dtype=float) >= OmegaRegion.ComputeThreshold(params, t)

    def Tag(self) -> OmegaRegionTags:
        return self.m_tag

    def Threshold(self) -> float:
        return self.m_threshold

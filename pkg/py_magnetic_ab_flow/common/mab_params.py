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

"""Module with the magnetic parameters, mode index and polar point types."""

# Imports
import math
from typing import Any, Dict, Tuple

from py_magnetic_ab_flow.common.mab_errors import DomainError, NonIntegerFluxError
from py_magnetic_ab_flow.utils import Utils


class MagneticParamsConst:
    """Class container for magnetic parameters constants."""

    # Minimum distance of the flux from the integers
    INTEGER_FLUX_TOL: float = 1e-12


class MagneticParams:
    """
    Magnetic parameters class.
    It holds the Aharonov-Bohm flux alpha and the homogeneous field strength B0.
    """

    m_alpha: float
    m_b0: float
    m_mu: float

    def __init__(self,
                 alpha: float,
                 b0: float) -> None:
        """
        Construct class.

        Args:
            alpha (float): Magnetic flux, not an integer
            b0 (float)   : Field strength, strictly positive

        Raises:
            DomainError: If B0 is not strictly positive or a value is not finite
            NonIntegerFluxError: If alpha is an integer
        """
        if not math.isfinite(alpha) or not math.isfinite(b0):
            raise DomainError(f"Magnetic parameters shall be finite (alpha={alpha}, b0={b0})")
        if b0 <= 0.0:
            raise DomainError(f"Field strength shall be strictly positive (b0={b0})")

        mu = Utils.DistanceToIntegers(alpha)
        if mu < MagneticParamsConst.INTEGER_FLUX_TOL:
            raise NonIntegerFluxError(f"Magnetic flux shall not be an integer (alpha={alpha})")

        self.m_alpha = float(alpha)
        self.m_b0 = float(b0)
        self.m_mu = mu

    def Alpha(self) -> float:
        """
        Get the magnetic flux.

        Returns:
            float: Magnetic flux
        """
        return self.m_alpha

    def B0(self) -> float:
        """
        Get the field strength.

        Returns:
            float: Field strength
        """
        return self.m_b0

    def Mu(self) -> float:
        """
        Get the distance of the flux from the integers.

        Returns:
            float: Flux distance in (0, 1/2]
        """
        return self.m_mu

    def Order(self,
              k: int) -> float:
        """
        Get the Bessel order |k + alpha| of an angular momentum.

        Args:
            k (int): Angular momentum

        Returns:
            float: Order
        """
        return abs(k + self.m_alpha)

    def ToDict(self) -> Dict[str, Any]:
        """
        Get parameters as a dictionary.

        Returns:
            dict: Parameters as a dictionary
        """
        return {"alpha": self.m_alpha, "b0": self.m_b0, "mu": self.m_mu}

    def __eq__(self,
               other: object) -> bool:
        if not isinstance(other, MagneticParams):
            return NotImplemented
        return (self.m_alpha, self.m_b0) == (other.m_alpha, other.m_b0)

    def __hash__(self) -> int:
        return hash((self.m_alpha, self.m_b0))

    def __repr__(self) -> str:
        return f"MagneticParams(alpha={self.m_alpha!r}, b0={self.m_b0!r})"


class ModeIndex:
    """Mode index class, an angular momentum k and a radial quantum number m."""

    m_k: int
    m_m: int

    def __init__(self,
                 k: int,
                 m: int) -> None:
        """
        Construct class.

        Args:
            k (int): Angular momentum
            m (int): Radial quantum number, non-negative

        Raises:
            TypeError: If the indexes are not integers
            DomainError: If m is negative
        """
        if isinstance(k, bool) or isinstance(m, bool) or not isinstance(k, int) or not isinstance(m, int):
            raise TypeError("Mode indexes shall be integers")
        if m < 0:
            raise DomainError(f"Radial quantum number shall not be negative (m={m})")
        self.m_k = k
        self.m_m = m

    def K(self) -> int:
        """
        Get the angular momentum.

        Returns:
            int: Angular momentum
        """
        return self.m_k

    def M(self) -> int:
        """
        Get the radial quantum number.

        Returns:
            int: Radial quantum number
        """
        return self.m_m

    def ToTuple(self) -> Tuple[int, int]:
        return self.m_k, self.m_m

    def __eq__(self,
               other: object) -> bool:
        if not isinstance(other, ModeIndex):
            return NotImplemented
        return self.ToTuple() == other.ToTuple()

    def __hash__(self) -> int:
        return hash(self.ToTuple())

    def __repr__(self) -> str:
        return f"ModeIndex(k={self.m_k}, m={self.m_m})"


class PolarPoint:
    """Point of the plane in polar coordinates, with the angle reduced to [0, 2*pi)."""

    m_r: float
    m_theta: float

    def __init__(self,
                 r: float,
                 theta: float) -> None:
        """
        Construct class.

        Args:
            r (float)    : Radius, non-negative
            theta (float): Angle

        Raises:
            DomainError: If the radius is negative or a value is not finite
        """
        if not math.isfinite(r) or not math.isfinite(theta):
            raise DomainError(f"Polar coordinates shall be finite (r={r}, theta={theta})")
        if r < 0.0:
            raise DomainError(f"Radius shall not be negative (r={r})")
        self.m_r = float(r)
        self.m_theta = Utils.ReduceAngle(theta)

    @classmethod
    def FromCartesian(cls,
                      x: float,
                      y: float) -> "PolarPoint":
        """
        Construct class from Cartesian coordinates.

        Args:
            x (float): First coordinate
            y (float): Second coordinate

        Returns:
            PolarPoint object: PolarPoint object
        """
        return cls(math.hypot(x, y), math.atan2(y, x))

    def R(self) -> float:
        return self.m_r

    def Theta(self) -> float:
        return self.m_theta

    def ToCartesian(self) -> Tuple[float, float]:
        """
        Get Cartesian coordinates.

        Returns:
            tuple[float, float]: Cartesian coordinates
        """
        return Utils.PolarToCartesian(self.m_r, self.m_theta)

    def __repr__(self) -> str:
        return f"PolarPoint(r={self.m_r!r}, theta={self.m_theta!r})"

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

"""Module with the radial polynomials P_{k,m} of the magnetic eigenfunctions."""

# Imports
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from py_magnetic_ab_flow.common import DomainError
from py_magnetic_ab_flow.specfun.gamma import Binomial, Pochhammer
from py_magnetic_ab_flow.specfun.laguerre import Laguerre


class PkmPolynomial:
    """
    Class container for the polynomials
    P_{k,m}(rho) = sum_{n=0}^{m} (-m)_n / (1 + nu)_n * rho^n / n!, with nu = |k + alpha|.
    """

    @staticmethod
    def Coefficients(k: int,
                     m: int,
                     alpha: float) -> np.ndarray:
        """
        Get the power coefficients of P_{k,m}, lowest degree first.

        Args:
            k (int)      : Angular momentum
            m (int)      : Radial quantum number, non-negative
            alpha (float): Magnetic flux

        Returns:
            numpy.ndarray: Coefficients

        Raises:
            DomainError: If m is not a non-negative integer
        """
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise DomainError(f"Radial quantum number shall be a non-negative integer ({m})")

        nu = abs(k + alpha)
        coeffs = np.empty(m + 1)
        factorial = 1.0
        for n in range(m + 1):
            if n > 0:
                factorial *= n
            coeffs[n] = Pochhammer.Compute(-m, n) / (Pochhammer.Compute(1.0 + nu, n) * factorial)
        return coeffs

    @staticmethod
    def Evaluate(k: int,
                 m: int,
                 alpha: float,
                 rho: float) -> float:
        """
        Evaluate P_{k,m}(rho) by its finite sum.

        Args:
            k (int)      : Angular momentum
            m (int)      : Radial quantum number, non-negative
            alpha (float): Magnetic flux
            rho (float)  : Argument

        Returns:
            float: Polynomial value

        Raises:
            DomainError: If m is not a non-negative integer
        """
        return float(npoly.polyval(rho, PkmPolynomial.Coefficients(k, m, alpha)))

    @staticmethod
    def EvaluateFromLaguerre(k: int,
                             m: int,
                             alpha: float,
                             rho: float) -> float:
        """
        Evaluate P_{k,m}(rho) as L_m^nu(rho) / C(m + nu, m).

        Args:
            k (int)      : Angular momentum
            m (int)      : Radial quantum number, non-negative
            alpha (float): Magnetic flux
            rho (float)  : Argument

        Returns:
            float: Polynomial value

        Raises:
            DomainError: If m is not a non-negative integer
        """
        nu = abs(k + alpha)
        return Laguerre.Evaluate(nu, m, rho) / Binomial.Compute(nu, m)

    @staticmethod
    def EvaluateWithDerivatives(k: int,
                                m: int,
                                alpha: float,
                                rho: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Evaluate P_{k,m} and its first two derivatives.

        Args:
            k (int)            : Angular momentum
            m (int)            : Radial quantum number, non-negative
            alpha (float)      : Magnetic flux
            rho (numpy.ndarray): Arguments

        Returns:
            tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: Value, first and second derivative

        Raises:
            DomainError: If m is not a non-negative integer
        """
        coeffs = PkmPolynomial.Coefficients(k, m, alpha)
        return (npoly.polyval(rho, coeffs),
                npoly.polyval(rho, npoly.polyder(coeffs, 1)),
                npoly.polyval(rho, npoly.polyder(coeffs, 2)))

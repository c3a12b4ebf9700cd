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

"""Module with generalized Laguerre polynomials and normalized Laguerre functions."""

# Imports
import math

import numpy as np

from py_magnetic_ab_flow.common import DomainError
from py_magnetic_ab_flow.specfun.gamma import Binomial, GammaFunction


def _CheckArgs(alpha: float,
               m: int) -> None:
    if not alpha > -1.0:
        raise DomainError(f"Laguerre parameter shall be greater than -1 ({alpha})")
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise DomainError(f"Laguerre degree shall be a non-negative integer ({m})")


class Laguerre:
    """Class container for generalized Laguerre polynomials L_m^alpha."""

    @staticmethod
    def Evaluate(alpha: float,
                 m: int,
                 t: float) -> float:
        """
        Evaluate L_m^alpha(t) by its explicit finite sum
        sum_{n=0}^{m} (-1)^n * C(m + alpha, m - n) * t^n / n!.

        Args:
            alpha (float): Parameter, greater than -1
            m (int)      : Degree, non-negative
            t (float)    : Argument

        Returns:
            float: Polynomial value

        Raises:
            DomainError: If the parameter or the degree are not valid
        """
        _CheckArgs(alpha, m)

        term = Binomial.Compute(alpha, m)
        result = term
        for n in range(m):
            term *= -t * (m - n) / ((alpha + n + 1.0) * (n + 1.0))
            result += term
        return result

    @staticmethod
    def EvaluateRecurrence(alpha: float,
                           m: int,
                           t: float) -> float:
        """
        Evaluate L_m^alpha(t) by the three-term recurrence.

        Args:
            alpha (float): Parameter, greater than -1
            m (int)      : Degree, non-negative
            t (float)    : Argument

        Returns:
            float: Polynomial value

        Raises:
            DomainError: If the parameter or the degree are not valid
        """
        _CheckArgs(alpha, m)

        prev, curr = 1.0, 1.0 + alpha - t
        if m == 0:
            return prev
        for n in range(1, m):
            prev, curr = curr, ((2 * n + 1 + alpha - t) * curr - (n + alpha) * prev) / (n + 1)
        return curr

    @staticmethod
    def NormalizedTable(nu: float,
                        m_max: int,
                        u: np.ndarray) -> np.ndarray:
        """
        Tabulate sqrt(m! / Gamma(m + nu + 1)) * L_m^nu(u) for m = 0..m_max.

        Args:
            nu (float)       : Parameter, non-negative
            m_max (int)      : Maximum degree
            u (numpy.ndarray): Arguments

        Returns:
            numpy.ndarray: Table of shape (m_max + 1, len(u))

        Raises:
            DomainError: If the parameter or the degree are not valid
        """
        _CheckArgs(nu, m_max)
        u = np.atleast_1d(np.asarray(u, dtype=float))
        start = np.full(u.shape, math.exp(-0.5 * GammaFunction.Log(nu + 1.0)))
        return Laguerre.__Recurrence(nu, m_max, u, start)

    @staticmethod
    def FunctionTable(nu: float,
                      m_max: int,
                      u: np.ndarray) -> np.ndarray:
        """
        Tabulate the orthonormal Laguerre functions
        sqrt(m! / Gamma(m + nu + 1)) * u^(nu/2) * exp(-u/2) * L_m^nu(u) for m = 0..m_max.
        The weight is folded into the starting values, so that large arguments do not overflow.

        Args:
            nu (float)       : Parameter, non-negative
            m_max (int)      : Maximum degree
            u (numpy.ndarray): Non-negative arguments

        Returns:
            numpy.ndarray: Table of shape (m_max + 1, len(u))

        Raises:
            DomainError: If the parameter or the degree are not valid, or an argument is negative
        """
        _CheckArgs(nu, m_max)
        u = np.atleast_1d(np.asarray(u, dtype=float))
        if np.any(u < 0.0):
            raise DomainError("Laguerre function arguments shall not be negative")

        log_norm = -0.5 * GammaFunction.Log(nu + 1.0)
        with np.errstate(divide="ignore"):
            log_start = 0.5 * nu * np.log(u) - 0.5 * u + log_norm
        if nu == 0.0:
            log_start = np.where(u == 0.0, log_norm, log_start)
        return Laguerre.__Recurrence(nu, m_max, u, np.exp(log_start))

    @staticmethod
    def __Recurrence(nu: float,
                     m_max: int,
                     u: np.ndarray,
                     start: np.ndarray) -> np.ndarray:
        table = np.empty((m_max + 1, u.size))
        table[0] = start
        if m_max >= 1:
            table[1] = (1.0 + nu - u) / math.sqrt(1.0 + nu) * start
        for n in range(1, m_max):
            table[n + 1] = (((2 * n + 1 + nu - u) * table[n] - math.sqrt(n * (n + nu)) * table[n - 1])
                            / math.sqrt((n + 1) * (n + nu + 1)))
        return table

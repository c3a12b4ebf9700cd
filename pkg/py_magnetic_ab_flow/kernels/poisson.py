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

"""Module with the Poisson kernel identity of generalized Laguerre polynomials."""

# Imports
import math

import numpy as np

from py_magnetic_ab_flow.common import DomainError
from py_magnetic_ab_flow.specfun import BesselI, BesselIConst, Laguerre


class PoissonIdentity:
    """
    Class container for the identity
    sum_m exp(-c * m) * m! / Gamma(m + nu + 1) * L_m^nu(a) * L_m^nu(b)
    = exp(nu * c / 2) / ((a * b)^(nu/2) * (1 - exp(-c))) * exp(-(a + b) * exp(-c) / (1 - exp(-c)))
      * I_nu(2 * sqrt(a * b) * exp(-c/2) / (1 - exp(-c))).
    """

    @staticmethod
    def LeftSide(nu: float,
                 a: float,
                 b: float,
                 c: float,
                 m_max: int) -> float:
        """
        Get the truncated spectral sum, up to degree m_max.

        Args:
            nu (float) : Laguerre parameter, non-negative
            a (float)  : First argument, strictly positive
            b (float)  : Second argument, strictly positive
            c (float)  : Decay rate, strictly positive
            m_max (int): Maximum degree

        Returns:
            float: Sum value

        Raises:
            DomainError: If an argument is not valid
        """
        PoissonIdentity.__CheckArgs(nu, a, b, c)
        table = Laguerre.NormalizedTable(nu, m_max, np.asarray([a, b]))
        weights = np.exp(-c * np.arange(m_max + 1))
        return float(np.sum(weights * table[:, 0] * table[:, 1]))

    @staticmethod
    def RightSide(nu: float,
                  a: float,
                  b: float,
                  c: float,
                  quad_nodes: int = BesselIConst.DEF_QUAD_NODES) -> float:
        """
        Get the closed form.

        Args:
            nu (float)                : Laguerre parameter, non-negative
            a (float)                 : First argument, strictly positive
            b (float)                 : Second argument, strictly positive
            c (float)                 : Decay rate, strictly positive
            quad_nodes (int, optional): Minimum number of Bessel quadrature nodes

        Returns:
            float: Closed form value

        Raises:
            DomainError: If an argument is not valid
        """
        PoissonIdentity.__CheckArgs(nu, a, b, c)
        decay = math.exp(-c)
        one_minus = -math.expm1(-c)
        bessel = BesselI.Evaluate(nu, 2.0 * math.sqrt(a * b) * math.exp(-0.5 * c) / one_minus, quad_nodes).real
        log_pref = 0.5 * nu * c - 0.5 * nu * math.log(a * b) - math.log(one_minus) - (a + b) * decay / one_minus
        return math.exp(log_pref) * bessel

    @staticmethod
    def Residual(nu: float,
                 a: float,
                 b: float,
                 c: float,
                 m_max: int,
                 quad_nodes: int = BesselIConst.DEF_QUAD_NODES) -> float:
        """
        Get the relative residual |LHS - RHS| / |RHS| of the identity.

        Args:
            nu (float)                : Laguerre parameter, non-negative
            a (float)                 : First argument, strictly positive
            b (float)                 : Second argument, strictly positive
            c (float)                 : Decay rate, strictly positive
            m_max (int)               : Maximum degree of the spectral sum
            quad_nodes (int, optional): Minimum number of Bessel quadrature nodes

        Returns:
            float: Relative residual

        Raises:
            DomainError: If an argument is not valid
        """
        lhs = PoissonIdentity.LeftSide(nu, a, b, c, m_max)
        rhs = PoissonIdentity.RightSide(nu, a, b, c, quad_nodes)
        return abs(lhs - rhs) / abs(rhs)

    @staticmethod
    def __CheckArgs(nu: float,
                    a: float,
                    b: float,
                    c: float) -> None:
        if not nu >= 0.0:
            raise DomainError(f"Laguerre parameter shall be non-negative ({nu})")
        if not (a > 0.0 and b > 0.0 and c > 0.0):
            raise DomainError(f"Poisson identity arguments shall be strictly positive (a={a}, b={b}, c={c})")

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

"""Module with cached Gauss quadrature rules."""

# Imports
import functools
from typing import Tuple

import numpy as np
from scipy.special import roots_genlaguerre, roots_jacobi


QuadratureRule = Tuple[np.ndarray, np.ndarray]


def _ReadOnly(nodes: np.ndarray,
              weights: np.ndarray) -> QuadratureRule:
    nodes = np.ascontiguousarray(nodes, dtype=float)
    weights = np.ascontiguousarray(weights, dtype=float)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


@functools.lru_cache(maxsize=256)
def _Legendre(n: int) -> QuadratureRule:
    return _ReadOnly(*np.polynomial.legendre.leggauss(n))


@functools.lru_cache(maxsize=1024)
def _SymmetricJacobi(n: int,
                     a: float) -> QuadratureRule:
    return _ReadOnly(*roots_jacobi(n, a, a))


@functools.lru_cache(maxsize=256)
def _GenLaguerre(n: int,
                 a: float) -> QuadratureRule:
    return _ReadOnly(*roots_genlaguerre(n, a))


class GaussQuadrature:
    """
    Class container for Gauss quadrature rules.
    Rules are cached and returned as read-only arrays.
    """

    @staticmethod
    def Legendre(n: int) -> QuadratureRule:
        """
        Get the Gauss-Legendre rule on [-1, 1].

        Args:
            n (int): Number of nodes

        Returns:
            tuple[numpy.ndarray, numpy.ndarray]: Nodes and weights
        """
        return _Legendre(n)

    @staticmethod
    def LegendreInterval(n: int,
                         lower: float,
                         upper: float) -> QuadratureRule:
        """
        Get the Gauss-Legendre rule on an interval.

        Args:
            n (int)      : Number of nodes
            lower (float): Lower bound
            upper (float): Upper bound

        Returns:
            tuple[numpy.ndarray, numpy.ndarray]: Nodes and weights
        """
        nodes, weights = _Legendre(n)
        half = 0.5 * (upper - lower)
        return lower + half * (nodes + 1.0), half * weights

    @staticmethod
    def SymmetricJacobi(n: int,
                        a: float) -> QuadratureRule:
        """
        Get the Gauss-Jacobi rule for the weight (1 - s^2)^a on [-1, 1].

        Args:
            n (int)  : Number of nodes
            a (float): Weight exponent, greater than -1

        Returns:
            tuple[numpy.ndarray, numpy.ndarray]: Nodes and weights
        """
        return _SymmetricJacobi(n, float(a))

    @staticmethod
    def GenLaguerre(n: int,
                    a: float) -> QuadratureRule:
        """
        Get the generalized Gauss-Laguerre rule for the weight u^a * exp(-u) on [0, inf).

        Args:
            n (int)  : Number of nodes
            a (float): Weight exponent, greater than -1

        Returns:
            tuple[numpy.ndarray, numpy.ndarray]: Nodes and weights
        """
        return _GenLaguerre(n, float(a))

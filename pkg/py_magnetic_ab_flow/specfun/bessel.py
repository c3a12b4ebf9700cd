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

"""Module with the modified Bessel function of the first kind for complex arguments."""

# Imports
import math
from typing import Sequence

import numpy as np

from py_magnetic_ab_flow.common import AccuracyError, DomainError
from py_magnetic_ab_flow.specfun.gamma import GammaFunction
from py_magnetic_ab_flow.specfun.quadrature import GaussQuadrature


class BesselIConst:
    """Class container for Bessel function constants."""

    # Default minimum number of quadrature nodes
    DEF_QUAD_NODES: int = 200
    # Quadrature nodes added per unit of |z| and fixed margin
    NODES_PER_ARG: float = 0.75
    NODES_MARGIN: int = 40
    # Arguments processed together by the quadrature
    CHUNK_SIZE: int = 2048
    # Power series stopping rule
    SERIES_REL_TOL: float = 1e-17
    SERIES_MAX_TERMS: int = 5000
    # Backward recurrence starting order margin and rescaling threshold
    MILLER_ACCURACY: float = 160.0
    MILLER_MARGIN: int = 10
    RESCALE_THRESHOLD: float = 1e200
    # Largest exponent whose exponential is a finite float
    MAX_EXP_ARG: float = 709.0


class BesselI:
    """
    Class container for the modified Bessel function I_nu(z), with nu >= 0 and complex z.
    The principal branch of z^nu is used.
    """

    @staticmethod
    def Evaluate(nu: float,
                 z: complex,
                 quad_nodes: int = BesselIConst.DEF_QUAD_NODES) -> complex:
        """
        Evaluate I_nu(z) by Gauss-Jacobi quadrature of its Poisson integral
        I_nu(z) = (z/2)^nu / (sqrt(pi) * Gamma(nu + 1/2)) * int_{-1}^{1} (1 - s^2)^(nu - 1/2) * exp(z * s) ds.

        Args:
            nu (float)                : Order, non-negative
            z (complex)               : Argument
            quad_nodes (int, optional): Minimum number of quadrature nodes

        Returns:
            complex: Function value

        Raises:
            DomainError: If the order is negative
        """
        return complex(BesselI.EvaluateArray(nu, np.asarray([z]), quad_nodes)[0])

    @staticmethod
    def EvaluateArray(nu: float,
                      z: np.ndarray,
                      quad_nodes: int = BesselIConst.DEF_QUAD_NODES) -> np.ndarray:
        """
        Evaluate I_nu on an array of arguments, see Evaluate.
        The number of nodes grows with the largest argument modulus.

        Args:
            nu (float)                : Order, non-negative
            z (numpy.ndarray)         : Arguments
            quad_nodes (int, optional): Minimum number of quadrature nodes

        Returns:
            numpy.ndarray: Function values, same shape of the arguments

        Raises:
            DomainError: If the order is negative
        """
        BesselI.__CheckOrder(nu)

        z = np.asarray(z, dtype=complex)
        z_flat = z.ravel()
        result = np.zeros(z_flat.shape, dtype=complex)

        zero = z_flat == 0.0
        if nu == 0.0:
            result[zero] = 1.0

        nz_idx = np.flatnonzero(~zero)
        if nz_idx.size > 0:
            z_nz = z_flat[nz_idx]
            n_nodes = max(quad_nodes,
                          int(math.ceil(BesselIConst.NODES_PER_ARG * float(np.max(np.abs(z_nz)))))
                          + BesselIConst.NODES_MARGIN)
            nodes, weights = GaussQuadrature.SymmetricJacobi(n_nodes, nu - 0.5)
            log_pref = nu * np.log(0.5 * z_nz) - (GammaFunction.Log(nu + 0.5) + 0.5 * math.log(math.pi))

            for start in range(0, z_nz.size, BesselIConst.CHUNK_SIZE):
                stop = start + BesselIConst.CHUNK_SIZE
                integral = np.exp(np.outer(z_nz[start:stop], nodes)) @ weights
                result[nz_idx[start:stop]] = np.exp(log_pref[start:stop]) * integral

        return result.reshape(z.shape)

    @staticmethod
    def Series(nu: float,
               z: complex) -> complex:
        """
        Evaluate I_nu(z) by its power series, accurate for moderate |z|.

        Args:
            nu (float) : Order, non-negative
            z (complex): Argument

        Returns:
            complex: Function value

        Raises:
            DomainError: If the order is negative
            AccuracyError: If the series does not converge
        """
        BesselI.__CheckOrder(nu)

        z = complex(z)
        if z == 0.0:
            return complex(1.0 if nu == 0.0 else 0.0)

        half = 0.5 * z
        term = np.exp(nu * np.log(half) - GammaFunction.Log(nu + 1.0))
        total = term
        quarter_sq = half * half
        for n in range(1, BesselIConst.SERIES_MAX_TERMS):
            term *= quarter_sq / (n * (n + nu))
            total += term
            if n > abs(z) and abs(term) <= BesselIConst.SERIES_REL_TOL * abs(total):
                return complex(total)
        raise AccuracyError(f"Bessel power series did not converge (nu={nu}, z={z})")

    @staticmethod
    def Bound(nu: float,
              z: complex) -> float:
        """
        Get the bound |I_nu(z)| <= (|z|/2)^nu * exp(|Re z|) / Gamma(nu + 1).
        On the imaginary axis the exponential factor is 1.

        Args:
            nu (float) : Order, non-negative
            z (complex): Argument

        Returns:
            float: Bound value, infinity if it exceeds the float range

        Raises:
            DomainError: If the order is negative
        """
        BesselI.__CheckOrder(nu)

        abs_z = abs(z)
        if abs_z == 0.0:
            return 1.0 if nu == 0.0 else 0.0
        log_bound = nu * math.log(0.5 * abs_z) + abs(complex(z).real) - GammaFunction.Log(nu + 1.0)
        return math.exp(log_bound) if log_bound <= BesselIConst.MAX_EXP_ARG else math.inf

    @staticmethod
    def Ladder(nu0: float,
               n_orders: int,
               z: np.ndarray,
               quad_nodes: int = BesselIConst.DEF_QUAD_NODES) -> np.ndarray:
        """
        Evaluate I_{nu0 + j}(z) for j = 0..n_orders-1 on an array of arguments.
        Values come from the backward three-term recurrence, normalized against the quadrature
        value of the larger of I_{nu0} and I_{nu0 + 1}.

        Args:
            nu0 (float)               : Base order, non-negative
            n_orders (int)            : Number of orders
            z (numpy.ndarray)         : Arguments
            quad_nodes (int, optional): Minimum number of quadrature nodes for the normalization

        Returns:
            numpy.ndarray: Values of shape (n_orders, z.size)

        Raises:
            DomainError: If the base order is negative
        """
        BesselI.__CheckOrder(nu0)

        z_flat = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
        ladder = np.zeros((n_orders, z_flat.size), dtype=complex)
        if n_orders <= 0 or z_flat.size == 0:
            return ladder

        zero = z_flat == 0.0
        if nu0 == 0.0:
            ladder[0, zero] = 1.0
        nz_idx = np.flatnonzero(~zero)
        if nz_idx.size > 0:
            ladder[:, nz_idx] = BesselI.__Miller(nu0, n_orders, z_flat[nz_idx], quad_nodes)
        return ladder

    @staticmethod
    def FluxOrders(alpha: float,
                   k_values: Sequence[int],
                   z: np.ndarray,
                   quad_nodes: int = BesselIConst.DEF_QUAD_NODES) -> np.ndarray:
        """
        Evaluate I_{|k + alpha|}(z) for a set of angular momenta.
        Orders split in two ladders with base orders alpha - floor(alpha) and 1 - (alpha - floor(alpha)).

        Args:
            alpha (float)             : Magnetic flux
            k_values (list[int])      : Angular momenta
            z (numpy.ndarray)         : Arguments
            quad_nodes (int, optional): Minimum number of quadrature nodes

        Returns:
            numpy.ndarray: Values of shape (len(k_values), z.size)
        """
        z_flat = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
        k_arr = np.asarray(k_values, dtype=int)
        values = np.zeros((k_arr.size, z_flat.size), dtype=complex)
        if k_arr.size == 0:
            return values

        floor_alpha = math.floor(alpha)
        frac = alpha - floor_alpha
        shifted = k_arr + floor_alpha

        if frac == 0.0:
            idx = np.abs(shifted)
            values[:] = BesselI.Ladder(0.0, int(idx.max()) + 1, z_flat, quad_nodes)[idx]
            return values

        upper = shifted >= 0
        if np.any(upper):
            idx = shifted[upper]
            values[upper] = BesselI.Ladder(frac, int(idx.max()) + 1, z_flat, quad_nodes)[idx]
        lower = ~upper
        if np.any(lower):
            idx = -shifted[lower] - 1
            values[lower] = BesselI.Ladder(1.0 - frac, int(idx.max()) + 1, z_flat, quad_nodes)[idx]
        return values

    @staticmethod
    def __Miller(nu0: float,
                 n_orders: int,
                 z: np.ndarray,
                 quad_nodes: int) -> np.ndarray:
        n_store = max(n_orders, 2)
        extent = max(n_store - 1, float(np.max(np.abs(z))))
        start = (int(math.ceil(extent + math.sqrt(BesselIConst.MILLER_ACCURACY * max(extent, 1.0))))
                 + BesselIConst.MILLER_MARGIN)

        values = np.zeros((n_store, z.size), dtype=complex)
        two_over_z = 2.0 / z
        f_next = np.zeros(z.size, dtype=complex)
        f_curr = np.ones(z.size, dtype=complex)
        for j in range(start, 0, -1):
            if j < n_store:
                values[j] = f_curr
            f_next, f_curr = f_curr, (nu0 + j) * two_over_z * f_curr + f_next

            big = np.abs(f_curr) > BesselIConst.RESCALE_THRESHOLD
            if np.any(big):
                f_curr[big] /= BesselIConst.RESCALE_THRESHOLD
                f_next[big] /= BesselIConst.RESCALE_THRESHOLD
                values[:, big] /= BesselIConst.RESCALE_THRESHOLD
        values[0] = f_curr

        anchor0 = BesselI.EvaluateArray(nu0, z, quad_nodes)
        anchor1 = BesselI.EvaluateArray(nu0 + 1.0, z, quad_nodes)
        scale = np.where(np.abs(anchor0) >= np.abs(anchor1),
                         anchor0 / values[0],
                         anchor1 / values[1])
        return (values * scale)[:n_orders]

    @staticmethod
    def __CheckOrder(nu: float) -> None:
        if not nu >= 0.0 or not math.isfinite(nu):
            raise DomainError(f"Bessel order shall be non-negative ({nu})")

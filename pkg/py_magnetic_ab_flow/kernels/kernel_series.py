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

"""Module with the Bessel-series representation of the propagator kernel."""

# Imports
import cmath
import logging
import math
from typing import List, Optional

import numpy as np

from py_magnetic_ab_flow.common import (
    MabEnumDict, MagneticParams, PolarPoint, SingularTime, TruncationConfig, TruncationError
)
from py_magnetic_ab_flow.kernels.calibration import PrefactorCalibration
from py_magnetic_ab_flow.kernels.kernels_enum import KernelValueKeys
from py_magnetic_ab_flow.specfun import BesselI


logger = logging.getLogger(__name__)


class BesselSeriesKernelConst:
    """Class container for Bessel-series kernel constants."""

    # Size of the last tail term, relative to the accumulated tail or to the tolerance, at which tail sums stop
    TAIL_REL_TOL: float = 1e-17
    # Largest angular momentum cutoff explored when searching a cutoff
    MAX_K: int = 4096


class KernelValue(MabEnumDict):
    """Kernel value class, with the truncation used and the estimated tail."""

    m_value: complex

    def __init__(self,
                 value: complex,
                 k_terms_used: int,
                 est_tail: float) -> None:
        """
        Construct class.

        Args:
            value (complex)   : Kernel value
            k_terms_used (int): Number of angular terms summed
            est_tail (float)  : Estimated modulus of the dropped terms
        """
        super().__init__(KernelValueKeys)
        self.m_value = complex(value)
        self._Set(KernelValueKeys.VALUE_RE, self.m_value.real)
        self._Set(KernelValueKeys.VALUE_IM, self.m_value.imag)
        self._Set(KernelValueKeys.ABS_VALUE, abs(self.m_value))
        self._Set(KernelValueKeys.K_TERMS_USED, k_terms_used)
        self._Set(KernelValueKeys.EST_TAIL, est_tail)

    def Value(self) -> complex:
        return self.m_value

    def KTermsUsed(self) -> int:
        return self._Get(KernelValueKeys.K_TERMS_USED)

    def EstTail(self) -> float:
        return self._Get(KernelValueKeys.EST_TAIL)


class BesselSeriesKernel:
    """
    Class container for the kernel of exp(-i * t * H) as an angular series
    rho * B0 * exp(-i * t * B0 * alpha) / (8 * pi^2 * i * sin(B0 * t))
    * exp(-B0 * (r1^2 + r2^2) / (4i * tan(B0 * t)))
    * sum_k exp(i * k * (theta1 - theta2 - B0 * t)) * I_{|k + alpha|}(B0 * r1 * r2 / (2i * sin(B0 * t))),
    where rho is the calibration constant.
    """

    @staticmethod
    def RawPrefactor(params: MagneticParams,
                     t: float) -> complex:
        """
        Get the prefactor without the calibration constant.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time

        Returns:
            complex: Prefactor
        """
        b0 = params.B0()
        return b0 * cmath.exp(-1j * t * b0 * params.Alpha()) / (8.0 * math.pi ** 2 * 1j * math.sin(b0 * t))

    @staticmethod
    def BesselArgument(params: MagneticParams,
                       t: float,
                       r_product: np.ndarray) -> np.ndarray:
        """
        Get the purely imaginary Bessel argument B0 * r1 * r2 / (2i * sin(B0 * t)).

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            r_product (numpy.ndarray)     : Radius products r1 * r2

        Returns:
            numpy.ndarray: Bessel arguments
        """
        b0 = params.B0()
        return -1j * b0 * np.asarray(r_product, dtype=float) / (2.0 * math.sin(b0 * t))

    @staticmethod
    def GaussianFactor(params: MagneticParams,
                       t: float,
                       r_sq_sum: np.ndarray) -> np.ndarray:
        """
        Get the unimodular factor exp(-B0 * (r1^2 + r2^2) / (4i * tan(B0 * t))).

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            r_sq_sum (numpy.ndarray)      : Sums r1^2 + r2^2

        Returns:
            numpy.ndarray: Factor values
        """
        b0 = params.B0()
        return np.exp(0.25j * b0 / math.tan(b0 * t) * np.asarray(r_sq_sum, dtype=float))

    @staticmethod
    def AngularSeries(params: MagneticParams,
                      k_max: int,
                      w: np.ndarray,
                      phi: np.ndarray,
                      quad_nodes: int) -> np.ndarray:
        """
        Sum exp(i * k * phi) * I_{|k + alpha|}(w) over |k| <= k_max.

        Args:
            params (MagneticParams object): Magnetic parameters
            k_max (int)                   : Angular momentum cutoff
            w (numpy.ndarray)             : Bessel arguments
            phi (numpy.ndarray)           : Angles
            quad_nodes (int)              : Minimum number of Bessel quadrature nodes

        Returns:
            numpy.ndarray: Sums of shape (len(phi), w.size)
        """
        k_values = np.arange(-k_max, k_max + 1)
        bessel = BesselI.FluxOrders(params.Alpha(), k_values, w, quad_nodes)
        phases = np.exp(1j * np.outer(np.atleast_1d(phi), k_values))
        return phases @ bessel

    @staticmethod
    def TailBound(params: MagneticParams,
                  w: complex,
                  k_max: int) -> float:
        """
        Bound the modulus of the dropped terms sum_{|k| > k_max} |I_{|k + alpha|}(w)|.

        Args:
            params (MagneticParams object): Magnetic parameters
            w (complex)                   : Bessel argument
            k_max (int)                   : Angular momentum cutoff

        Returns:
            float: Tail bound
        """
        terms = BesselSeriesKernel.__TailTerms(params, w, k_max)
        # Terms past the last one sum to at most the last one
        return float(math.fsum(terms) + terms[-1])

    @staticmethod
    def RequiredKMax(params: MagneticParams,
                     w: complex,
                     tail_tol: float,
                     k_min: int = 0) -> int:
        """
        Get the smallest cutoff, not lower than k_min, whose tail bound does not exceed the tolerance.
        Tail terms are accumulated until the remaining ones are certified negligible with respect to the tolerance.

        Args:
            params (MagneticParams object): Magnetic parameters
            w (complex)                   : Bessel argument with the largest modulus
            tail_tol (float)              : Tail tolerance
            k_min (int, optional)         : Minimum cutoff

        Returns:
            int: Cutoff

        Raises:
            TruncationError: If no cutoff up to the maximum one meets the tolerance
        """
        if math.isinf(tail_tol):
            return k_min

        alpha = params.Alpha()
        certified_from = abs(w) + abs(alpha)
        terms: List[float] = []
        j = k_min + 1
        while True:
            if j > BesselSeriesKernelConst.MAX_K:
                raise TruncationError(
                    f"No angular cutoff up to {BesselSeriesKernelConst.MAX_K} meets tail tolerance {tail_tol}",
                    float(math.fsum(terms))
                )
            term = BesselSeriesKernel.__PairBound(alpha, w, j)
            terms.append(term)
            if j > certified_from and term <= BesselSeriesKernelConst.TAIL_REL_TOL * tail_tol:
                break
            j += 1

        tails = np.cumsum(np.asarray(terms)[::-1])[::-1] + terms[-1]
        below = np.flatnonzero(tails <= tail_tol)
        if below.size == 0:
            raise TruncationError(
                f"No angular cutoff from {k_min} meets tail tolerance {tail_tol}",
                float(tails[-1])
            )
        k_max = k_min + int(below[0])
        logger.debug("Angular cutoff %d for |w| = %g, tail tolerance %g", k_max, abs(w), tail_tol)
        return k_max

    @staticmethod
    def Evaluate(params: MagneticParams,
                 t: float,
                 x: PolarPoint,
                 y: PolarPoint,
                 cfg: TruncationConfig,
                 prefactor_scale: Optional[complex] = None) -> KernelValue:
        """
        Evaluate the kernel at two points, with the angular series truncated at the configured cutoff.

        Args:
            params (MagneticParams object)    : Magnetic parameters
            t (float)                         : Time
            x (PolarPoint object)             : First point
            y (PolarPoint object)             : Second point
            cfg (TruncationConfig object)     : Truncation configuration
            prefactor_scale (complex, optional): Calibration constant, the calibrated one if not specified

        Returns:
            KernelValue object: Kernel value

        Raises:
            SingularTimeError: If the time is too close to a singular time
            TruncationError: If the estimated tail exceeds the tail tolerance
        """
        SingularTime.Check(params.B0(), t, cfg.TimeGuard())
        if prefactor_scale is None:
            prefactor_scale = PrefactorCalibration.Calibrate(params, cfg)

        prefactor = prefactor_scale * BesselSeriesKernel.RawPrefactor(params, t)
        w = BesselSeriesKernel.BesselArgument(params, t, np.asarray([x.R() * y.R()]))
        phi = x.Theta() - y.Theta() - params.B0() * t

        est_tail = abs(prefactor) * BesselSeriesKernel.TailBound(params, complex(w[0]), cfg.KMax())
        if est_tail > cfg.TailTol():
            raise TruncationError(
                f"Estimated kernel tail {est_tail} exceeds tolerance {cfg.TailTol()} with k_max={cfg.KMax()}",
                est_tail
            )

        series = BesselSeriesKernel.AngularSeries(params, cfg.KMax(), w, np.asarray([phi]), cfg.QuadNodes())
        gauss = BesselSeriesKernel.GaussianFactor(params, t, np.asarray([x.R() ** 2 + y.R() ** 2]))
        value = prefactor * gauss[0] * series[0, 0]
        logger.debug("Kernel at t=%g, x=%s, y=%s: %s (tail %g)", t, x, y, value, est_tail)
        return KernelValue(value, 2 * cfg.KMax() + 1, est_tail)

    @staticmethod
    def __PairBound(alpha: float,
                    w: complex,
                    j: int) -> float:
        return BesselI.Bound(abs(j + alpha), w) + BesselI.Bound(abs(-j + alpha), w)

    @staticmethod
    def __TailTerms(params: MagneticParams,
                    w: complex,
                    k_max: int) -> List[float]:
        # Bounds of the pairs of dropped terms k and -k, for k > k_max, until negligible.
        # Past |w| + |alpha| consecutive bounds at least halve.
        alpha = params.Alpha()
        certified_from = abs(w) + abs(alpha)
        terms: List[float] = []
        total = 0.0
        j = k_max + 1
        while True:
            term = BesselSeriesKernel.__PairBound(alpha, w, j)
            terms.append(term)
            total += term
            if j > certified_from and term <= BesselSeriesKernelConst.TAIL_REL_TOL * total:
                break
            j += 1
        return terms

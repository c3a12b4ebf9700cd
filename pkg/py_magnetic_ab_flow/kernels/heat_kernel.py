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

"""Module with the heat kernel exp(-tau * H), by spectral sum and by closed form."""

# Imports
import math

import numpy as np

from py_magnetic_ab_flow.common import DomainError, MabEnumDict, MagneticParams, PolarPoint, TruncationConfig
from py_magnetic_ab_flow.kernels.kernels_enum import HeatKernelPairKeys
from py_magnetic_ab_flow.specfun import BesselI, Laguerre


class HeatKernelPair(MabEnumDict):
    """Heat kernel pair class, the same kernel value computed by two independent routes."""

    m_spectral: complex
    m_closed: complex

    def __init__(self,
                 spectral: complex,
                 closed: complex) -> None:
        """
        Construct class.

        Args:
            spectral (complex): Spectral sum value
            closed (complex)  : Closed form value
        """
        super().__init__(HeatKernelPairKeys)
        self.m_spectral = complex(spectral)
        self.m_closed = complex(closed)
        self._Set(HeatKernelPairKeys.SPECTRAL_RE, self.m_spectral.real)
        self._Set(HeatKernelPairKeys.SPECTRAL_IM, self.m_spectral.imag)
        self._Set(HeatKernelPairKeys.CLOSED_RE, self.m_closed.real)
        self._Set(HeatKernelPairKeys.CLOSED_IM, self.m_closed.imag)
        self._Set(HeatKernelPairKeys.REL_DIFF, self.RelativeDifference())

    def Spectral(self) -> complex:
        return self.m_spectral

    def Closed(self) -> complex:
        return self.m_closed

    def RelativeDifference(self) -> float:
        """
        Get the relative difference of the two routes.

        Returns:
            float: Relative difference
        """
        scale = max(abs(self.m_spectral), abs(self.m_closed))
        return abs(self.m_spectral - self.m_closed) / scale if scale > 0.0 else 0.0


class HeatKernel:
    """
    Class container for the heat kernel.
    The spectral route sums exp(-tau * lambda_{k,m}) over normalized eigenfunctions, the closed route sums
    over k the per-k closed form given by the Poisson kernel identity with c = 2 * B0 * tau.
    """

    @staticmethod
    def Pair(params: MagneticParams,
             tau: float,
             x: PolarPoint,
             y: PolarPoint,
             cfg: TruncationConfig) -> HeatKernelPair:
        """
        Compute the heat kernel by both routes.

        Args:
            params (MagneticParams object): Magnetic parameters
            tau (float)                   : Imaginary time, strictly positive
            x (PolarPoint object)         : First point
            y (PolarPoint object)         : Second point
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            HeatKernelPair object: Kernel values

        Raises:
            DomainError: If tau is not strictly positive
        """
        return HeatKernelPair(HeatKernel.Spectral(params, tau, x, y, cfg),
                              HeatKernel.Closed(params, tau, x, y, cfg))

    @staticmethod
    def Spectral(params: MagneticParams,
                 tau: float,
                 x: PolarPoint,
                 y: PolarPoint,
                 cfg: TruncationConfig) -> complex:
        """
        Compute the heat kernel by its spectral sum over |k| <= k_max and m <= m_max.

        Args:
            params (MagneticParams object): Magnetic parameters
            tau (float)                   : Imaginary time, strictly positive
            x (PolarPoint object)         : First point
            y (PolarPoint object)         : Second point
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            complex: Kernel value

        Raises:
            DomainError: If tau is not strictly positive
        """
        HeatKernel.__CheckTau(tau)
        return HeatKernel.__SpectralSum(params, tau, x, y, cfg.KMax(), cfg.MMax(), False)

    @staticmethod
    def LowestLevel(params: MagneticParams,
                    tau: float,
                    x: PolarPoint,
                    y: PolarPoint,
                    cfg: TruncationConfig) -> complex:
        """
        Compute the contribution of the lowest Landau level (k + alpha < 0, m = 0, eigenvalue B0),
        which dominates the heat kernel at large tau.

        Args:
            params (MagneticParams object): Magnetic parameters
            tau (float)                   : Imaginary time, strictly positive
            x (PolarPoint object)         : First point
            y (PolarPoint object)         : Second point
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            complex: Contribution value

        Raises:
            DomainError: If tau is not strictly positive
        """
        HeatKernel.__CheckTau(tau)
        return HeatKernel.__SpectralSum(params, tau, x, y, cfg.KMax(), 0, True)

    @staticmethod
    def Closed(params: MagneticParams,
               tau: float,
               x: PolarPoint,
               y: PolarPoint,
               cfg: TruncationConfig) -> complex:
        """
        Compute the heat kernel by the per-k closed form
        exp(i * k * (theta1 - theta2)) * exp(-tau * B0 * (k + alpha)) * B0 / (4 * pi * sinh(B0 * tau))
        * exp(-B0 * (r1^2 + r2^2) * coth(B0 * tau) / 4) * I_{|k + alpha|}(B0 * r1 * r2 / (2 * sinh(B0 * tau))),
        summed over |k| <= k_max.

        Args:
            params (MagneticParams object): Magnetic parameters
            tau (float)                   : Imaginary time, strictly positive
            x (PolarPoint object)         : First point
            y (PolarPoint object)         : Second point
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            complex: Kernel value

        Raises:
            DomainError: If tau is not strictly positive
        """
        HeatKernel.__CheckTau(tau)

        alpha, b0 = params.Alpha(), params.B0()
        phase = b0 * tau
        k_values = np.arange(-cfg.KMax(), cfg.KMax() + 1)
        z = b0 * x.R() * y.R() / (2.0 * math.sinh(phase))
        bessel = BesselI.FluxOrders(alpha, k_values, np.asarray([z]), cfg.QuadNodes())[:, 0].real

        # Growing exp(-tau * B0 * (k + alpha)) and vanishing Bessel values combined in log space
        with np.errstate(divide="ignore"):
            log_terms = -phase * (k_values + alpha) + np.log(np.maximum(bessel, 0.0))
        log_common = (math.log(b0 / (4.0 * math.pi * math.sinh(phase)))
                      - 0.25 * b0 * (x.R() ** 2 + y.R() ** 2) / math.tanh(phase))
        angles = np.exp(1j * k_values * (x.Theta() - y.Theta()))
        return complex(np.sum(angles * np.exp(log_terms + log_common)))

    @staticmethod
    def __SpectralSum(params: MagneticParams,
                      tau: float,
                      x: PolarPoint,
                      y: PolarPoint,
                      k_max: int,
                      m_max: int,
                      lowest_level_only: bool) -> complex:
        alpha, b0 = params.Alpha(), params.B0()
        u = 0.5 * b0 * np.asarray([x.R() ** 2, y.R() ** 2])
        m_values = np.arange(m_max + 1)
        total = 0.0j
        for k in range(-k_max, k_max + 1):
            shifted = k + alpha
            if lowest_level_only and shifted > 0.0:
                continue
            table = Laguerre.FunctionTable(abs(shifted), m_max, u)
            eigenvalues = (2 * m_values + 1 + abs(shifted) + shifted) * b0
            radial = np.sum(np.exp(-tau * eigenvalues) * table[:, 0] * table[:, 1])
            total += np.exp(1j * k * (x.Theta() - y.Theta())) * radial
        return complex(b0 / (2.0 * math.pi) * total)

    @staticmethod
    def __CheckTau(tau: float) -> None:
        if not tau > 0.0 or not math.isfinite(tau):
            raise DomainError(f"Imaginary time shall be strictly positive ({tau})")

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

"""Module with the spectrum of the magnetic operator: eigenvalues, eigenfunctions and their norms."""

# Imports
import cmath
import logging
import math
from typing import List, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from py_magnetic_ab_flow.common import DomainError, MagneticParams, ModeIndex, PolarPoint
from py_magnetic_ab_flow.specfun import GammaFunction, GaussQuadrature, PkmPolynomial
from py_magnetic_ab_flow.utils import Utils


logger = logging.getLogger(__name__)


class MagneticSpectrumConst:
    """Class container for spectrum constants."""

    # Tolerance for testing membership of the multiplicity set
    MULTIPLICITY_TOL: float = 1e-9
    # Tolerance for detecting Landau levels
    LANDAU_LEVEL_TOL: float = 1e-9
    # Default number of Gauss-Laguerre nodes for norms
    DEF_NORM_NODES: int = 128
    # Default number of nodes for polar inner products
    DEF_INNER_RADIAL_NODES: int = 256
    DEF_INNER_ANGULAR_NODES: int = 32
    # Margin on u = B0 * r^2 / 2 beyond which eigenfunctions are negligible
    SUPPORT_U_MARGIN: float = 80.0


class MagneticSpectrum:
    """
    Class container for the spectrum of the operator with Aharonov-Bohm flux alpha and homogeneous field B0.
    Eigenvalues are (2m + 1 + |k + alpha| + k + alpha) * B0, with eigenfunctions
    V_{k,m}(r, theta) = r^nu * exp(-B0 * r^2 / 4) * P_{k,m}(B0 * r^2 / 2) * exp(i * k * theta), nu = |k + alpha|.
    """

    @staticmethod
    def FluxDistance(alpha: float) -> float:
        """
        Get the distance of the flux from the integers.

        Args:
            alpha (float): Magnetic flux

        Returns:
            float: Flux distance in [0, 1/2]
        """
        return Utils.DistanceToIntegers(alpha)

    @staticmethod
    def Eigenvalue(params: MagneticParams,
                   mode: ModeIndex) -> float:
        """
        Get the eigenvalue of a mode.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index

        Returns:
            float: Eigenvalue, strictly positive
        """
        shifted = mode.K() + params.Alpha()
        return (2 * mode.M() + 1 + abs(shifted) + shifted) * params.B0()

    @staticmethod
    def Multiplicity(params: MagneticParams,
                     lam: float,
                     k_window: int) -> int:
        """
        Count the angular momenta j in [-k_window, k_window] for which lam is an eigenvalue.
        Landau levels (see IsLandauLevel) are infinitely degenerate, so their count grows with the window.

        Args:
            params (MagneticParams object): Magnetic parameters
            lam (float)                   : Spectral value
            k_window (int)                : Scan window, at least 1

        Returns:
            int: Number of modes with eigenvalue lam in the window

        Raises:
            DomainError: If the window is not valid
        """
        if isinstance(k_window, bool) or not isinstance(k_window, int) or k_window < 1:
            raise DomainError(f"Multiplicity window shall be a positive integer ({k_window})")

        alpha, b0 = params.Alpha(), params.B0()
        count = 0
        for j in range(-k_window, k_window + 1):
            radial = (lam - (j + alpha) * b0) / (2.0 * b0) - (abs(j + alpha) + 1.0) / 2.0
            nearest = round(radial)
            if nearest >= 0 and abs(radial - nearest) <= MagneticSpectrumConst.MULTIPLICITY_TOL:
                count += 1
        return count

    @staticmethod
    def IsLandauLevel(params: MagneticParams,
                      lam: float) -> bool:
        """
        Get if a value is a Landau level (2n + 1) * B0, shared by all modes with k + alpha < 0.

        Args:
            params (MagneticParams object): Magnetic parameters
            lam (float)                   : Spectral value

        Returns:
            bool: True if Landau level, false otherwise
        """
        level = (lam / params.B0() - 1.0) / 2.0
        nearest = round(level)
        return nearest >= 0 and abs(level - nearest) <= MagneticSpectrumConst.LANDAU_LEVEL_TOL

    @staticmethod
    def Modes(params: MagneticParams,
              k_max: int,
              m_max: int) -> List[ModeIndex]:
        """
        Get the modes with |k| <= k_max and m <= m_max, sorted by eigenvalue, then k, then m.

        Args:
            params (MagneticParams object): Magnetic parameters
            k_max (int)                   : Angular momentum cutoff
            m_max (int)                   : Radial quantum number cutoff

        Returns:
            list[ModeIndex]: Sorted modes
        """
        modes = [ModeIndex(k, m) for k in range(-k_max, k_max + 1) for m in range(m_max + 1)]
        return sorted(modes, key=lambda mode: (MagneticSpectrum.Eigenvalue(params, mode), mode.K(), mode.M()))

    @staticmethod
    def RadialProfile(params: MagneticParams,
                      mode: ModeIndex,
                      r: float) -> float:
        """
        Get the radial part r^nu * exp(-B0 * r^2 / 4) * P_{k,m}(B0 * r^2 / 2) of an eigenfunction.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index
            r (float)                     : Radius, non-negative

        Returns:
            float: Radial profile value
        """
        nu = params.Order(mode.K())
        if r == 0.0:
            return 1.0 if nu == 0.0 else 0.0

        b0 = params.B0()
        poly = PkmPolynomial.Evaluate(mode.K(), mode.M(), params.Alpha(), 0.5 * b0 * r * r)
        return math.exp(nu * math.log(r) - 0.25 * b0 * r * r) * poly

    @staticmethod
    def RadialProfileDerivatives(params: MagneticParams,
                                 mode: ModeIndex,
                                 r: float) -> Tuple[float, float, float]:
        """
        Get the radial profile with its analytic first and second derivatives.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index
            r (float)                     : Radius, strictly positive

        Returns:
            tuple[float, float, float]: Profile, first and second derivative

        Raises:
            DomainError: If the radius is not strictly positive
        """
        if not r > 0.0:
            raise DomainError(f"Radius shall be strictly positive ({r})")

        g, g1, g2, log_d1, log_d2 = MagneticSpectrum.__ProfileFactors(params, mode, r)
        amp = math.exp(params.Order(mode.K()) * math.log(r) - 0.25 * params.B0() * r * r)
        return (amp * g,
                amp * (g1 + log_d1 * g),
                amp * (g2 + 2.0 * log_d1 * g1 + (log_d1 * log_d1 + log_d2) * g))

    @staticmethod
    def Eigenfunction(params: MagneticParams,
                      mode: ModeIndex,
                      p: PolarPoint) -> complex:
        """
        Evaluate an eigenfunction, not normalized.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index
            p (PolarPoint object)         : Point

        Returns:
            complex: Eigenfunction value
        """
        return MagneticSpectrum.RadialProfile(params, mode, p.R()) * cmath.exp(1j * mode.K() * p.Theta())

    @staticmethod
    def NormSquared(params: MagneticParams,
                    mode: ModeIndex) -> float:
        """
        Get the squared L2 norm of an eigenfunction,
        pi * (2/B0)^(1 + nu) * Gamma(1 + nu) / C(m + nu, m), computed in log space.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index

        Returns:
            float: Squared norm
        """
        nu = params.Order(mode.K())
        m = mode.M()
        log_norm = (math.log(math.pi)
                    + (1.0 + nu) * math.log(2.0 / params.B0())
                    + 2.0 * GammaFunction.Log(nu + 1.0)
                    + GammaFunction.Log(m + 1.0)
                    - GammaFunction.Log(m + nu + 1.0))
        return math.exp(log_norm)

    @staticmethod
    def NormSquaredQuadrature(params: MagneticParams,
                              mode: ModeIndex,
                              n_nodes: int = MagneticSpectrumConst.DEF_NORM_NODES) -> float:
        """
        Get the squared L2 norm of an eigenfunction by quadrature of 2 * pi * int |profile|^2 r dr.
        The substitution u = B0 * r^2 / 2 gives a generalized Gauss-Laguerre integral.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index
            n_nodes (int, optional)       : Number of quadrature nodes

        Returns:
            float: Squared norm
        """
        nu = params.Order(mode.K())
        b0 = params.B0()
        nodes, weights = GaussQuadrature.GenLaguerre(n_nodes, nu)
        poly = npoly.polyval(nodes, PkmPolynomial.Coefficients(mode.K(), mode.M(), params.Alpha()))
        return float(2.0 * math.pi / b0 * (2.0 / b0) ** nu * np.dot(weights, poly * poly))

    @staticmethod
    def EigenResidual(params: MagneticParams,
                      mode: ModeIndex,
                      r: float) -> float:
        """
        Get the residual of the radial eigen-equation
        -(f'' + f'/r) + ((k + alpha)^2 / r^2 + B0^2 * r^2 / 4 + (k + alpha) * B0) * f = lambda * f
        for the radial profile f, using analytic derivatives.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index
            r (float)                     : Radius, strictly positive

        Returns:
            float: Absolute residual

        Raises:
            DomainError: If the radius is not strictly positive
        """
        if not r > 0.0:
            raise DomainError(f"Radius shall be strictly positive ({r})")

        b0 = params.B0()
        shifted = mode.K() + params.Alpha()
        nu = abs(shifted)
        lam = MagneticSpectrum.Eigenvalue(params, mode)

        g, g1, g2, log_d1, log_d2 = MagneticSpectrum.__ProfileFactors(params, mode, r)
        laplacian = (g2 + 2.0 * log_d1 * g1 + (log_d1 * log_d1 + log_d2) * g
                     + (g1 + log_d1 * g) / r)
        potential = shifted * shifted / (r * r) + 0.25 * b0 * b0 * r * r + shifted * b0
        amp = math.exp(nu * math.log(r) - 0.25 * b0 * r * r)
        return abs(amp * (-laplacian + (potential - lam) * g))

    @staticmethod
    def InnerProduct(params: MagneticParams,
                     mode_a: ModeIndex,
                     mode_b: ModeIndex,
                     radial_nodes: int = MagneticSpectrumConst.DEF_INNER_RADIAL_NODES,
                     angular_nodes: int = MagneticSpectrumConst.DEF_INNER_ANGULAR_NODES) -> complex:
        """
        Get int V_a * conj(V_b) dx by polar quadrature: Gauss-Legendre in r over the numerical support
        and the trapezoid rule in theta.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode_a (ModeIndex object)     : First mode
            mode_b (ModeIndex object)     : Second mode
            radial_nodes (int, optional)  : Number of radial nodes
            angular_nodes (int, optional) : Number of angular nodes

        Returns:
            complex: Inner product
        """
        r_max = max(MagneticSpectrum.SupportRadius(params, mode_a), MagneticSpectrum.SupportRadius(params, mode_b))
        radii, weights = GaussQuadrature.LegendreInterval(radial_nodes, 0.0, r_max)
        profile_a = np.array([MagneticSpectrum.RadialProfile(params, mode_a, r) for r in radii])
        profile_b = np.array([MagneticSpectrum.RadialProfile(params, mode_b, r) for r in radii])

        angles = 2.0 * math.pi * np.arange(angular_nodes) / angular_nodes
        angular = 2.0 * math.pi * np.mean(np.exp(1j * (mode_a.K() - mode_b.K()) * angles))
        return complex(angular * np.sum(weights * radii * profile_a * profile_b))

    @staticmethod
    def SupportRadius(params: MagneticParams,
                      mode: ModeIndex) -> float:
        """
        Get a radius beyond which an eigenfunction is negligible in double precision.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index

        Returns:
            float: Support radius
        """
        u_max = 2.0 * (2 * mode.M() + params.Order(mode.K())) + MagneticSpectrumConst.SUPPORT_U_MARGIN
        return math.sqrt(2.0 * u_max / params.B0())

    @staticmethod
    def __ProfileFactors(params: MagneticParams,
                         mode: ModeIndex,
                         r: float) -> Tuple[float, float, float, float, float]:
        # Polynomial part g(r) = P(B0 * r^2 / 2) with its derivatives, and the first two derivatives
        # of the logarithm of the amplitude r^nu * exp(-B0 * r^2 / 4)
        b0 = params.B0()
        nu = params.Order(mode.K())
        poly, poly_d1, poly_d2 = PkmPolynomial.EvaluateWithDerivatives(mode.K(), mode.M(), params.Alpha(),
                                                                       np.asarray(0.5 * b0 * r * r))
        g = float(poly)
        g1 = float(poly_d1) * b0 * r
        g2 = float(poly_d2) * (b0 * r) ** 2 + float(poly_d1) * b0
        log_d1 = nu / r - 0.5 * b0 * r
        log_d2 = -nu / (r * r) - 0.5 * b0
        return g, g1, g2, log_d1, log_d2

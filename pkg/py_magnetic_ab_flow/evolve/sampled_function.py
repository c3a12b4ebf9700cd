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

"""Module with functions of the plane sampled in polar coordinates."""

# Imports
import math
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from py_magnetic_ab_flow.common import DomainError, MagneticParams, ModeIndex, PolarPoint
from py_magnetic_ab_flow.specfun import GaussQuadrature
from py_magnetic_ab_flow.spectrum import MagneticSpectrum


PolarFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]


class SampledFunctionConst:
    """Class container for sampled function constants."""

    # Gaussians are negligible beyond exp(-GAUSS_SUPPORT_EXP) of their peak
    GAUSS_SUPPORT_EXP: float = 40.0
    # Default quadrature sizes for norms
    DEF_RADIAL_NODES: int = 256
    DEF_ANGULAR_NODES: int = 64


class SampledFunction:
    """
    Sampled function class.
    It wraps a function f(r, theta) of the plane, vectorized over arrays, negligible beyond a support radius.
    """

    m_fct: PolarFunction
    m_support_radius: float
    m_spread_radius_fct: Optional[Callable[[float], float]]
    m_exact_norm_sq: Optional[float]

    def __init__(self,
                 fct: PolarFunction,
                 support_radius: float,
                 spread_radius_fct: Optional[Callable[[float], float]] = None,
                 exact_norm_sq: Optional[float] = None) -> None:
        """
        Construct class.

        Args:
            fct (function)                     : Function of (r, theta) arrays, returning complex values
            support_radius (float)             : Radius beyond which the function is negligible
            spread_radius_fct (function, opt)  : Radius containing the function evolved with field B0, given B0
            exact_norm_sq (float, optional)    : Exact squared L2 norm, if known

        Raises:
            DomainError: If the support radius is not strictly positive
        """
        if not support_radius > 0.0 or not math.isfinite(support_radius):
            raise DomainError(f"Support radius shall be strictly positive ({support_radius})")
        self.m_fct = fct
        self.m_support_radius = float(support_radius)
        self.m_spread_radius_fct = spread_radius_fct
        self.m_exact_norm_sq = exact_norm_sq

    def Evaluate(self,
                 p: PolarPoint) -> complex:
        """
        Evaluate the function at a point.

        Args:
            p (PolarPoint object): Point

        Returns:
            complex: Function value
        """
        return complex(self.EvaluatePoints(np.asarray([p.R()]), np.asarray([p.Theta()]))[0])

    def EvaluatePoints(self,
                       r: np.ndarray,
                       theta: np.ndarray) -> np.ndarray:
        """
        Evaluate the function at points given by arrays of equal shape.

        Args:
            r (numpy.ndarray)    : Radii
            theta (numpy.ndarray): Angles

        Returns:
            numpy.ndarray: Function values
        """
        return np.asarray(self.m_fct(np.asarray(r, dtype=float), np.asarray(theta, dtype=float)), dtype=complex)

    def EvaluateGrid(self,
                     r: np.ndarray,
                     theta: np.ndarray) -> np.ndarray:
        """
        Evaluate the function on the tensor grid of radii and angles.

        Args:
            r (numpy.ndarray)    : Radii
            theta (numpy.ndarray): Angles

        Returns:
            numpy.ndarray: Function values of shape (len(r), len(theta))
        """
        r_grid, theta_grid = np.meshgrid(r, theta, indexing="ij")
        return self.EvaluatePoints(r_grid, theta_grid)

    def SupportRadius(self) -> float:
        return self.m_support_radius

    def SpreadRadius(self,
                     b0: float) -> Optional[float]:
        """
        Get a radius containing the function at all times of the flow with field B0, if known.

        Args:
            b0 (float): Field strength

        Returns:
            float: Spread radius
            None: If not known
        """
        return None if self.m_spread_radius_fct is None else self.m_spread_radius_fct(b0)

    def ExactNormSquared(self) -> Optional[float]:
        return self.m_exact_norm_sq

    def NormByQuadrature(self,
                         radial_nodes: int = SampledFunctionConst.DEF_RADIAL_NODES,
                         angular_nodes: int = SampledFunctionConst.DEF_ANGULAR_NODES) -> float:
        """
        Get the squared L2 norm by polar quadrature over the support.

        Args:
            radial_nodes (int, optional) : Number of Gauss-Legendre radial nodes
            angular_nodes (int, optional): Number of trapezoid angular nodes

        Returns:
            float: Squared norm
        """
        radii, weights = GaussQuadrature.LegendreInterval(radial_nodes, 0.0, self.m_support_radius)
        angles = 2.0 * math.pi * np.arange(angular_nodes) / angular_nodes
        values = self.EvaluateGrid(radii, angles)
        return float(2.0 * math.pi * np.sum(weights * radii * np.mean(np.abs(values) ** 2, axis=1)))


class SampledFunctionFactory:
    """Class for creating sampled functions."""

    @staticmethod
    def CreateGaussian(a: float,
                       x0: Tuple[float, float] = (0.0, 0.0)) -> SampledFunction:
        """
        Create the Gaussian exp(-a * |x - x0|^2), whose squared L2 norm is pi / (2a).

        Args:
            a (float)                       : Inverse squared width, strictly positive
            x0 (tuple[float, float], opt)   : Cartesian center

        Returns:
            SampledFunction object: SampledFunction object

        Raises:
            DomainError: If the width parameter is not strictly positive
        """
        if not a > 0.0 or not math.isfinite(a):
            raise DomainError(f"Gaussian parameter shall be strictly positive ({a})")

        cx, cy = float(x0[0]), float(x0[1])
        center = math.hypot(cx, cy)
        exp_lim = SampledFunctionConst.GAUSS_SUPPORT_EXP

        def gaussian(r: np.ndarray, theta: np.ndarray) -> np.ndarray:
            dist_sq = r * r + center * center - 2.0 * r * (cx * np.cos(theta) + cy * np.sin(theta))
            return np.exp(-a * dist_sq)

        def spread_radius(b0: float) -> float:
            # Width parameter oscillates between a and B0^2 / (16a), the center stays within |x0| of the origin
            a_min = min(a, b0 * b0 / (16.0 * a))
            return center + math.sqrt(exp_lim / a_min)

        return SampledFunction(gaussian,
                               center + math.sqrt(exp_lim / a),
                               spread_radius,
                               math.pi / (2.0 * a))

    @staticmethod
    def CreateEigenfunction(params: MagneticParams,
                            mode: ModeIndex,
                            normalized: bool = True) -> SampledFunction:
        """
        Create an eigenfunction of the magnetic operator.

        Args:
            params (MagneticParams object): Magnetic parameters
            mode (ModeIndex object)       : Mode index
            normalized (bool, optional)   : True for unit norm

        Returns:
            SampledFunction object: SampledFunction object
        """
        norm_sq = MagneticSpectrum.NormSquared(params, mode)
        scale = 1.0 / math.sqrt(norm_sq) if normalized else 1.0
        support = MagneticSpectrum.SupportRadius(params, mode)

        def eigenfunction(r: np.ndarray, theta: np.ndarray) -> np.ndarray:
            unique_r, inverse = np.unique(r, return_inverse=True)
            profile = np.array([MagneticSpectrum.RadialProfile(params, mode, float(radius)) for radius in unique_r])
            return scale * profile[inverse].reshape(r.shape) * np.exp(1j * mode.K() * theta)

        return SampledFunction(eigenfunction,
                               support,
                               lambda b0: support,
                               1.0 if normalized else norm_sq)

    @staticmethod
    def CreateFromGrid(r_grid: np.ndarray,
                       theta_grid: np.ndarray,
                       values: np.ndarray,
                       spread_radius: Optional[float] = None) -> SampledFunction:
        """
        Create a function from samples on a polar tensor grid, bilinear in (r, theta), periodic in theta
        and zero beyond the last radius.

        Args:
            r_grid (numpy.ndarray)         : Increasing radii
            theta_grid (numpy.ndarray)     : Increasing angles in [0, 2*pi)
            values (numpy.ndarray)         : Values of shape (len(r_grid), len(theta_grid))
            spread_radius (float, optional): Radius containing the evolved function, if known

        Returns:
            SampledFunction object: SampledFunction object

        Raises:
            DomainError: If the grid is not valid
        """
        r_grid = np.asarray(r_grid, dtype=float)
        theta_grid = np.asarray(theta_grid, dtype=float)
        values = np.asarray(values, dtype=complex)
        if values.shape != (r_grid.size, theta_grid.size):
            raise DomainError(f"Grid values shape {values.shape} does not match the grid")
        if r_grid.size < 2 or np.any(np.diff(r_grid) <= 0.0) or r_grid[0] < 0.0:
            raise DomainError("Grid radii shall be non-negative and increasing")
        if (theta_grid.size < 2 or np.any(np.diff(theta_grid) <= 0.0)
                or theta_grid[0] < 0.0 or theta_grid[-1] >= 2.0 * math.pi):
            raise DomainError("Grid angles shall be increasing in [0, 2*pi)")

        # Close the angular period
        theta_ext = np.append(theta_grid, theta_grid[0] + 2.0 * math.pi)
        values_ext = np.concatenate([values, values[:, :1]], axis=1)
        interp_re = RegularGridInterpolator((r_grid, theta_ext), values_ext.real, bounds_error=False, fill_value=0.0)
        interp_im = RegularGridInterpolator((r_grid, theta_ext), values_ext.imag, bounds_error=False, fill_value=0.0)

        def interpolated(r: np.ndarray, theta: np.ndarray) -> np.ndarray:
            reduced = np.mod(theta - theta_grid[0], 2.0 * math.pi) + theta_grid[0]
            points = np.stack([r.ravel(), reduced.ravel()], axis=-1)
            return (interp_re(points) + 1j * interp_im(points)).reshape(r.shape)

        return SampledFunction(interpolated,
                               float(r_grid[-1]),
                               None if spread_radius is None else (lambda b0: spread_radius))

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

"""Module with the Schrodinger evolution, by spectral expansion and by kernel quadrature."""

# Imports
import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from py_magnetic_ab_flow.common import (
    AccuracyError, CutoffInsufficientError, DomainError, MagneticParams, PolarPoint, SingularTime, TruncationConfig
)
from py_magnetic_ab_flow.evolve.sampled_function import SampledFunction
from py_magnetic_ab_flow.evolve.spectral_coefficients import SpectralCoefficients
from py_magnetic_ab_flow.kernels import BesselSeriesKernel, PrefactorCalibration
from py_magnetic_ab_flow.specfun import BesselI, GaussQuadrature, Laguerre


logger = logging.getLogger(__name__)


class SchrodingerEvolutionConst:
    """Class container for evolution constants."""

    # Maximum relative Parseval defect accepted by an expansion
    PARSEVAL_TOL: float = 1e-6
    # Margin on u = B0 * r^2 / 2 of the numerical support of the truncated eigenbasis
    SPECTRAL_U_MARGIN: float = 40.0
    # Radial nodes of the kernel route per radian of kernel oscillation, and fixed margin
    NODES_PER_PHASE: float = 0.5
    NODES_MARGIN: int = 32
    MAX_RADIAL_NODES: int = 4096
    # Output radii processed together by the kernel route
    OUT_CHUNK_SIZE: int = 64


class SchrodingerEvolution:
    """
    Class container for the evolution u(t) = exp(-i * t * H) f.
    The spectral route expands f on the normalized eigenfunctions and multiplies each coefficient by
    exp(-i * t * lambda). The kernel route integrates f against the calibrated Bessel-series kernel,
    angle by angle in Fourier space.
    """

    #
    # Spectral route
    #

    @staticmethod
    def Expand(f: SampledFunction,
               params: MagneticParams,
               cfg: TruncationConfig,
               parseval_tol: float = SchrodingerEvolutionConst.PARSEVAL_TOL) -> SpectralCoefficients:
        """
        Expand a function on the normalized eigenfunctions with |k| <= k_max and m <= m_max.
        Functions not vanishing on the flux line converge slowly on the k = 0 branch, whose eigenfunctions
        behave like r^|alpha| at the origin.

        Args:
            f (SampledFunction object)    : Function
            params (MagneticParams object): Magnetic parameters
            cfg (TruncationConfig object) : Truncation configuration
            parseval_tol (float, optional): Maximum relative Parseval defect, 1e-6 by default

        Returns:
            SpectralCoefficients object: Coefficients

        Raises:
            DomainError: If the function samples are not finite
            CutoffInsufficientError: If the coefficients miss more than the tolerated fraction of the squared norm
        """
        k_max, m_max = cfg.KMax(), cfg.MMax()
        b0 = params.B0()
        n_theta = max(cfg.EvolveAngularNodes(), 2 * k_max + 2)
        n_r = max(2 * cfg.RadialNodes(), 2 * m_max + 64)

        radii, weights = GaussQuadrature.LegendreInterval(n_r, 0.0, f.SupportRadius())
        angles = 2.0 * math.pi * np.arange(n_theta) / n_theta
        samples = f.EvaluateGrid(radii, angles)
        if not np.all(np.isfinite(samples)):
            raise DomainError("Function samples shall be finite")
        modes = np.fft.fft(samples, axis=1) / n_theta

        norm_sq = float(2.0 * math.pi * np.sum(weights * radii * np.sum(np.abs(modes) ** 2, axis=1)))
        coeffs = np.zeros((2 * k_max + 1, m_max + 1), dtype=complex)
        u = 0.5 * b0 * radii ** 2
        base = 2.0 * math.pi * math.sqrt(b0 / (2.0 * math.pi)) * weights * radii
        for k in range(-k_max, k_max + 1):
            table = Laguerre.FunctionTable(params.Order(k), m_max, u)
            coeffs[k + k_max] = table @ (base * modes[:, k % n_theta])

        if norm_sq > 0.0:
            defect = abs(norm_sq - float(np.sum(np.abs(coeffs) ** 2))) / norm_sq
            logger.debug("Expansion with k_max=%d, m_max=%d: Parseval defect %g", k_max, m_max, defect)
            if defect > parseval_tol:
                raise CutoffInsufficientError(
                    f"Spectral cutoff (k_max={k_max}, m_max={m_max}) misses a {defect} fraction of the squared norm",
                    defect
                )
        return SpectralCoefficients(params, coeffs)

    @staticmethod
    def EvolveSpectral(coeffs: SpectralCoefficients,
                       t: float) -> SpectralCoefficients:
        """
        Evolve coefficients, multiplying each one by exp(-i * t * lambda).

        Args:
            coeffs (SpectralCoefficients object): Coefficients
            t (float)                           : Time, any real value

        Returns:
            SpectralCoefficients object: Evolved coefficients
        """
        phases = np.exp(-1j * t * coeffs.Eigenvalues())
        return SpectralCoefficients(coeffs.Params(), coeffs.NormalizedArray() * phases)

    @staticmethod
    def SpectralRadialModes(coeffs: SpectralCoefficients,
                            r: np.ndarray,
                            k_values: Sequence[int]) -> np.ndarray:
        """
        Get the angular Fourier modes of the function represented by coefficients.

        Args:
            coeffs (SpectralCoefficients object): Coefficients
            r (numpy.ndarray)                   : Radii
            k_values (list[int])                : Angular momenta

        Returns:
            numpy.ndarray: Modes of shape (len(k_values), len(r)), zero for |k| > k_max
        """
        params = coeffs.Params()
        b0 = params.B0()
        r = np.atleast_1d(np.asarray(r, dtype=float))
        u = 0.5 * b0 * r ** 2
        array = coeffs.NormalizedArray()
        k_max, m_max = coeffs.KMax(), coeffs.MMax()

        modes = np.zeros((len(k_values), r.size), dtype=complex)
        for i, k in enumerate(k_values):
            if abs(k) <= k_max:
                table = Laguerre.FunctionTable(params.Order(int(k)), m_max, u)
                modes[i] = array[k + k_max] @ table
        return math.sqrt(b0 / (2.0 * math.pi)) * modes

    @staticmethod
    def Reconstruct(coeffs: SpectralCoefficients,
                    p: PolarPoint) -> complex:
        """
        Evaluate the function represented by coefficients at a point.

        Args:
            coeffs (SpectralCoefficients object): Coefficients
            p (PolarPoint object)               : Point

        Returns:
            complex: Function value
        """
        return complex(SchrodingerEvolution.ReconstructPoints(coeffs, [p])[0])

    @staticmethod
    def ReconstructPoints(coeffs: SpectralCoefficients,
                          points: Sequence[PolarPoint]) -> np.ndarray:
        """
        Evaluate the function represented by coefficients at some points.

        Args:
            coeffs (SpectralCoefficients object): Coefficients
            points (list[PolarPoint])           : Points

        Returns:
            numpy.ndarray: Function values
        """
        k_values = np.arange(-coeffs.KMax(), coeffs.KMax() + 1)
        radii = np.asarray([p.R() for p in points])
        angles = np.asarray([p.Theta() for p in points])
        modes = SchrodingerEvolution.SpectralRadialModes(coeffs, radii, k_values)
        return np.sum(np.exp(1j * np.outer(k_values, angles)) * modes, axis=0)

    @staticmethod
    def Synthesize(coeffs: SpectralCoefficients) -> SampledFunction:
        """
        Create the function represented by coefficients.

        Args:
            coeffs (SpectralCoefficients object): Coefficients

        Returns:
            SampledFunction object: SampledFunction object
        """
        k_values = np.arange(-coeffs.KMax(), coeffs.KMax() + 1)
        radius = SchrodingerEvolution.BasisRadius(coeffs.Params(), coeffs.KMax(), coeffs.MMax())

        def synthesized(r: np.ndarray, theta: np.ndarray) -> np.ndarray:
            modes = SchrodingerEvolution.SpectralRadialModes(coeffs, r.ravel(), k_values)
            values = np.sum(np.exp(1j * np.outer(k_values, theta.ravel())) * modes, axis=0)
            return values.reshape(r.shape)

        # The flow keeps the function within the span of the same eigenfunctions
        return SampledFunction(synthesized, radius, lambda b0: radius, coeffs.L2NormSquared())

    #
    # Kernel route
    #

    @staticmethod
    def EvolveKernel(f: SampledFunction,
                     params: MagneticParams,
                     t: float,
                     out_points: Sequence[PolarPoint],
                     cfg: TruncationConfig,
                     prefactor_scale: Optional[complex] = None) -> np.ndarray:
        """
        Evolve a function by quadrature against the calibrated kernel and evaluate it at some points.

        Args:
            f (SampledFunction object)         : Function
            params (MagneticParams object)     : Magnetic parameters
            t (float)                          : Time
            out_points (list[PolarPoint])      : Output points
            cfg (TruncationConfig object)      : Truncation configuration
            prefactor_scale (complex, optional): Kernel calibration constant, the calibrated one if not specified

        Returns:
            numpy.ndarray: Evolved function values

        Raises:
            SingularTimeError: If the time is too close to a singular time
            AccuracyError: If the kernel oscillation cannot be resolved
        """
        SingularTime.Check(params.B0(), t, cfg.TimeGuard())
        if prefactor_scale is None:
            prefactor_scale = PrefactorCalibration.Calibrate(params, cfg)

        radii = np.asarray([p.R() for p in out_points])
        angles = np.asarray([p.Theta() for p in out_points])
        k_values, modes = SchrodingerEvolution.KernelRadialModes(f, params, t, radii, cfg, prefactor_scale)
        return np.sum(np.exp(1j * np.outer(k_values, angles)) * modes, axis=0)

    @staticmethod
    def KernelRadialModes(f: SampledFunction,
                          params: MagneticParams,
                          t: float,
                          r_out: np.ndarray,
                          cfg: TruncationConfig,
                          prefactor_scale: complex) -> Tuple[np.ndarray, np.ndarray]:
        """
        Get the angular Fourier modes of the function evolved by the kernel route.
        The mode k at radius r1 is 2*pi * int c_k(r1, r2) * f_k(r2) * r2 dr2, where f_k are the angular
        modes of f and c_k the k-th term of the kernel series.

        Args:
            f (SampledFunction object)    : Function
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            r_out (numpy.ndarray)         : Output radii
            cfg (TruncationConfig object) : Truncation configuration
            prefactor_scale (complex)     : Kernel calibration constant

        Returns:
            tuple[numpy.ndarray, numpy.ndarray]: Angular momenta and modes of shape (len(k_values), len(r_out))

        Raises:
            SingularTimeError: If the time is too close to a singular time
            AccuracyError: If the kernel oscillation cannot be resolved
        """
        b0 = params.B0()
        SingularTime.Check(b0, t, cfg.TimeGuard())

        r_out = np.atleast_1d(np.asarray(r_out, dtype=float))
        n_theta = cfg.EvolveAngularNodes()
        half = (n_theta - 1) // 2
        k_values = np.arange(-half, half + 1)

        support = f.SupportRadius()
        n_r = SchrodingerEvolution.KernelRadialNodes(params, t, support, float(np.max(r_out, initial=0.0)), cfg)
        radii, weights = GaussQuadrature.LegendreInterval(n_r, 0.0, support)
        angles = 2.0 * math.pi * np.arange(n_theta) / n_theta
        f_modes = (np.fft.fft(f.EvaluateGrid(radii, angles), axis=1) / n_theta)[:, k_values % n_theta]
        integrand = (weights * radii * BesselSeriesKernel.GaussianFactor(params, t, radii ** 2))[:, None] * f_modes

        radial = np.zeros((k_values.size, r_out.size), dtype=complex)
        chunk = SchrodingerEvolutionConst.OUT_CHUNK_SIZE
        for start in range(0, r_out.size, chunk):
            r_chunk = r_out[start:start + chunk]
            w = BesselSeriesKernel.BesselArgument(params, t, np.outer(r_chunk, radii))
            bessel = BesselI.FluxOrders(params.Alpha(), k_values, w, cfg.QuadNodes())
            bessel = bessel.reshape(k_values.size, r_chunk.size, radii.size)
            radial[:, start:start + chunk] = np.einsum("koi,ik->ko", bessel, integrand)

        prefactor = 2.0 * math.pi * prefactor_scale * BesselSeriesKernel.RawPrefactor(params, t)
        phases = np.exp(-1j * k_values * b0 * t)[:, None]
        out_factor = BesselSeriesKernel.GaussianFactor(params, t, r_out ** 2)[None, :]
        return k_values, prefactor * phases * out_factor * radial

    @staticmethod
    def KernelRadialNodes(params: MagneticParams,
                          t: float,
                          support: float,
                          r_out_max: float,
                          cfg: TruncationConfig) -> int:
        """
        Get the number of radial nodes resolving the kernel oscillation over the input support.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            support (float)               : Input support radius
            r_out_max (float)             : Largest output radius
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            int: Number of nodes

        Raises:
            AccuracyError: If the number of nodes exceeds the maximum one
        """
        b0 = params.B0()
        sin_phase = abs(math.sin(b0 * t))
        cot_phase = abs(math.cos(b0 * t)) / sin_phase
        phase_total = b0 * support * (0.5 * r_out_max / sin_phase + 0.25 * cot_phase * support)
        n_nodes = max(cfg.EvolveRadialNodes(),
                      int(math.ceil(SchrodingerEvolutionConst.NODES_PER_PHASE * phase_total))
                      + SchrodingerEvolutionConst.NODES_MARGIN)
        if n_nodes > SchrodingerEvolutionConst.MAX_RADIAL_NODES:
            raise AccuracyError(
                f"Kernel oscillation at t={t} needs {n_nodes} radial nodes, more than the maximum "
                f"{SchrodingerEvolutionConst.MAX_RADIAL_NODES}"
            )
        return n_nodes

    @staticmethod
    def KernelEvolvedNormSquared(f: SampledFunction,
                                 params: MagneticParams,
                                 t: float,
                                 cfg: TruncationConfig,
                                 prefactor_scale: Optional[complex] = None) -> float:
        """
        Get the squared L2 norm of the function evolved by the kernel route.
        The angular integral is exact by Parseval, the radial one uses Gauss-Legendre over the evolved radius.

        Args:
            f (SampledFunction object)         : Function
            params (MagneticParams object)     : Magnetic parameters
            t (float)                          : Time
            cfg (TruncationConfig object)      : Truncation configuration
            prefactor_scale (complex, optional): Kernel calibration constant, the calibrated one if not specified

        Returns:
            float: Squared norm

        Raises:
            SingularTimeError: If the time is too close to a singular time
            AccuracyError: If the kernel oscillation cannot be resolved
        """
        if prefactor_scale is None:
            prefactor_scale = PrefactorCalibration.Calibrate(params, cfg)
        radii, weights = SchrodingerEvolution.OutputRadialRule(f, params, cfg)
        _, modes = SchrodingerEvolution.KernelRadialModes(f, params, t, radii, cfg, prefactor_scale)
        return float(2.0 * math.pi * np.sum(weights * radii * np.sum(np.abs(modes) ** 2, axis=0)))

    @staticmethod
    def OutputRadialRule(f: SampledFunction,
                         params: MagneticParams,
                         cfg: TruncationConfig) -> Tuple[np.ndarray, np.ndarray]:
        """
        Get the Gauss-Legendre rule over the radius containing the evolved function.

        Args:
            f (SampledFunction object)    : Function
            params (MagneticParams object): Magnetic parameters
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            tuple[numpy.ndarray, numpy.ndarray]: Nodes and weights
        """
        return GaussQuadrature.LegendreInterval(2 * cfg.EvolveRadialNodes(),
                                                0.0,
                                                SchrodingerEvolution.EvolvedRadius(f, params, cfg))

    @staticmethod
    def EvolvedRadius(f: SampledFunction,
                      params: MagneticParams,
                      cfg: TruncationConfig) -> float:
        """
        Get a radius containing the evolved function: the spread radius of the function if known,
        the numerical support of the truncated eigenbasis otherwise.

        Args:
            f (SampledFunction object)    : Function
            params (MagneticParams object): Magnetic parameters
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            float: Radius
        """
        spread = f.SpreadRadius(params.B0())
        if spread is not None:
            return spread
        return SchrodingerEvolution.BasisRadius(params, cfg.KMax(), cfg.MMax())

    @staticmethod
    def BasisRadius(params: MagneticParams,
                    k_max: int,
                    m_max: int) -> float:
        """
        Get the numerical support radius of the eigenfunctions with |k| <= k_max and m <= m_max.

        Args:
            params (MagneticParams object): Magnetic parameters
            k_max (int)                   : Angular momentum cutoff
            m_max (int)                   : Radial cutoff

        Returns:
            float: Radius
        """
        u_max = 4 * m_max + 2 * k_max + SchrodingerEvolutionConst.SPECTRAL_U_MARGIN
        return math.sqrt(2.0 * u_max / params.B0())

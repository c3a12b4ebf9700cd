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

"""Module with the verification of the weighted time-decay estimate of the propagator."""

# Imports
import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from py_magnetic_ab_flow.common import (
    DomainError, MagneticParams, ResultTable, SingularTime, TruncationConfig
)
from py_magnetic_ab_flow.decay.decay_grid import DecayGrid
from py_magnetic_ab_flow.decay.decay_scan_row import DecayScanRow
from py_magnetic_ab_flow.decay.omega_region import OmegaRegion
from py_magnetic_ab_flow.kernels import BesselSeriesKernel, PrefactorCalibration
from py_magnetic_ab_flow.specfun import GammaFunction


logger = logging.getLogger(__name__)


class DecayVerifierConst:
    """Class container for decay verifier constants."""

    # Relative slack of the pointwise chaining inequality
    CHAINING_REL_SLACK: float = 1e-9
    # Tolerance on sigma exceeding mu
    SIGMA_TOL: float = 1e-12
    # Small-time table columns
    SMALL_TIME_COLUMNS: Tuple[str, ...] = (
        "t", "sup_weighted", "sin_factor", "linear_factor", "factor_ratio", "scaled_sup"
    )


class DecayVerifier:
    """
    Class container for the decay verification.
    With z = B0 * |x| * |y| / (2 * |sin(B0 * t)|), the weighted angular series z^-mu * |S| is bounded on
    Omega1 by its grid supremum K1 and on Omega2 by the supremum K2 of the Bessel majorant series, so
    (|x| * |y|)^-mu * |S| <= max(K1, K2) * (B0 / (2 * |sin(B0 * t)|))^mu everywhere.
    """

    @staticmethod
    def WeightedSup(params: MagneticParams,
                    t: float,
                    sigma: float,
                    grid: DecayGrid,
                    cfg: TruncationConfig,
                    prefactor_scale: Optional[complex] = None) -> DecayScanRow:
        """
        Compute the grid supremum of |x|^-sigma * |K(t, x, y)| * |y|^-sigma.

        Args:
            params (MagneticParams object)     : Magnetic parameters
            t (float)                          : Time
            sigma (float)                      : Weight exponent in [0, mu]
            grid (DecayGrid object)            : Sample grid
            cfg (TruncationConfig object)      : Truncation configuration
            prefactor_scale (complex, optional): Kernel calibration constant, the calibrated one if not specified

        Returns:
            DecayScanRow object: Scan row

        Raises:
            SingularTimeError: If the time is too close to a singular time
            DomainError: If sigma is not valid or the grid touches the origin with sigma > 0
            TruncationError: If no angular cutoff meets the tail tolerance
        """
        SingularTime.Check(params.B0(), t, cfg.TimeGuard())
        DecayVerifier.__CheckSigma(params, sigma)
        if sigma > 0.0 and grid.RMin() == 0.0:
            raise DomainError(f"Grid shall not touch the origin with a strictly positive weight exponent ({sigma})")
        if prefactor_scale is None:
            prefactor_scale = PrefactorCalibration.Calibrate(params, cfg)

        products = grid.Products()
        weights = np.ones(products.size)
        positive = products > 0.0
        weights[positive] = products[positive] ** (-sigma)

        abs_prefactor = abs(prefactor_scale * BesselSeriesKernel.RawPrefactor(params, t))
        abs_series, k_used = DecayVerifier.__SeriesTable(params, t, grid, cfg, abs_prefactor * weights[-1])
        sup_weighted = float(abs_prefactor * np.max(abs_series * weights[None, :]))

        logger.debug("Weighted supremum at t=%g, sigma=%g: %g (k_max %d)", t, sigma, sup_weighted, k_used)
        return DecayScanRow(params, t, sigma, sup_weighted, grid.NumPoints(), k_used)

    @staticmethod
    def K1(params: MagneticParams,
           t: float,
           grid: DecayGrid,
           cfg: TruncationConfig) -> float:
        """
        Compute the supremum over the Omega1 grid points of z^-mu * |S|.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            grid (DecayGrid object)       : Sample grid
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            float: K1, zero if no grid point lies in Omega1

        Raises:
            SingularTimeError: If the time is too close to a singular time
            TruncationError: If no angular cutoff meets the tail tolerance
        """
        SingularTime.Check(params.B0(), t, cfg.TimeGuard())
        products = grid.Products()
        mask = OmegaRegion.Omega1Mask(params, t, products)
        if not np.any(mask):
            return 0.0
        abs_series, _ = DecayVerifier.__SeriesTable(params, t, grid, cfg, 1.0)
        z = DecayVerifier.ReducedProducts(params, t, products[mask])
        return float(np.max(abs_series[:, mask] * z[None, :] ** (-params.Mu())))

    @staticmethod
    def K2(params: MagneticParams,
           t: float,
           grid: DecayGrid,
           cfg: TruncationConfig,
           k_max: Optional[int] = None) -> float:
        """
        Compute the supremum over the Omega2 grid points of the majorant series
        sum_{|k| <= k_max} z^(nu_k - mu) / (2^nu_k * Gamma(nu_k + 1)), with nu_k = |k + alpha|.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            grid (DecayGrid object)       : Sample grid
            cfg (TruncationConfig object) : Truncation configuration
            k_max (int, optional)         : Angular momentum cutoff, the configured one if not specified

        Returns:
            float: K2, zero if no grid point lies in Omega2

        Raises:
            SingularTimeError: If the time is too close to a singular time
        """
        SingularTime.Check(params.B0(), t, cfg.TimeGuard())
        products = grid.Products()
        mask = ~OmegaRegion.Omega1Mask(params, t, products)
        if not np.any(mask):
            return 0.0
        z = DecayVerifier.ReducedProducts(params, t, products[mask])
        return float(np.max(DecayVerifier.Majorant(params, z, cfg.KMax() if k_max is None else k_max)))

    @staticmethod
    def Majorant(params: MagneticParams,
                 z: np.ndarray,
                 k_max: int) -> np.ndarray:
        """
        Evaluate the majorant series sum_{|k| <= k_max} z^(nu_k - mu) / (2^nu_k * Gamma(nu_k + 1)).
        Every exponent is non-negative, the one of the order closest to zero being zero.

        Args:
            params (MagneticParams object): Magnetic parameters
            z (numpy.ndarray)             : Reduced products
            k_max (int)                   : Angular momentum cutoff

        Returns:
            numpy.ndarray: Majorant values
        """
        z = np.asarray(z, dtype=float)
        mu = params.Mu()
        log_z = np.log(np.where(z > 0.0, z, 1.0))
        total = np.zeros(z.shape)
        for k in range(-k_max, k_max + 1):
            nu = params.Order(k)
            log_coeff = -nu * math.log(2.0) - GammaFunction.Log(nu + 1.0)
            exponent = nu - mu
            if exponent <= DecayVerifierConst.SIGMA_TOL:
                total += math.exp(log_coeff)
            else:
                total += np.where(z > 0.0, np.exp(exponent * log_z + log_coeff), 0.0)
        return total

    @staticmethod
    def ChainingRatio(params: MagneticParams,
                      t: float,
                      grid: DecayGrid,
                      cfg: TruncationConfig) -> float:
        """
        Compute the largest ratio over the grid of z^-mu * |S| to max(K1, K2), the series and the majorant
        using the same cutoff. The chaining inequality holds when the ratio does not exceed one.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            grid (DecayGrid object)       : Sample grid
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            float: Largest ratio

        Raises:
            SingularTimeError: If the time is too close to a singular time
            TruncationError: If no angular cutoff meets the tail tolerance
        """
        SingularTime.Check(params.B0(), t, cfg.TimeGuard())
        products = grid.Products()
        abs_series, k_used = DecayVerifier.__SeriesTable(params, t, grid, cfg, 1.0)
        z = DecayVerifier.ReducedProducts(params, t, products)
        positive = z > 0.0
        weighted = np.zeros(abs_series.shape)
        weighted[:, positive] = abs_series[:, positive] * z[None, positive] ** (-params.Mu())

        mask = OmegaRegion.Omega1Mask(params, t, products)
        k1 = float(np.max(weighted[:, mask])) if np.any(mask) else 0.0
        k2 = float(np.max(DecayVerifier.Majorant(params, z[~mask], k_used))) if np.any(~mask) else 0.0
        bound = max(k1, k2)
        worst = float(np.max(weighted))
        logger.debug("Chaining at t=%g: K1=%g, K2=%g, worst %g", t, k1, k2, worst)
        return worst / bound if bound > 0.0 else 0.0

    @staticmethod
    def IsChainingSatisfied(ratio: float) -> bool:
        """
        Get if a chaining ratio satisfies the chaining inequality.

        Args:
            ratio (float): Chaining ratio

        Returns:
            bool: True if satisfied, false otherwise
        """
        return ratio <= 1.0 + DecayVerifierConst.CHAINING_REL_SLACK

    @staticmethod
    def SmallTimeCheck(params: MagneticParams,
                       sigma: float,
                       t_values: Sequence[float],
                       grid: DecayGrid,
                       cfg: TruncationConfig,
                       prefactor_scale: Optional[complex] = None) -> ResultTable:
        """
        Check the small-time form of the estimate on times in (0, pi / (2 * B0)).
        For each time, the sine factor |sin(B0 * t)|^(1 + sigma) and the linear factor (B0 * t)^(1 + sigma)
        shall agree within [1, (pi/2)^(1 + sigma)], and t^(1 + sigma) * sup_weighted is bounded by a single
        constant reported in the summary.

        Args:
            params (MagneticParams object)     : Magnetic parameters
            sigma (float)                      : Weight exponent in [0, mu]
            t_values (list[float])             : Times
            grid (DecayGrid object)            : Sample grid
            cfg (TruncationConfig object)      : Truncation configuration
            prefactor_scale (complex, optional): Kernel calibration constant, the calibrated one if not specified

        Returns:
            ResultTable object: Table with a row per time

        Raises:
            DomainError: If a time is outside the range or sigma is not valid
            SingularTimeError: If a time is too close to zero
        """
        b0 = params.B0()
        for t in t_values:
            if not 0.0 < t < math.pi / (2.0 * b0):
                raise DomainError(f"Small-time check requires t in (0, pi/(2*B0)) ({t})")
        if prefactor_scale is None:
            prefactor_scale = PrefactorCalibration.Calibrate(params, cfg)

        exponent = 1.0 + sigma
        upper = (0.5 * math.pi) ** exponent
        table = ResultTable(DecayVerifierConst.SMALL_TIME_COLUMNS)
        ratios = []
        scaled = []
        for t in t_values:
            row = DecayVerifier.WeightedSup(params, t, sigma, grid, cfg, prefactor_scale)
            linear_factor = (b0 * t) ** exponent
            ratios.append(linear_factor / row.SinFactor())
            scaled.append(row.SupWeighted() * t ** exponent)
            table.AddRow({
                "t": t,
                "sup_weighted": row.SupWeighted(),
                "sin_factor": row.SinFactor(),
                "linear_factor": linear_factor,
                "factor_ratio": ratios[-1],
                "scaled_sup": scaled[-1],
            })

        # Rounding can put the ratio marginally below one as t tends to zero
        in_band = all(1.0 - 1e-12 <= ratio <= upper * (1.0 + 1e-12) for ratio in ratios)
        table.SetSummary("sigma", sigma)
        table.SetSummary("constant", max(scaled) if scaled else 0.0)
        table.SetSummary("ratio_upper_bound", upper)
        table.SetSummary("ratios_in_band", in_band)
        return table

    @staticmethod
    def RefinementChange(params: MagneticParams,
                         t: float,
                         sigma: float,
                         grid: DecayGrid,
                         cfg: TruncationConfig,
                         prefactor_scale: Optional[complex] = None) -> float:
        """
        Get the relative change of the weighted supremum when the grid is refined.

        Args:
            params (MagneticParams object)     : Magnetic parameters
            t (float)                          : Time
            sigma (float)                      : Weight exponent
            grid (DecayGrid object)            : Sample grid
            cfg (TruncationConfig object)      : Truncation configuration
            prefactor_scale (complex, optional): Kernel calibration constant, the calibrated one if not specified

        Returns:
            float: Relative change
        """
        return DecayVerifier.__RelativeChange(params, t, sigma, grid, grid.Refined(), cfg, prefactor_scale)

    @staticmethod
    def RMinChange(params: MagneticParams,
                   t: float,
                   sigma: float,
                   grid: DecayGrid,
                   cfg: TruncationConfig,
                   prefactor_scale: Optional[complex] = None) -> float:
        """
        Get the relative change of the weighted supremum when the minimum radius is halved.

        Args:
            params (MagneticParams object)     : Magnetic parameters
            t (float)                          : Time
            sigma (float)                      : Weight exponent
            grid (DecayGrid object)            : Sample grid
            cfg (TruncationConfig object)      : Truncation configuration
            prefactor_scale (complex, optional): Kernel calibration constant, the calibrated one if not specified

        Returns:
            float: Relative change
        """
        return DecayVerifier.__RelativeChange(params, t, sigma, grid, grid.WithRMin(0.5 * grid.RMin()),
                                              cfg, prefactor_scale)

    @staticmethod
    def ReducedProducts(params: MagneticParams,
                        t: float,
                        products: np.ndarray) -> np.ndarray:
        """
        Get z = B0 * |x| * |y| / (2 * |sin(B0 * t)|), the modulus of the Bessel argument.

        Args:
            params (MagneticParams object): Magnetic parameters
            t (float)                     : Time
            products (numpy.ndarray)      : Radius products

        Returns:
            numpy.ndarray: Reduced products
        """
        b0 = params.B0()
        return b0 * np.asarray(products, dtype=float) / (2.0 * abs(math.sin(b0 * t)))

    @staticmethod
    def __RelativeChange(params: MagneticParams,
                         t: float,
                         sigma: float,
                         grid: DecayGrid,
                         other_grid: DecayGrid,
                         cfg: TruncationConfig,
                         prefactor_scale: Optional[complex]) -> float:
        if prefactor_scale is None:
            prefactor_scale = PrefactorCalibration.Calibrate(params, cfg)
        base = DecayVerifier.WeightedSup(params, t, sigma, grid, cfg, prefactor_scale).SupWeighted()
        other = DecayVerifier.WeightedSup(params, t, sigma, other_grid, cfg, prefactor_scale).SupWeighted()
        return abs(other - base) / base if base > 0.0 else abs(other)

    @staticmethod
    def __CheckSigma(params: MagneticParams,
                     sigma: float) -> None:
        if not 0.0 <= sigma <= params.Mu() + DecayVerifierConst.SIGMA_TOL:
            raise DomainError(f"Weight exponent shall be in [0, {params.Mu()}] ({sigma})")

    @staticmethod
    def __SeriesTable(params: MagneticParams,
                      t: float,
                      grid: DecayGrid,
                      cfg: TruncationConfig,
                      tail_scale: float) -> Tuple[np.ndarray, int]:
        # Modulus of the angular series on (angle difference, product) pairs, with the cutoff raised until
        # the scaled tail at the largest product meets the tolerance
        products = grid.Products()
        phi = grid.AngleDifferences() - params.B0() * t
        w = BesselSeriesKernel.BesselArgument(params, t, products)
        tail_tol = cfg.TailTol() / tail_scale if tail_scale > 0.0 else math.inf
        k_used = BesselSeriesKernel.RequiredKMax(params, complex(w[-1]), tail_tol, cfg.KMax())
        series = BesselSeriesKernel.AngularSeries(params, k_used, w, phi, cfg.QuadNodes())
        return np.abs(series), k_used

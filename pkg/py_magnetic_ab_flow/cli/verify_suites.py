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

"""Module with the verification suites run by the verify command."""

# Imports
import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from py_magnetic_ab_flow.cli.run_config import RunConfig
from py_magnetic_ab_flow.cli.verify_check import VerifyCheck
from py_magnetic_ab_flow.common import (
    AccuracyError, CalibrationError, CutoffInsufficientError, DomainError, MagneticParams, ModeIndex, PolarPoint,
    SingularTimeError, TruncationError
)
from py_magnetic_ab_flow.decay import DecayScanner, DecayVerifier
from py_magnetic_ab_flow.evolve import SampledFunctionFactory, SchrodingerEvolution, SpectralCoefficients
from py_magnetic_ab_flow.kernels import (
    BesselSeriesKernel, HeatKernel, MehlerKernel, PoissonIdentity, PrefactorCalibration, PrefactorCalibrationConst
)
from py_magnetic_ab_flow.specfun import BesselI, GammaFunction, GaussQuadrature, Laguerre, PkmPolynomial
from py_magnetic_ab_flow.spectrum import MagneticSpectrum


logger = logging.getLogger(__name__)

SuiteSummary = Dict[str, Any]


class VerifySuitesConst:
    """Class container for verification suite constants."""

    LAGUERRE_ALPHAS: Tuple[float, ...] = (0.3, 0.5, 1.7)
    LAGUERRE_MAX_DEGREE: int = 8
    LAGUERRE_NODES: int = 24
    LAGUERRE_TOL: float = 1e-8

    PKM_ALPHAS: Tuple[float, ...] = (0.3, 0.5)
    PKM_RHOS: Tuple[float, ...] = (0.1, 0.5, 1.0, 2.0, 5.0)
    PKM_TOL: float = 1e-12
    PKM_ROOT_GAP: float = 1e-2
    PKM_REL_TOL: float = 1e-10

    NORM_TOL: float = 1e-8
    ORTHO_MODES: Tuple[Tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (-1, 2), (2, 1))
    ORTHO_TOL: float = 1e-8

    RESIDUAL_MODES: Tuple[Tuple[int, int], ...] = ((0, 0), (1, 0), (-1, 0), (2, 1), (-2, 1), (0, 3), (3, 2), (-4, 2))
    RESIDUAL_RADII: Tuple[float, float, int] = (0.2, 3.0, 15)
    RESIDUAL_TOL: float = 1e-8

    POISSON_M_MAX: int = 200
    POISSON_TOL: float = 1e-8

    HEAT_POINTS: Tuple[Tuple[Tuple[float, float], Tuple[float, float]], ...] = (
        ((0.5, 0.3), (0.8, 1.1)),
        ((1.2, 2.0), (1.5, 4.0)),
        ((0.9, 0.0), (0.9, 3.0)),
    )
    HEAT_TOL: float = 1e-8

    BESSEL_ORDERS: Tuple[float, ...] = (0.3, 0.5, 1.7, 5.5)
    BESSEL_ARGS: Tuple[float, ...] = (0.1, 1.0, 10.0, 25.0)

    # Radii in units of 1/sqrt(B0), times in units of 1/B0
    LIMIT_ALPHA: float = 1e-4
    LIMIT_CAUCHY_ALPHAS: Tuple[float, ...] = (1e-2, 1e-3, 1e-4)
    LIMIT_RADII: Tuple[float, ...] = (0.5, 1.0, 2.0, 3.0, 4.0)
    LIMIT_TIMES: Tuple[float, ...] = (0.3, math.pi / 4.0, 1.0)
    LIMIT_TOL: float = 1e-3

    UNITARITY_TIMES: Tuple[float, ...] = (0.3, math.pi / 4.0, 1.0)
    SPECTRAL_UNITARITY_TOL: float = 1e-12
    KERNEL_UNITARITY_TOL: float = 1e-4
    DUAL_ROUTE_ALPHA: float = 1e-4
    DUAL_ROUTE_TIME: float = math.pi / 4.0
    DUAL_ROUTE_TOL: float = 1e-4

    DECAY_PARAMS: Tuple[Tuple[float, float], ...] = ((0.5, 1.0), (0.3, 2.0))
    DECAY_REFINEMENT_TOL: float = 0.05
    DECAY_BAND_FACTOR: float = 2.0
    DECAY_CHAINING_TIME: float = math.pi / 4.0

    SMALL_TIMES: Tuple[float, ...] = (0.05, 0.2, 0.5, 1.0, 1.4)


class VerifySuites:
    """Class container for the verification suites, each one returning its checks."""

    @staticmethod
    def Names() -> List[str]:
        """
        Get the suite names, in execution order.

        Returns:
            list[str]: Suite names
        """
        return list(VerifySuites.__Registry())

    @staticmethod
    def Run(run_cfg: RunConfig,
            names: Optional[Sequence[str]] = None) -> Tuple[List[VerifyCheck], SuiteSummary]:
        """
        Run suites. A suite stopped by a library error contributes a failed check carrying the error.

        Args:
            run_cfg (RunConfig object): Run configuration
            names (list[str], optional): Suite names, all if not specified

        Returns:
            tuple[list[VerifyCheck], dict]: Checks and summary values

        Raises:
            DomainError: If a suite name is not valid
        """
        registry = VerifySuites.__Registry()
        names = list(registry) if not names else list(names)
        unknown = [name for name in names if name not in registry]
        if unknown:
            raise DomainError(f"Unknown verification suites: {unknown}")

        checks: List[VerifyCheck] = []
        summary: SuiteSummary = {}
        for name in names:
            logger.info("Running verification suite %s", name)
            try:
                checks.extend(registry[name](run_cfg, summary))
            except (AccuracyError, CalibrationError, CutoffInsufficientError, DomainError, SingularTimeError,
                    TruncationError) as ex:
                logger.warning("Verification suite %s stopped: %s", name, ex)
                checks.append(VerifyCheck.Failed(name, "suite completed", ex))
        return checks, summary

    #
    # Special functions and spectrum
    #

    @staticmethod
    def Laguerre(run_cfg: RunConfig,
                 summary: SuiteSummary) -> List[VerifyCheck]:
        checks = []
        degrees = range(VerifySuitesConst.LAGUERRE_MAX_DEGREE + 1)
        for alpha in VerifySuitesConst.LAGUERRE_ALPHAS:
            nodes, weights = GaussQuadrature.GenLaguerre(VerifySuitesConst.LAGUERRE_NODES, alpha)
            table = np.array([[Laguerre.Evaluate(alpha, m, float(node)) for node in nodes] for m in degrees])
            gram = (table * weights[None, :]) @ table.T
            expected = np.array([math.exp(GammaFunction.Log(m + alpha + 1.0) - GammaFunction.Log(m + 1.0))
                                 for m in degrees])
            scale = np.sqrt(np.outer(expected, expected))
            error = float(np.max(np.abs(gram - np.diag(expected)) / scale))
            checks.append(VerifyCheck("laguerre", f"orthogonality alpha={alpha}", error,
                                      VerifySuitesConst.LAGUERRE_TOL))
        return checks

    @staticmethod
    def Pkm(run_cfg: RunConfig,
            summary: SuiteSummary) -> List[VerifyCheck]:
        """
        Compare the explicit sum of P_km with its Laguerre form.
        The first check divides the difference by sum_n |c_n| * rho^n, the size of the cancelling terms, so it
        stays meaningful at the polynomial roots. The second one is the plain relative error, at the points whose
        value is at least PKM_ROOT_GAP times that scale.
        """
        checks = []
        for alpha in VerifySuitesConst.PKM_ALPHAS:
            error = 0.0
            rel_error = 0.0
            for k in range(-5, 6):
                for m in range(11):
                    abs_coeffs = np.abs(PkmPolynomial.Coefficients(k, m, alpha))
                    for rho in VerifySuitesConst.PKM_RHOS:
                        scale = float(np.polynomial.polynomial.polyval(rho, abs_coeffs))
                        reference = PkmPolynomial.EvaluateFromLaguerre(k, m, alpha, rho)
                        diff = abs(PkmPolynomial.Evaluate(k, m, alpha, rho) - reference)
                        error = max(error, diff / scale)
                        if abs(reference) >= VerifySuitesConst.PKM_ROOT_GAP * scale:
                            rel_error = max(rel_error, diff / abs(reference))
            checks.append(VerifyCheck("pkm", f"explicit sum vs Laguerre, coefficient-scaled, alpha={alpha}",
                                      error, VerifySuitesConst.PKM_TOL))
            checks.append(VerifyCheck("pkm", f"explicit sum vs Laguerre, relative off roots, alpha={alpha}",
                                      rel_error, VerifySuitesConst.PKM_REL_TOL))
        return checks

    @staticmethod
    def Norm(run_cfg: RunConfig,
             summary: SuiteSummary) -> List[VerifyCheck]:
        params = run_cfg.Params()
        error = 0.0
        for k in range(-5, 6):
            for m in range(6):
                mode = ModeIndex(k, m)
                exact = MagneticSpectrum.NormSquared(params, mode)
                error = max(error, abs(MagneticSpectrum.NormSquaredQuadrature(params, mode) - exact) / exact)
        return [VerifyCheck("norm", "closed form vs quadrature |k|<=5, m<=5", error, VerifySuitesConst.NORM_TOL)]

    @staticmethod
    def Orthogonality(run_cfg: RunConfig,
                      summary: SuiteSummary) -> List[VerifyCheck]:
        params = run_cfg.Params()
        modes = [ModeIndex(k, m) for k, m in VerifySuitesConst.ORTHO_MODES]
        norms = [MagneticSpectrum.NormSquared(params, mode) for mode in modes]
        error = 0.0
        for i, mode_a in enumerate(modes):
            for j, mode_b in enumerate(modes[i:], start=i):
                inner = MagneticSpectrum.InnerProduct(params, mode_a, mode_b) / math.sqrt(norms[i] * norms[j])
                error = max(error, abs(inner - (1.0 if i == j else 0.0)))
        return [VerifyCheck("orthogonality", "normalized eigenfunction Gram matrix", error,
                            VerifySuitesConst.ORTHO_TOL)]

    @staticmethod
    def Residual(run_cfg: RunConfig,
                 summary: SuiteSummary) -> List[VerifyCheck]:
        params = run_cfg.Params()
        radii = np.linspace(*VerifySuitesConst.RESIDUAL_RADII)
        error = 0.0
        for k, m in VerifySuitesConst.RESIDUAL_MODES:
            mode = ModeIndex(k, m)
            scale = MagneticSpectrum.Eigenvalue(params, mode) * max(
                abs(MagneticSpectrum.RadialProfile(params, mode, float(r))) for r in radii
            )
            residual = max(MagneticSpectrum.EigenResidual(params, mode, float(r)) for r in radii)
            error = max(error, residual / scale)
        return [VerifyCheck("residual", "radial eigen-equation on [0.2, 3]", error, VerifySuitesConst.RESIDUAL_TOL)]

    #
    # Kernels
    #

    @staticmethod
    def Poisson(run_cfg: RunConfig,
                summary: SuiteSummary) -> List[VerifyCheck]:
        quad_nodes = run_cfg.Trunc().QuadNodes()
        error = 0.0
        for nu in run_cfg.Get("nu"):
            for a in run_cfg.Get("a"):
                for b in run_cfg.Get("b"):
                    for c in run_cfg.Get("c"):
                        error = max(error, PoissonIdentity.Residual(nu, a, b, c, VerifySuitesConst.POISSON_M_MAX,
                                                                    quad_nodes))
        return [VerifyCheck("poisson", "Laguerre Poisson kernel identity on the configured grid", error,
                            VerifySuitesConst.POISSON_TOL)]

    @staticmethod
    def HeatKernel(run_cfg: RunConfig,
                   summary: SuiteSummary) -> List[VerifyCheck]:
        params = run_cfg.Params()
        checks = []
        for tau_unit in run_cfg.Get("tau"):
            tau = tau_unit / params.B0()
            error = 0.0
            for x, y in VerifySuitesConst.HEAT_POINTS:
                pair = HeatKernel.Pair(params, tau, PolarPoint(*x), PolarPoint(*y), run_cfg.Trunc())
                error = max(error, pair.RelativeDifference())
            checks.append(VerifyCheck("heat-kernel", f"spectral vs closed form tau={tau}", error,
                                      VerifySuitesConst.HEAT_TOL))
        return checks

    @staticmethod
    def BesselBound(run_cfg: RunConfig,
                    summary: SuiteSummary) -> List[VerifyCheck]:
        worst = 0.0
        for nu in VerifySuitesConst.BESSEL_ORDERS:
            for z in VerifySuitesConst.BESSEL_ARGS:
                value = BesselI.Evaluate(nu, 1j * z, run_cfg.Trunc().QuadNodes())
                worst = max(worst, abs(value) / BesselI.Bound(nu, 1j * z))
        return [VerifyCheck("bessel-bound", "largest |I_nu(iz)| to majorant ratio", worst, 1.0)]

    @staticmethod
    def Calibration(run_cfg: RunConfig,
                    summary: SuiteSummary) -> List[VerifyCheck]:
        result = PrefactorCalibration.Result(run_cfg.Params(), run_cfg.Trunc())
        summary["calibration_rho_re"] = result.Rho().real
        summary["calibration_rho_im"] = result.Rho().imag
        summary["calibration_dist_to_2pi"] = result.DistanceTo2Pi()
        summary["calibration_dist_to_2pi_i"] = result.DistanceTo2PiI()
        return [
            VerifyCheck("calibration", "prefactor spread over reference times", result.Spread(),
                        PrefactorCalibrationConst.SPREAD_TOL),
            VerifyCheck("calibration", "kernel vs spectral alignment defect", 1.0 - result.Alignment(),
                        PrefactorCalibrationConst.ALIGNMENT_TOL),
        ]

    @staticmethod
    def AlphaLimit(run_cfg: RunConfig,
                   summary: SuiteSummary) -> List[VerifyCheck]:
        b0 = run_cfg.Params().B0()
        cfg = run_cfg.Trunc()
        points = VerifySuites.__LimitPoints(b0)
        times = [t_unit / b0 for t_unit in VerifySuitesConst.LIMIT_TIMES]

        def kernel_values(alpha: float) -> np.ndarray:
            params = MagneticParams(alpha, b0)
            return np.array([BesselSeriesKernel.Evaluate(params, t, x, y, cfg).Value()
                             for t in times for x, y in points])

        mehler = np.array([MehlerKernel.SpectralForm(b0, t, x.ToCartesian(), y.ToCartesian(), cfg.TimeGuard())
                           for t in times for x, y in points])
        values = {alpha: kernel_values(alpha) for alpha in VerifySuitesConst.LIMIT_CAUCHY_ALPHAS}
        error = float(np.max(np.abs(values[VerifySuitesConst.LIMIT_ALPHA] - mehler) / np.abs(mehler)))

        alphas = VerifySuitesConst.LIMIT_CAUCHY_ALPHAS
        diffs = [float(np.max(np.abs(values[alphas[i + 1]] - values[alphas[i]]))) for i in range(len(alphas) - 1)]
        cauchy_ratio = max(diffs[i + 1] / diffs[i] for i in range(len(diffs) - 1))
        return [
            VerifyCheck("alpha-limit", f"calibrated kernel vs Mehler at alpha={VerifySuitesConst.LIMIT_ALPHA}",
                        error, VerifySuitesConst.LIMIT_TOL),
            VerifyCheck("alpha-limit", "successive differences shrink as alpha -> 0", cauchy_ratio, 1.0),
        ]

    #
    # Evolution
    #

    @staticmethod
    def Unitarity(run_cfg: RunConfig,
                  summary: SuiteSummary) -> List[VerifyCheck]:
        params = run_cfg.Params()
        cfg = run_cfg.Trunc()
        times = [t_unit / params.B0() for t_unit in VerifySuitesConst.UNITARITY_TIMES]

        reference = SpectralCoefficients.FromModes(params, PrefactorCalibrationConst.REFERENCE_MODES)
        spectral_error = max(abs(SchrodingerEvolution.EvolveSpectral(reference, t).L2NormSquared()
                                 - reference.L2NormSquared()) for t in times)

        gauss_a = run_cfg.Get("gauss_a")
        f = SampledFunctionFactory.CreateGaussian(gauss_a, run_cfg.Get("gauss_x0"))
        exact = f.ExactNormSquared()
        kernel_error = max(abs(SchrodingerEvolution.KernelEvolvedNormSquared(f, params, t, cfg) - exact) / exact
                           for t in times)
        return [
            VerifyCheck("unitarity", "spectral route norm drift", spectral_error,
                        VerifySuitesConst.SPECTRAL_UNITARITY_TOL),
            VerifyCheck("unitarity", f"kernel route Gaussian norm, a={gauss_a}", kernel_error,
                        VerifySuitesConst.KERNEL_UNITARITY_TOL),
        ]

    @staticmethod
    def DualRoute(run_cfg: RunConfig,
                  summary: SuiteSummary) -> List[VerifyCheck]:
        params = run_cfg.Params()
        cfg = run_cfg.Trunc()
        points = VerifySuites.SamplePoints()

        # Eigenfunction data, exact in the spectral route
        t = VerifySuitesConst.DUAL_ROUTE_TIME / params.B0()
        reference = SpectralCoefficients.FromModes(params, PrefactorCalibrationConst.REFERENCE_MODES)
        eigen_error = VerifySuites.__DualRouteError(SchrodingerEvolution.Synthesize(reference), reference,
                                                    params, t, points, run_cfg)

        # Gaussian data, expanded close to zero flux where the expansion converges fast
        small_params = MagneticParams(VerifySuitesConst.DUAL_ROUTE_ALPHA, params.B0())
        f = SampledFunctionFactory.CreateGaussian(run_cfg.Get("gauss_a"), run_cfg.Get("gauss_x0"))
        coeffs = SchrodingerEvolution.Expand(f, small_params, cfg, run_cfg.Get("parseval_tol"))
        gauss_error = VerifySuites.__DualRouteError(f, coeffs, small_params, t, points, run_cfg)
        return [
            VerifyCheck("dual-route", "eigenfunction data, spectral vs kernel", eigen_error,
                        VerifySuitesConst.DUAL_ROUTE_TOL),
            VerifyCheck("dual-route", f"Gaussian data at alpha={VerifySuitesConst.DUAL_ROUTE_ALPHA}, "
                                      "spectral vs kernel", gauss_error,
                        VerifySuitesConst.DUAL_ROUTE_TOL),
        ]

    #
    # Decay
    #

    @staticmethod
    def Decay(run_cfg: RunConfig,
              summary: SuiteSummary) -> List[VerifyCheck]:
        cfg = run_cfg.Trunc()
        grid = run_cfg.Grid()
        refined = grid.Refined()
        checks = []
        for alpha, b0 in VerifySuitesConst.DECAY_PARAMS:
            params = MagneticParams(alpha, b0)
            scale = PrefactorCalibration.Calibrate(params, cfg)
            mu = params.Mu()
            label = f"alpha={alpha}, B0={b0}"
            for sigma in (0.0, 0.5 * mu, mu):
                products = []
                changes = []
                for t in DecayScanner.DefaultTimes(b0):
                    row = DecayVerifier.WeightedSup(params, t, sigma, grid, cfg, scale)
                    refined_row = DecayVerifier.WeightedSup(params, t, sigma, refined, cfg, scale)
                    products.append(row.Product())
                    changes.append(abs(refined_row.SupWeighted() - row.SupWeighted()) / row.SupWeighted())
                summary[f"decay_constant[{label}, sigma={sigma:.17g}]"] = max(products)
                checks.append(VerifyCheck("decay", f"products finite {label}, sigma={sigma:.6g}", None, None,
                                          all(math.isfinite(p) for p in products)))
                checks.append(VerifyCheck("decay", f"refinement change {label}, sigma={sigma:.6g}",
                                          max(changes), VerifySuitesConst.DECAY_REFINEMENT_TOL))

                near = [DecayVerifier.WeightedSup(params, t, sigma, grid, cfg, scale)
                        for t in DecayScanner.NearSingularTimes(b0)]
                sups = [row.SupWeighted() for row in near]
                near_products = [row.Product() for row in near]
                checks.append(VerifyCheck("decay", f"near-singular growth {label}, sigma={sigma:.6g}", None, None,
                                          all(sups[i + 1] > sups[i] for i in range(len(sups) - 1))))
                checks.append(VerifyCheck("decay", f"near-singular product band {label}, sigma={sigma:.6g}",
                                          max(near_products) / min(near_products),
                                          VerifySuitesConst.DECAY_BAND_FACTOR))

            ratio = DecayVerifier.ChainingRatio(params, VerifySuitesConst.DECAY_CHAINING_TIME / b0, grid, cfg)
            checks.append(VerifyCheck("decay", f"chaining inequality {label}", ratio, 1.0,
                                      DecayVerifier.IsChainingSatisfied(ratio)))
        return checks

    @staticmethod
    def SmallTime(run_cfg: RunConfig,
                  summary: SuiteSummary) -> List[VerifyCheck]:
        params = run_cfg.Params()
        times = [t_unit / params.B0() for t_unit in VerifySuitesConst.SMALL_TIMES]
        checks = []
        for sigma in run_cfg.Sigmas():
            table = DecayVerifier.SmallTimeCheck(params, sigma, times, run_cfg.Grid(), run_cfg.Trunc())
            ratio_max = max(row["factor_ratio"] for row in table)
            summary[f"small_time_constant[sigma={sigma:.17g}]"] = table.Summary()["constant"]
            checks.append(VerifyCheck("small-time", f"sine vs linear factor band, sigma={sigma:.6g}", ratio_max,
                                      table.Summary()["ratio_upper_bound"], table.Summary()["ratios_in_band"]))
        return checks

    #
    # Helpers
    #

    @staticmethod
    def SamplePoints() -> List[PolarPoint]:
        """
        Get the sample points of the evolution checks.

        Returns:
            list[PolarPoint]: Points
        """
        return [PolarPoint(0.25 * (i + 1), 0.7 * i) for i in range(10)]

    @staticmethod
    def __DualRouteError(f: Any,
                         coeffs: SpectralCoefficients,
                         params: MagneticParams,
                         t: float,
                         points: List[PolarPoint],
                         run_cfg: RunConfig) -> float:
        spectral = SchrodingerEvolution.ReconstructPoints(SchrodingerEvolution.EvolveSpectral(coeffs, t), points)
        kernel = SchrodingerEvolution.EvolveKernel(f, params, t, points, run_cfg.Trunc())
        return float(np.max(np.abs(kernel - spectral)) / np.max(np.abs(spectral)))

    @staticmethod
    def __LimitPoints(b0: float) -> List[Tuple[PolarPoint, PolarPoint]]:
        scale = 1.0 / math.sqrt(b0)
        radii = VerifySuitesConst.LIMIT_RADII
        return [(PolarPoint(r1 * scale, 0.4 * i), PolarPoint(r2 * scale, 1.1 + 0.7 * j))
                for i, r1 in enumerate(radii) for j, r2 in enumerate(radii)]

    @staticmethod
    def __Registry() -> Dict[str, Callable[[RunConfig, SuiteSummary], List[VerifyCheck]]]:
        return {
            "laguerre": VerifySuites.Laguerre,
            "pkm": VerifySuites.Pkm,
            "norm": VerifySuites.Norm,
            "orthogonality": VerifySuites.Orthogonality,
            "residual": VerifySuites.Residual,
            "poisson": VerifySuites.Poisson,
            "heat-kernel": VerifySuites.HeatKernel,
            "bessel-bound": VerifySuites.BesselBound,
            "calibration": VerifySuites.Calibration,
            "alpha-limit": VerifySuites.AlphaLimit,
            "unitarity": VerifySuites.Unitarity,
            "dual-route": VerifySuites.DualRoute,
            "decay": VerifySuites.Decay,
            "small-time": VerifySuites.SmallTime,
        }

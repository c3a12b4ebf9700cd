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

"""Module with the command-line subcommands, each one building a result table from a run configuration."""

# Imports
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from py_magnetic_ab_flow.cli.run_config import RunConfig
from py_magnetic_ab_flow.cli.verify_check import VerifyCheckKeys
from py_magnetic_ab_flow.cli.verify_suites import VerifySuites, VerifySuitesConst
from py_magnetic_ab_flow.common import PolarPoint, ResultTable, SingularTime, SingularTimeError
from py_magnetic_ab_flow.decay import DecayScanner
from py_magnetic_ab_flow.evolve import SampledFunction, SampledFunctionFactory, SchrodingerEvolution, SpectralCoefficients
from py_magnetic_ab_flow.kernels import BesselSeriesKernel, MehlerKernel, PoissonIdentity, PrefactorCalibrationConst
from py_magnetic_ab_flow.spectrum import MagneticSpectrum


logger = logging.getLogger(__name__)


class CommandsConst:
    """Class container for command constants."""

    SPECTRUM_COLUMNS: Tuple[str, ...] = ("k", "m", "lambda", "multiplicity", "norm_squared")
    EVOLVE_COLUMNS: Tuple[str, ...] = ("route", "t", "r", "theta", "re_u", "im_u", "abs_u")
    KERNEL_COLUMNS: Tuple[str, ...] = ("t", "re_kernel", "im_kernel", "abs_kernel", "k_terms_used", "est_tail",
                                       "re_mehler", "im_mehler")
    POISSON_COLUMNS: Tuple[str, ...] = ("nu", "a", "b", "c", "lhs", "rhs", "residual")

    # Flux distance below which kernel-eval also reports the zero-flux kernel
    MEHLER_FLUX_DISTANCE: float = 1e-2
    # Default time of evolve and kernel-eval, in units of 1/B0
    DEF_TIME: float = math.pi / 4.0
    EVOLVE_NORM_TOL: float = 1e-4


class Commands:
    """Class container for the subcommands."""

    @staticmethod
    def Spectrum(run_cfg: RunConfig) -> ResultTable:
        """
        Build the spectrum table, sorted by eigenvalue, then k, then m.

        Args:
            run_cfg (RunConfig object): Run configuration

        Returns:
            ResultTable object: Table with a row per mode
        """
        params = run_cfg.Params()
        cfg = run_cfg.Trunc()
        table = ResultTable(CommandsConst.SPECTRUM_COLUMNS)
        landau_rows = 0
        for mode in MagneticSpectrum.Modes(params, cfg.KMax(), cfg.MMax()):
            lam = MagneticSpectrum.Eigenvalue(params, mode)
            landau_rows += MagneticSpectrum.IsLandauLevel(params, lam)
            table.AddRow({
                "k": mode.K(),
                "m": mode.M(),
                "lambda": lam,
                "multiplicity": MagneticSpectrum.Multiplicity(params, lam, max(cfg.KMax(), 1)),
                "norm_squared": MagneticSpectrum.NormSquared(params, mode),
            })

        table.SetSummary("alpha", params.Alpha())
        table.SetSummary("b0", params.B0())
        table.SetSummary("mu", params.Mu())
        # Multiplicities of these rows are bounded by the window only
        table.SetSummary("landau_level_rows", landau_rows)
        return table

    @staticmethod
    def Verify(run_cfg: RunConfig) -> ResultTable:
        """
        Run the verification suites.
        The summary "all_passed" is true if every check passed.

        Args:
            run_cfg (RunConfig object): Run configuration

        Returns:
            ResultTable object: Table with a row per check

        Raises:
            DomainError: If a suite name is not valid
        """
        checks, suite_summary = VerifySuites.Run(run_cfg, run_cfg.Suites())
        table = ResultTable([key.name.lower() for key in VerifyCheckKeys])
        for check in checks:
            table.AddRow(check.ToDict())
            if not check.Passed():
                logger.warning("Check failed: %s / %s (measured %s, tolerance %s)",
                               check.Suite(), check.Check(), check.Measured(), check.Tolerance())

        failed = sum(1 for check in checks if not check.Passed())
        for key, value in suite_summary.items():
            table.SetSummary(key, value)
        table.SetSummary("checks", len(checks))
        table.SetSummary("failed_checks", failed)
        table.SetSummary("all_passed", failed == 0)
        return table

    @staticmethod
    def DecayScan(run_cfg: RunConfig) -> ResultTable:
        """
        Scan the weighted supremum for every configured time and weight exponent.

        Args:
            run_cfg (RunConfig object): Run configuration

        Returns:
            ResultTable object: Table with a row per (t, sigma)
        """
        params = run_cfg.Params()
        rows = DecayScanner.Scan(params,
                                 run_cfg.Times(DecayScanner.DefaultTimes(params.B0())),
                                 run_cfg.Sigmas(),
                                 run_cfg.Grid(),
                                 run_cfg.Trunc(),
                                 run_cfg.Jobs())
        return DecayScanner.ToTable(rows)

    @staticmethod
    def Evolve(run_cfg: RunConfig) -> ResultTable:
        """
        Evolve the configured initial data by the selected routes and sample it at the output points.
        At a singular time the kernel route is skipped if both routes are selected.

        Args:
            run_cfg (RunConfig object): Run configuration

        Returns:
            ResultTable object: Table with a row per route, time and point

        Raises:
            SingularTimeError: If the kernel route alone is selected at a singular time
            CutoffInsufficientError: If the expansion of the initial data is not accurate enough
        """
        params = run_cfg.Params()
        cfg = run_cfg.Trunc()
        route = run_cfg.Route()
        times = run_cfg.Times([CommandsConst.DEF_TIME / params.B0()])
        points = Commands.__OutPoints(run_cfg)

        f, coeffs = Commands.__InitialData(run_cfg, route != "kernel")
        input_norm_sq = f.ExactNormSquared()
        if input_norm_sq is None:
            input_norm_sq = f.NormByQuadrature(cfg.RadialNodes(), cfg.EvolveAngularNodes())

        table = ResultTable(CommandsConst.EVOLVE_COLUMNS)
        table.SetSummary("data", run_cfg.Get("data"))
        table.SetSummary("input_norm_squared", input_norm_sq)
        max_norm_defect = 0.0
        for t in times:
            spectral_values = None
            if coeffs is not None and route != "kernel":
                evolved = SchrodingerEvolution.EvolveSpectral(coeffs, t)
                spectral_values = SchrodingerEvolution.ReconstructPoints(evolved, points)
                Commands.__AddEvolveRows(table, "spectral", t, points, spectral_values)
                norm_sq = evolved.L2NormSquared()
                table.SetSummary(f"norm_squared[route=spectral,t={t:.17g}]", norm_sq)
                max_norm_defect = max(max_norm_defect, abs(norm_sq - input_norm_sq) / input_norm_sq)

            if route == "spectral":
                continue
            try:
                SingularTime.Check(params.B0(), t, cfg.TimeGuard())
            except SingularTimeError as ex:
                if route == "kernel":
                    raise
                logger.warning("Kernel route skipped: %s", ex)
                table.SetSummary(f"kernel_route[t={t:.17g}]", "skipped at singular time, spectral route only")
                continue

            kernel_values = SchrodingerEvolution.EvolveKernel(f, params, t, points, cfg)
            Commands.__AddEvolveRows(table, "kernel", t, points, kernel_values)
            norm_sq = SchrodingerEvolution.KernelEvolvedNormSquared(f, params, t, cfg)
            table.SetSummary(f"norm_squared[route=kernel,t={t:.17g}]", norm_sq)
            max_norm_defect = max(max_norm_defect, abs(norm_sq - input_norm_sq) / input_norm_sq)
            if spectral_values is not None:
                discrepancy = float(np.max(np.abs(kernel_values - spectral_values)))
                table.SetSummary(f"max_discrepancy[t={t:.17g}]", discrepancy)

        table.SetSummary("max_norm_defect", max_norm_defect)
        table.SetSummary("norm_preserved", max_norm_defect <= CommandsConst.EVOLVE_NORM_TOL)
        return table

    @staticmethod
    def KernelEval(run_cfg: RunConfig) -> ResultTable:
        """
        Evaluate the calibrated kernel between the configured points, with the zero-flux kernel for
        comparison if the flux is close to an integer.

        Args:
            run_cfg (RunConfig object): Run configuration

        Returns:
            ResultTable object: Table with a row per time

        Raises:
            SingularTimeError: If a time is too close to a singular time
            TruncationError: If the estimated tail exceeds the tail tolerance
        """
        params = run_cfg.Params()
        cfg = run_cfg.Trunc()
        x_cart, y_cart = run_cfg.Get("x"), run_cfg.Get("y")
        x, y = PolarPoint.FromCartesian(*x_cart), PolarPoint.FromCartesian(*y_cart)
        times = run_cfg.Times([CommandsConst.DEF_TIME / params.B0()])
        # Validated before anything is computed
        for t in times:
            SingularTime.Check(params.B0(), t, cfg.TimeGuard())

        with_mehler = params.Mu() <= CommandsConst.MEHLER_FLUX_DISTANCE
        table = ResultTable(CommandsConst.KERNEL_COLUMNS)
        for t in times:
            kernel = BesselSeriesKernel.Evaluate(params, t, x, y, cfg)
            row = {
                "t": t,
                "re_kernel": kernel.Value().real,
                "im_kernel": kernel.Value().imag,
                "abs_kernel": abs(kernel.Value()),
                "k_terms_used": kernel.KTermsUsed(),
                "est_tail": kernel.EstTail(),
            }
            if with_mehler:
                mehler = MehlerKernel.SpectralForm(params.B0(), t, x_cart, y_cart, cfg.TimeGuard())
                row["re_mehler"] = mehler.real
                row["im_mehler"] = mehler.imag
            table.AddRow(row)

        table.SetSummary("x", list(x_cart))
        table.SetSummary("y", list(y_cart))
        table.SetSummary("mehler_reported", with_mehler)
        return table

    @staticmethod
    def PoissonCheck(run_cfg: RunConfig) -> ResultTable:
        """
        Check the Laguerre Poisson kernel identity on the configured (nu, a, b, c) grid.
        The summary "passed" is true if every residual is within tolerance.

        Args:
            run_cfg (RunConfig object): Run configuration

        Returns:
            ResultTable object: Table with a row per grid point
        """
        cfg = run_cfg.Trunc()
        m_max = max(cfg.MMax(), VerifySuitesConst.POISSON_M_MAX)
        table = ResultTable(CommandsConst.POISSON_COLUMNS)
        max_residual = 0.0
        for nu in run_cfg.Get("nu"):
            for a in run_cfg.Get("a"):
                for b in run_cfg.Get("b"):
                    for c in run_cfg.Get("c"):
                        lhs = PoissonIdentity.LeftSide(nu, a, b, c, m_max)
                        rhs = PoissonIdentity.RightSide(nu, a, b, c, cfg.QuadNodes())
                        residual = abs(lhs - rhs) / abs(rhs)
                        max_residual = max(max_residual, residual)
                        table.AddRow({"nu": nu, "a": a, "b": b, "c": c, "lhs": lhs, "rhs": rhs, "residual": residual})

        table.SetSummary("m_max", m_max)
        table.SetSummary("max_residual", max_residual)
        table.SetSummary("tolerance", VerifySuitesConst.POISSON_TOL)
        table.SetSummary("passed", max_residual <= VerifySuitesConst.POISSON_TOL)
        return table

    @staticmethod
    def __InitialData(run_cfg: RunConfig,
                      expand: bool) -> Tuple[SampledFunction, Optional[SpectralCoefficients]]:
        params = run_cfg.Params()
        if run_cfg.Get("data") == "eigen":
            coeffs = SpectralCoefficients.FromModes(params, PrefactorCalibrationConst.REFERENCE_MODES)
            return SchrodingerEvolution.Synthesize(coeffs), coeffs

        f = SampledFunctionFactory.CreateGaussian(run_cfg.Get("gauss_a"), run_cfg.Get("gauss_x0"))
        if not expand:
            return f, None
        return f, SchrodingerEvolution.Expand(f, params, run_cfg.Trunc(), run_cfg.Get("parseval_tol"))

    @staticmethod
    def __OutPoints(run_cfg: RunConfig) -> List[PolarPoint]:
        out_points = run_cfg.Get("out_points")
        if out_points is None:
            return VerifySuites.SamplePoints()
        return [PolarPoint.FromCartesian(*p) for p in out_points]

    @staticmethod
    def __AddEvolveRows(table: ResultTable,
                        route: str,
                        t: float,
                        points: List[PolarPoint],
                        values: np.ndarray) -> None:
        for p, value in zip(points, values):
            table.AddRow({
                "route": route,
                "t": t,
                "r": p.R(),
                "theta": p.Theta(),
                "re_u": float(value.real),
                "im_u": float(value.imag),
                "abs_u": float(abs(value)),
            })

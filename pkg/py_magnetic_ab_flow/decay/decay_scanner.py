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

"""Module for scanning the weighted decay quantity over times and weight exponents."""

# Imports
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence, Tuple

from py_magnetic_ab_flow.common import (
    DomainError, MagneticParams, ResultTable, SingularTimeError, TruncationConfig, TruncationError
)
from py_magnetic_ab_flow.decay.decay_enum import DecayScanRowKeys
from py_magnetic_ab_flow.decay.decay_grid import DecayGrid
from py_magnetic_ab_flow.decay.decay_scan_row import DecayScanRow
from py_magnetic_ab_flow.decay.decay_verifier import DecayVerifier, DecayVerifierConst
from py_magnetic_ab_flow.kernels import PrefactorCalibration


logger = logging.getLogger(__name__)

ScanTask = Tuple[MagneticParams, float, float, DecayGrid, TruncationConfig, complex]


class DecayScannerConst:
    """Class container for decay scanner constants."""

    # Default times, in units of 1/B0
    DEF_TIMES: Tuple[float, ...] = (0.1, 0.3, math.pi / 4.0, 1.0, 2.0, math.pi - 0.15)
    # Offsets from pi of the near-singular times, in units of 1/B0
    NEAR_SINGULAR_OFFSETS: Tuple[float, ...] = (0.3, 0.15, 0.08)
    # Table columns
    TABLE_KEYS: Tuple[DecayScanRowKeys, ...] = (
        DecayScanRowKeys.T,
        DecayScanRowKeys.SIGMA,
        DecayScanRowKeys.SUP_WEIGHTED,
        DecayScanRowKeys.SIN_FACTOR,
        DecayScanRowKeys.PRODUCT,
        DecayScanRowKeys.GRID_POINTS,
    )


def _ScanTask(task: ScanTask) -> DecayScanRow:
    params, t, sigma, grid, cfg, prefactor_scale = task
    try:
        row = DecayVerifier.WeightedSup(params, t, sigma, grid, cfg, prefactor_scale)
    except (SingularTimeError, TruncationError) as ex:
        logger.warning("Scan row at t=%g, sigma=%g not computed: %s", t, sigma, ex)
        return DecayScanRow(params, t, sigma, None, grid.NumPoints(), error=str(ex))
    logger.info("Scan row at t=%g, sigma=%g: product %.17g", t, sigma, row.Product())
    return row


class DecayScanner:
    """Class container for decay scans, rows being computed in parallel and returned in input order."""

    @staticmethod
    def DefaultTimes(b0: float) -> List[float]:
        """
        Get the default scan times.

        Args:
            b0 (float): Field strength

        Returns:
            list[float]: Times
        """
        return [t_unit / b0 for t_unit in DecayScannerConst.DEF_TIMES]

    @staticmethod
    def NearSingularTimes(b0: float) -> List[float]:
        """
        Get times approaching the singular time pi / B0.

        Args:
            b0 (float): Field strength

        Returns:
            list[float]: Times
        """
        return [(math.pi - offset) / b0 for offset in DecayScannerConst.NEAR_SINGULAR_OFFSETS]

    @staticmethod
    def Scan(params: MagneticParams,
             t_values: Sequence[float],
             sigmas: Sequence[float],
             grid: DecayGrid,
             cfg: TruncationConfig,
             jobs: int = 1) -> List[DecayScanRow]:
        """
        Scan the weighted supremum over times and weight exponents, sigma varying first.
        Rows at singular times, or whose angular cutoff cannot be met, carry an error marker.

        Args:
            params (MagneticParams object): Magnetic parameters
            t_values (list[float])        : Times
            sigmas (list[float])          : Weight exponents in [0, mu]
            grid (DecayGrid object)       : Sample grid
            cfg (TruncationConfig object) : Truncation configuration
            jobs (int, optional)          : Number of worker processes

        Returns:
            list[DecayScanRow]: Rows

        Raises:
            DomainError: If a weight exponent or the number of jobs is not valid
        """
        if jobs < 1:
            raise DomainError(f"Number of jobs shall be strictly positive ({jobs})")
        for sigma in sigmas:
            if not 0.0 <= sigma <= params.Mu() + DecayVerifierConst.SIGMA_TOL:
                raise DomainError(f"Weight exponent shall be in [0, {params.Mu()}] ({sigma})")

        # Calibrated once here, workers do not share the cache
        prefactor_scale = PrefactorCalibration.Calibrate(params, cfg)
        tasks: List[ScanTask] = [(params, t, sigma, grid, cfg, prefactor_scale) for t in t_values for sigma in sigmas]
        logger.debug("Scanning %d rows on %d points with %d jobs", len(tasks), grid.NumPoints(), jobs)

        if jobs == 1 or len(tasks) <= 1:
            return [_ScanTask(task) for task in tasks]
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as executor:
            return list(executor.map(_ScanTask, tasks))

    @staticmethod
    def ToTable(rows: Sequence[DecayScanRow]) -> ResultTable:
        """
        Convert rows to a result table, summarizing the largest product per weight exponent.
        Rows not computed have empty supremum and product, their errors being listed in the summary.

        Args:
            rows (list[DecayScanRow]): Rows

        Returns:
            ResultTable object: Result table
        """
        columns = [key.name.lower() for key in DecayScannerConst.TABLE_KEYS]
        table = ResultTable(columns)
        max_products = {}
        errors = {}
        for row in rows:
            row_dict = row.ToDict()
            table.AddRow({col: row_dict[col] for col in columns})
            if row.IsValid():
                key = f"max_product[sigma={row.Sigma():.17g}]"
                max_products[key] = max(max_products.get(key, 0.0), row.Product())
            else:
                errors[f"error[t={row.T():.17g},sigma={row.Sigma():.17g}]"] = row.Error()
        for key, value in max_products.items():
            table.SetSummary(key, value)
        for key, value in errors.items():
            table.SetSummary(key, value)
        table.SetSummary("failed_rows", sum(1 for row in rows if not row.IsValid()))
        return table

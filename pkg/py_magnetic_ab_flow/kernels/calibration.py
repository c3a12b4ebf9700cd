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

"""Module for calibrating the prefactor of the Bessel-series kernel against unitarity."""

# Imports
import cmath
import logging
import math
import threading
from typing import Dict, List, Sequence, Tuple

import numpy as np

from py_magnetic_ab_flow.common import CalibrationError, MabEnumDict, MagneticParams, TruncationConfig
from py_magnetic_ab_flow.kernels.kernels_enum import CalibrationResultKeys


logger = logging.getLogger(__name__)


class PrefactorCalibrationConst:
    """Class container for prefactor calibration constants."""

    # Reference times, in units of 1/B0
    REFERENCE_TIMES: Tuple[float, ...] = (0.3, 0.7, 1.1)
    # Modes (k, m) of the reference function, an equal-weight normalized superposition
    REFERENCE_MODES: Tuple[Tuple[int, int], ...] = ((0, 0), (-1, 0), (1, 0), (0, 1))
    # Maximum relative spread of the constant over the reference times
    SPREAD_TOL: float = 1e-6
    # Maximum defect of the alignment between the kernel and spectral evolutions
    ALIGNMENT_TOL: float = 1e-6


class CalibrationResult(MabEnumDict):
    """Calibration result class."""

    m_rho: complex

    def __init__(self,
                 rho: complex,
                 reference_times: Sequence[float],
                 spread: float,
                 alignment: float) -> None:
        """
        Construct class.

        Args:
            rho (complex)                 : Calibration constant
            reference_times (list[float]) : Reference times
            spread (float)                : Relative spread of the constant over the reference times
            alignment (float)             : Worst normalized overlap of the kernel and spectral evolutions
        """
        super().__init__(CalibrationResultKeys)
        self.m_rho = complex(rho)
        self._Set(CalibrationResultKeys.RHO_RE, self.m_rho.real)
        self._Set(CalibrationResultKeys.RHO_IM, self.m_rho.imag)
        self._Set(CalibrationResultKeys.RHO_ABS, abs(self.m_rho))
        self._Set(CalibrationResultKeys.RHO_ARG, cmath.phase(self.m_rho))
        self._Set(CalibrationResultKeys.REFERENCE_TIMES, list(reference_times))
        self._Set(CalibrationResultKeys.SPREAD, spread)
        self._Set(CalibrationResultKeys.DIST_TO_2PI, abs(self.m_rho - 2.0 * math.pi))
        self._Set(CalibrationResultKeys.DIST_TO_2PI_I, abs(self.m_rho - 2.0j * math.pi))
        self._Set(CalibrationResultKeys.ALIGNMENT, alignment)

    def Rho(self) -> complex:
        return self.m_rho

    def ReferenceTimes(self) -> List[float]:
        return self._Get(CalibrationResultKeys.REFERENCE_TIMES)

    def Spread(self) -> float:
        return self._Get(CalibrationResultKeys.SPREAD)

    def Alignment(self) -> float:
        return self._Get(CalibrationResultKeys.ALIGNMENT)

    def DistanceTo2Pi(self) -> float:
        return self._Get(CalibrationResultKeys.DIST_TO_2PI)

    def DistanceTo2PiI(self) -> float:
        return self._Get(CalibrationResultKeys.DIST_TO_2PI_I)


class PrefactorCalibration:
    """
    Class container for the prefactor calibration.
    The reference function is a superposition of eigenfunctions, so its spectral evolution is exact.
    At each reference time, the modulus of the constant restores the norm of the kernel evolution and the
    phase aligns it with the spectral one. Results are cached per magnetic parameters and kernel quadrature,
    the first caller computes them while the others wait.
    """

    m_cache: Dict[Tuple, CalibrationResult] = {}
    m_lock: threading.RLock = threading.RLock()

    @classmethod
    def Calibrate(cls,
                  params: MagneticParams,
                  cfg: TruncationConfig) -> complex:
        """
        Get the calibration constant.

        Args:
            params (MagneticParams object): Magnetic parameters
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            complex: Calibration constant

        Raises:
            CalibrationError: If the constant is not consistent over the reference times
        """
        return cls.Result(params, cfg).Rho()

    @classmethod
    def Result(cls,
               params: MagneticParams,
               cfg: TruncationConfig) -> CalibrationResult:
        """
        Get the calibration result, measuring it at the first call.

        Args:
            params (MagneticParams object): Magnetic parameters
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            CalibrationResult object: Calibration result

        Raises:
            CalibrationError: If the constant is not consistent over the reference times
        """
        key = (params, cfg.QuadNodes(), cfg.EvolveRadialNodes(), cfg.EvolveAngularNodes(), cfg.TimeGuard())
        with cls.m_lock:
            if key not in cls.m_cache:
                logger.debug("Calibrating prefactor for %s", params)
                cls.m_cache[key] = cls.Measure(params, cfg)
                logger.info("Calibrated prefactor for %s: %s", params, cls.m_cache[key].Rho())
            return cls.m_cache[key]

    @classmethod
    def ClearCache(cls) -> None:
        """Clear the cached results."""
        with cls.m_lock:
            cls.m_cache.clear()

    @staticmethod
    def Measure(params: MagneticParams,
                cfg: TruncationConfig) -> CalibrationResult:
        """
        Measure the calibration constant, without caching.

        Args:
            params (MagneticParams object): Magnetic parameters
            cfg (TruncationConfig object) : Truncation configuration

        Returns:
            CalibrationResult object: Calibration result

        Raises:
            CalibrationError: If the constant is not consistent over the reference times
        """
        # The evolution depends on the kernels package
        from py_magnetic_ab_flow.evolve import SchrodingerEvolution, SpectralCoefficients

        reference = SpectralCoefficients.FromModes(params, PrefactorCalibrationConst.REFERENCE_MODES)

        f = SchrodingerEvolution.Synthesize(reference)
        radii, weights = SchrodingerEvolution.OutputRadialRule(f, params, cfg)
        measure = 2.0 * math.pi * weights * radii

        times = [t_unit / params.B0() for t_unit in PrefactorCalibrationConst.REFERENCE_TIMES]
        rhos: List[complex] = []
        alignments: List[float] = []
        for t in times:
            k_values, kernel_modes = SchrodingerEvolution.KernelRadialModes(f, params, t, radii, cfg, 1.0)
            spectral_modes = SchrodingerEvolution.SpectralRadialModes(SchrodingerEvolution.EvolveSpectral(reference, t),
                                                                      radii,
                                                                      k_values)
            kernel_sq = float(np.sum(measure * np.abs(kernel_modes) ** 2))
            spectral_sq = float(np.sum(measure * np.abs(spectral_modes) ** 2))
            overlap = complex(np.sum(measure * np.conj(kernel_modes) * spectral_modes))
            if not (math.isfinite(kernel_sq) and kernel_sq > 0.0 and abs(overlap) > 0.0):
                raise CalibrationError(f"Degenerate kernel evolution at t={t}",
                                       {"t": t, "kernel_norm_sq": kernel_sq, "overlap": abs(overlap)})

            rhos.append(math.sqrt(spectral_sq / kernel_sq) * overlap / abs(overlap))
            alignments.append(abs(overlap) / math.sqrt(kernel_sq * spectral_sq))
            logger.debug("Prefactor at t=%g: %s (alignment %.17g)", t, rhos[-1], alignments[-1])

        rho = complex(np.mean(rhos))
        spread = max(abs(rho_t - rho) for rho_t in rhos) / abs(rho)
        alignment = min(alignments)
        if (spread > PrefactorCalibrationConst.SPREAD_TOL
                or 1.0 - alignment > PrefactorCalibrationConst.ALIGNMENT_TOL):
            raise CalibrationError(
                f"No prefactor makes the kernel evolution unitary (spread {spread}, alignment {alignment})",
                {
                    "reference_times": times,
                    "rho_re": [rho_t.real for rho_t in rhos],
                    "rho_im": [rho_t.imag for rho_t in rhos],
                    "spread": spread,
                    "alignment": alignment,
                }
            )
        return CalibrationResult(rho, times, spread, alignment)

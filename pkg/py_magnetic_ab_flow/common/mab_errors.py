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

"""Module with library errors."""

# Imports
from typing import Any, Dict, Optional


class DomainError(ValueError):
    """Exception in case of an argument outside the domain of an operation."""


class NonIntegerFluxError(DomainError):
    """Exception in case of a magnetic flux too close to an integer."""


class SingularTimeError(ValueError):
    """Exception in case of a time too close to a singular time (B0 * t multiple of pi)."""


class TruncationError(RuntimeError):
    """Exception in case a truncated series cannot reach the requested tail tolerance."""

    m_est_tail: float

    def __init__(self,
                 message: str,
                 est_tail: float) -> None:
        """
        Construct class.

        Args:
            message (str)   : Error message
            est_tail (float): Estimated tail of the truncated series
        """
        super().__init__(message)
        self.m_est_tail = est_tail

    def EstimatedTail(self) -> float:
        """
        Get the estimated tail.

        Returns:
            float: Estimated tail
        """
        return self.m_est_tail


class CalibrationError(RuntimeError):
    """Exception in case the prefactor calibration is not consistent over the reference times."""

    m_diagnostics: Dict[str, Any]

    def __init__(self,
                 message: str,
                 diagnostics: Optional[Dict[str, Any]] = None) -> None:
        """
        Construct class.

        Args:
            message (str)                : Error message
            diagnostics (dict, optional) : Diagnostic values
        """
        super().__init__(message)
        self.m_diagnostics = diagnostics or {}

    def Diagnostics(self) -> Dict[str, Any]:
        """
        Get diagnostics.

        Returns:
            dict: Diagnostic values
        """
        return self.m_diagnostics


class CutoffInsufficientError(RuntimeError):
    """Exception in case a spectral cutoff does not capture the function norm."""

    m_defect: float

    def __init__(self,
                 message: str,
                 defect: float) -> None:
        """
        Construct class.

        Args:
            message (str) : Error message
            defect (float): Relative Parseval defect
        """
        super().__init__(message)
        self.m_defect = defect

    def Defect(self) -> float:
        """
        Get the relative Parseval defect.

        Returns:
            float: Defect
        """
        return self.m_defect


class AccuracyError(RuntimeError):
    """Exception in case a quadrature cannot resolve the requested computation."""


class ConfigError(ValueError):
    """Exception in case of an invalid run configuration."""

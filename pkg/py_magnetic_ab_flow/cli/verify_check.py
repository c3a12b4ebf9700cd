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

"""Module with the verification check record."""

# Imports
from enum import Enum, auto, unique
from typing import Optional

from py_magnetic_ab_flow.common import MabEnumDict


@unique
class VerifyCheckKeys(Enum):
    """Enumerative for verification check fields."""

    SUITE = auto()
    CHECK = auto()
    MEASURED = auto()
    TOLERANCE = auto()
    PASSED = auto()
    DETAIL = auto()


class VerifyCheck(MabEnumDict):
    """Verification check class, a measured error against its tolerance."""

    def __init__(self,
                 suite: str,
                 check: str,
                 measured: Optional[float],
                 tolerance: Optional[float],
                 passed: Optional[bool] = None,
                 detail: Optional[str] = None) -> None:
        """
        Construct class.

        Args:
            suite (str)              : Suite name
            check (str)              : Check description
            measured (float)         : Measured error, None if not measured
            tolerance (float)        : Tolerance, None if not applicable
            passed (bool, optional)  : Outcome, measured <= tolerance if not specified
            detail (str, optional)   : Detail, e.g. the error that stopped the check
        """
        super().__init__(VerifyCheckKeys)
        if passed is None:
            passed = measured is not None and tolerance is not None and measured <= tolerance
        self._Set(VerifyCheckKeys.SUITE, suite)
        self._Set(VerifyCheckKeys.CHECK, check)
        self._Set(VerifyCheckKeys.MEASURED, None if measured is None else float(measured))
        self._Set(VerifyCheckKeys.TOLERANCE, tolerance)
        self._Set(VerifyCheckKeys.PASSED, bool(passed))
        self._Set(VerifyCheckKeys.DETAIL, detail)

    @classmethod
    def Failed(cls,
               suite: str,
               check: str,
               ex: Exception) -> "VerifyCheck":
        """
        Create a failed check from the error that stopped it.

        Args:
            suite (str)         : Suite name
            check (str)         : Check description
            ex (Exception)      : Error

        Returns:
            VerifyCheck object: Failed check
        """
        measured = ex.EstimatedTail() if hasattr(ex, "EstimatedTail") else None
        return cls(suite, check, measured, None, False, f"{type(ex).__name__}: {ex}")

    def Suite(self) -> str:
        return self._Get(VerifyCheckKeys.SUITE)

    def Check(self) -> str:
        return self._Get(VerifyCheckKeys.CHECK)

    def Measured(self) -> Optional[float]:
        return self._Get(VerifyCheckKeys.MEASURED)

    def Tolerance(self) -> Optional[float]:
        return self._Get(VerifyCheckKeys.TOLERANCE)

    def Passed(self) -> bool:
        return self._Get(VerifyCheckKeys.PASSED)

    def Detail(self) -> Optional[str]:
        return self._Get(VerifyCheckKeys.DETAIL)

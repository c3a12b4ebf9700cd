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

"""Module with the Gamma function, Pochhammer symbol and generalized binomial coefficient."""

# Imports
import math
from typing import Tuple

from py_magnetic_ab_flow.common import DomainError


def _ZetaValue(s: int,
               n: int = 20) -> float:
    # Direct sum up to n - 1, Euler-Maclaurin tail from n
    head = math.fsum(j ** -s for j in range(1, n))
    tail = n ** (1 - s) / (s - 1) + 0.5 * n ** -s
    rising = 1.0
    for k, b2k in enumerate((1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0), start=1):
        m = 2 * k - 1
        rising *= (s + m - 1) if m == 1 else (s + m - 2) * (s + m - 1)
        tail += b2k / math.factorial(2 * k) * rising * n ** (-s - m)
    return head + tail


class GammaFunctionConst:
    """Class container for Gamma function constants."""

    # Lanczos approximation, g = 7 with 9 coefficients
    LANCZOS_G: float = 7.0
    LANCZOS_COEFFS: Tuple[float, ...] = (
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    )
    LOG_SQRT_2PI: float = 0.5 * math.log(2.0 * math.pi)
    # Taylor expansion of log(Gamma(1 + eps)), used for |eps| <= SERIES_RADIUS around 1 and 2
    EULER_GAMMA: float = 0.57721566490153286
    SERIES_RADIUS: float = 0.25
    ZETA_VALUES: Tuple[float, ...] = tuple(_ZetaValue(s) for s in range(2, 42))


class GammaFunction:
    """Class container for Gamma function computation."""

    @staticmethod
    def Log(x: float) -> float:
        """
        Compute the logarithm of the Gamma function for a positive real argument.
        The Lanczos approximation is used, with the reflection formula for x < 1/2.
        Around the zeros x = 1 and x = 2 the Taylor series of log(Gamma(1 + eps)) keeps the relative accuracy.

        Args:
            x (float): Argument, strictly positive

        Returns:
            float: log(Gamma(x))

        Raises:
            DomainError: If the argument is not strictly positive
        """
        if not x > 0.0 or not math.isfinite(x):
            raise DomainError(f"Gamma logarithm is defined for positive arguments only ({x})")

        if x < 0.5:
            return math.log(math.pi / math.sin(math.pi * x)) - GammaFunction.Log(1.0 - x)
        if abs(x - 1.0) <= GammaFunctionConst.SERIES_RADIUS:
            return GammaFunction.__LogSeries(x - 1.0)
        if abs(x - 2.0) <= GammaFunctionConst.SERIES_RADIUS:
            return math.log1p(x - 2.0) + GammaFunction.__LogSeries(x - 2.0)

        x -= 1.0
        coeffs = GammaFunctionConst.LANCZOS_COEFFS
        series = coeffs[0]
        for i in range(1, len(coeffs)):
            series += coeffs[i] / (x + i)
        base = x + GammaFunctionConst.LANCZOS_G + 0.5
        return GammaFunctionConst.LOG_SQRT_2PI + (x + 0.5) * math.log(base) - base + math.log(series)

    @staticmethod
    def Value(x: float) -> float:
        """
        Compute the Gamma function for a positive real argument.

        Args:
            x (float): Argument, strictly positive

        Returns:
            float: Gamma(x)

        Raises:
            DomainError: If the argument is not strictly positive
        """
        return math.exp(GammaFunction.Log(x))

    @staticmethod
    def __LogSeries(eps: float) -> float:
        # log(Gamma(1 + eps)) = -gamma * eps + sum_{k >= 2} (-1)^k zeta(k) eps^k / k
        terms = [-GammaFunctionConst.EULER_GAMMA * eps]
        power = -eps
        for k, zeta in enumerate(GammaFunctionConst.ZETA_VALUES, start=2):
            power *= -eps
            terms.append(zeta * power / k)
        return math.fsum(terms)


class Pochhammer:
    """Class container for the Pochhammer symbol (rising factorial)."""

    @staticmethod
    def Compute(a: float,
                n: int) -> float:
        """
        Compute the Pochhammer symbol (a)_n = a * (a + 1) * ... * (a + n - 1), with (a)_0 = 1.

        Args:
            a (float): Base
            n (int)  : Number of factors, non-negative

        Returns:
            float: Pochhammer symbol

        Raises:
            DomainError: If n is not a non-negative integer
        """
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError(f"Pochhammer symbol requires a non-negative integer count ({n})")
        result = 1.0
        for j in range(n):
            result *= a + j
        return result


class Binomial:
    """Class container for the generalized binomial coefficient C(x + m, m)."""

    @staticmethod
    def Compute(nu: float,
                m: int) -> float:
        """
        Compute C(m + nu, m) = (nu + 1)_m / m!.

        Args:
            nu (float): Real shift, greater than -1
            m (int)   : Non-negative integer

        Returns:
            float: Binomial coefficient

        Raises:
            DomainError: If m is not a non-negative integer
        """
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise DomainError(f"Binomial coefficient requires a non-negative integer ({m})")
        result = 1.0
        for j in range(1, m + 1):
            result *= (nu + j) / j
        return result

    @staticmethod
    def Log(nu: float,
            m: int) -> float:
        """
        Compute log(C(m + nu, m)) through Gamma function logarithms.

        Args:
            nu (float): Real shift, greater than -1
            m (int)   : Non-negative integer

        Returns:
            float: Logarithm of the binomial coefficient

        Raises:
            DomainError: If the arguments are not valid
        """
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise DomainError(f"Binomial coefficient requires a non-negative integer ({m})")
        return GammaFunction.Log(m + nu + 1.0) - GammaFunction.Log(m + 1.0) - GammaFunction.Log(nu + 1.0)

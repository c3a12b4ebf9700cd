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

"""Module with some utility functions."""

# Imports
import math
import re
from typing import List, Tuple


class UtilsConst:
    """Class container for utility constants."""

    # Significant digits used when writing floats
    FLOAT_DIGITS: int = 17
    # Accepted number expressions: a float, "pi", or a float times/divided by "pi"
    NUMBER_EXPR_REGEX: str = r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(\*?\s*pi)?\s*(?:/\s*(\d+\.?\d*))?\s*$"


class Utils:
    """Class container for utility functions."""

    @staticmethod
    def DistanceToIntegers(x: float) -> float:
        """
        Get the distance of a real number from the integers.

        Args:
            x (float): Real number

        Returns:
            float: Distance in [0, 1/2]
        """
        return abs(x - round(x))

    @staticmethod
    def ReduceAngle(theta: float) -> float:
        """
        Reduce an angle to [0, 2*pi).

        Args:
            theta (float): Angle

        Returns:
            float: Reduced angle
        """
        two_pi = 2.0 * math.pi
        reduced = math.fmod(theta, two_pi)
        if reduced < 0.0:
            reduced += two_pi
        return 0.0 if reduced >= two_pi else reduced

    @staticmethod
    def PolarToCartesian(r: float,
                         theta: float) -> Tuple[float, float]:
        """
        Convert polar coordinates to Cartesian ones.

        Args:
            r (float)    : Radius
            theta (float): Angle

        Returns:
            tuple[float, float]: Cartesian coordinates
        """
        return r * math.cos(theta), r * math.sin(theta)

    @staticmethod
    def FormatFloat(value: float) -> str:
        """
        Format a float with 17 significant digits.

        Args:
            value (float): Value

        Returns:
            str: Formatted value
        """
        return f"{value:.{UtilsConst.FLOAT_DIGITS}g}"

    @staticmethod
    def ParseNumber(expr: str) -> float:
        """
        Parse a number expression, allowing multiples and fractions of pi (e.g. "pi/4", "0.5*pi").

        Args:
            expr (str): Number expression

        Returns:
            float: Parsed number

        Raises:
            ValueError: If the expression is not valid
        """
        match = re.match(UtilsConst.NUMBER_EXPR_REGEX, expr)
        if match is None or (match.group(1) is None and match.group(2) is None):
            raise ValueError(f"Invalid number expression: {expr}")

        value = float(match.group(1)) if match.group(1) is not None else 1.0
        if match.group(2) is not None:
            value *= math.pi
        if match.group(3) is not None:
            value /= float(match.group(3))
        return value

    @staticmethod
    def ParseNumberList(expr: str) -> List[float]:
        """
        Parse a comma-separated list of number expressions.

        Args:
            expr (str): Comma-separated number expressions

        Returns:
            list[float]: Parsed numbers

        Raises:
            ValueError: If an expression is not valid
        """
        return [Utils.ParseNumber(item) for item in expr.split(",") if item.strip() != ""]

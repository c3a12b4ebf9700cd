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

"""Module with the coefficients of a function in the eigenbasis of the magnetic operator."""

# Imports
import math
from typing import Iterator, Sequence, Tuple

import numpy as np

from py_magnetic_ab_flow.common import DomainError, MagneticParams, ModeIndex
from py_magnetic_ab_flow.spectrum import MagneticSpectrum


class SpectralCoefficients:
    """
    Spectral coefficients class.
    Coefficients are stored against the normalized eigenfunctions V_{k,m} / ||V_{k,m}||, as an array
    indexed by (k + k_max, m). The coefficient of the raw eigenfunction V_{k,m} is the normalized one
    divided by ||V_{k,m}||.
    """

    m_params: MagneticParams
    m_k_max: int
    m_m_max: int
    m_coeffs: np.ndarray

    def __init__(self,
                 params: MagneticParams,
                 coeffs: np.ndarray) -> None:
        """
        Construct class.

        Args:
            params (MagneticParams object): Magnetic parameters
            coeffs (numpy.ndarray)        : Normalized coefficients of shape (2 * k_max + 1, m_max + 1)

        Raises:
            DomainError: If the array shape is not valid
        """
        coeffs = np.array(coeffs, dtype=complex)
        if coeffs.ndim != 2 or coeffs.shape[0] % 2 != 1:
            raise DomainError(f"Invalid spectral coefficients shape {coeffs.shape}")
        self.m_params = params
        self.m_k_max = (coeffs.shape[0] - 1) // 2
        self.m_m_max = coeffs.shape[1] - 1
        self.m_coeffs = coeffs

    @classmethod
    def FromModes(cls,
                  params: MagneticParams,
                  modes: Sequence[Tuple[int, int]]) -> "SpectralCoefficients":
        """
        Create the unit-norm superposition of some normalized eigenfunctions with equal weights.

        Args:
            params (MagneticParams object): Magnetic parameters
            modes (list[tuple[int, int]])  : Distinct (k, m) pairs

        Returns:
            SpectralCoefficients object: SpectralCoefficients object

        Raises:
            DomainError: If the modes are empty or repeated
        """
        if not modes or len(set(modes)) != len(modes):
            raise DomainError(f"Superposition modes shall be distinct and not empty ({modes})")
        k_max = max(abs(k) for k, _ in modes)
        m_max = max(m for _, m in modes)
        array = np.zeros((2 * k_max + 1, m_max + 1), dtype=complex)
        for k, m in modes:
            array[k + k_max, m] = 1.0 / math.sqrt(len(modes))
        return cls(params, array)

    def Params(self) -> MagneticParams:
        return self.m_params

    def KMax(self) -> int:
        return self.m_k_max

    def MMax(self) -> int:
        return self.m_m_max

    def NormalizedArray(self) -> np.ndarray:
        """
        Get a copy of the normalized coefficients.

        Returns:
            numpy.ndarray: Array of shape (2 * k_max + 1, m_max + 1)
        """
        return self.m_coeffs.copy()

    def NormalizedCoefficient(self,
                              mode: ModeIndex) -> complex:
        """
        Get the coefficient of a normalized eigenfunction, zero outside the cutoff.

        Args:
            mode (ModeIndex object): Mode index

        Returns:
            complex: Coefficient
        """
        if abs(mode.K()) > self.m_k_max or mode.M() > self.m_m_max:
            return 0.0j
        return complex(self.m_coeffs[mode.K() + self.m_k_max, mode.M()])

    def Coefficient(self,
                    mode: ModeIndex) -> complex:
        """
        Get the coefficient of a raw eigenfunction, zero outside the cutoff.

        Args:
            mode (ModeIndex object): Mode index

        Returns:
            complex: Coefficient
        """
        return self.NormalizedCoefficient(mode) / math.sqrt(MagneticSpectrum.NormSquared(self.m_params, mode))

    def Items(self) -> Iterator[Tuple[ModeIndex, complex]]:
        """
        Iterate over modes and raw eigenfunction coefficients, k first then m.

        Returns:
            iterator: Iterator over (mode, coefficient) pairs
        """
        for k in range(-self.m_k_max, self.m_k_max + 1):
            for m in range(self.m_m_max + 1):
                mode = ModeIndex(k, m)
                yield mode, self.Coefficient(mode)

    def L2NormSquared(self) -> float:
        """
        Get the squared L2 norm of the represented function, sum of the squared normalized coefficients.

        Returns:
            float: Squared norm
        """
        return float(np.sum(np.abs(self.m_coeffs) ** 2))

    def Eigenvalues(self) -> np.ndarray:
        """
        Get the eigenvalues of the modes, same layout of the coefficients.

        Returns:
            numpy.ndarray: Eigenvalues
        """
        shifted = np.arange(-self.m_k_max, self.m_k_max + 1)[:, None] + self.m_params.Alpha()
        radial = np.arange(self.m_m_max + 1)[None, :]
        return (2 * radial + 1 + np.abs(shifted) + shifted) * self.m_params.B0()

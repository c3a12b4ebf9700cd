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

# Imports
import cmath
import math
import unittest

import numpy as np

from py_magnetic_ab_flow import (
    DomainError, MagneticParams, MagneticSpectrum, ModeIndex, NonIntegerFluxError, PolarPoint
)


# Test vector for eigenvalues
TEST_VECT_EIGENVALUES = [
    {"alpha": 0.5, "b0": 1.0, "k": -1, "m": 0, "lambda": 1.0},
    {"alpha": 0.5, "b0": 1.0, "k": 0, "m": 0, "lambda": 2.0},
    {"alpha": 0.3, "b0": 2.0, "k": 1, "m": 2, "lambda": 15.2},
    {"alpha": 0.3, "b0": 2.0, "k": -3, "m": 1, "lambda": 6.0},
    {"alpha": -0.25, "b0": 1.5, "k": 2, "m": 0, "lambda": 6.75},
]

# Test vector for flux distances
TEST_VECT_FLUX_DISTANCE = [
    {"alpha": 0.5, "mu": 0.5},
    {"alpha": 1.7, "mu": 0.3},
    {"alpha": -0.2, "mu": 0.2},
    {"alpha": 2.0, "mu": 0.0},
]

# Test vector for multiplicities, alpha = 0.5 and B0 = 1
TEST_VECT_MULTIPLICITY = [
    {"lambda": 2.0, "window": 5, "multiplicity": 1, "landau": False},
    {"lambda": 4.0, "window": 5, "multiplicity": 2, "landau": False},
    {"lambda": 1.0, "window": 5, "multiplicity": 5, "landau": True},
    {"lambda": 3.0, "window": 8, "multiplicity": 8, "landau": True},
    {"lambda": 2.5, "window": 5, "multiplicity": 0, "landau": False},
]

# Modes of the residual checks
TEST_VECT_RESIDUAL_MODES = [(0, 0), (1, 0), (-1, 0), (2, 1), (-2, 1), (0, 3), (3, 2), (-4, 2)]


#
# Tests
#
class MagneticSpectrumTests(unittest.TestCase):
    # Test eigenvalues
    def test_eigenvalue(self):
        for test in TEST_VECT_EIGENVALUES:
            params = MagneticParams(test["alpha"], test["b0"])
            lam = MagneticSpectrum.Eigenvalue(params, ModeIndex(test["k"], test["m"]))
            self.assertAlmostEqual(lam, test["lambda"], delta=1e-12)

    # Test flux distance
    def test_flux_distance(self):
        for test in TEST_VECT_FLUX_DISTANCE:
            self.assertAlmostEqual(MagneticSpectrum.FluxDistance(test["alpha"]), test["mu"], delta=1e-14)

    # Test multiplicities and Landau levels
    def test_multiplicity(self):
        params = MagneticParams(0.5, 1.0)
        for test in TEST_VECT_MULTIPLICITY:
            self.assertEqual(MagneticSpectrum.Multiplicity(params, test["lambda"], test["window"]),
                             test["multiplicity"])
            self.assertEqual(MagneticSpectrum.IsLandauLevel(params, test["lambda"]), test["landau"])

    # Test mode enumeration order
    def test_modes(self):
        params = MagneticParams(0.5, 1.0)
        modes = MagneticSpectrum.Modes(params, 1, 2)
        self.assertEqual(len(modes), 9)
        self.assertEqual(modes[0].ToTuple(), (-1, 0))
        eigenvalues = [MagneticSpectrum.Eigenvalue(params, mode) for mode in modes]
        self.assertEqual(eigenvalues, sorted(eigenvalues))

    # Test closed-form norms against quadrature
    def test_norm(self):
        for alpha, b0 in ((0.5, 1.0), (0.3, 2.0)):
            params = MagneticParams(alpha, b0)
            for k in range(-5, 6):
                for m in range(6):
                    mode = ModeIndex(k, m)
                    exact = MagneticSpectrum.NormSquared(params, mode)
                    self.assertLess(abs(MagneticSpectrum.NormSquaredQuadrature(params, mode) - exact) / exact, 1e-8)

    # Test orthogonality of eigenfunctions
    def test_orthogonality(self):
        params = MagneticParams(0.5, 1.0)
        modes = [ModeIndex(0, 0), ModeIndex(0, 1), ModeIndex(1, 0), ModeIndex(-1, 2), ModeIndex(2, 1)]
        for i, mode_a in enumerate(modes):
            for j, mode_b in enumerate(modes):
                inner = MagneticSpectrum.InnerProduct(params, mode_a, mode_b)
                norm = math.sqrt(MagneticSpectrum.NormSquared(params, mode_a) * MagneticSpectrum.NormSquared(params, mode_b))
                self.assertAlmostEqual(abs(inner / norm - (1.0 if i == j else 0.0)), 0.0, delta=1e-8)

    # Test the radial eigen-equation residual
    def test_residual(self):
        for alpha, b0 in ((0.5, 1.0), (0.3, 2.0)):
            params = MagneticParams(alpha, b0)
            radii = np.linspace(0.2, 3.0, 15)
            for k, m in TEST_VECT_RESIDUAL_MODES:
                mode = ModeIndex(k, m)
                scale = MagneticSpectrum.Eigenvalue(params, mode) * max(
                    abs(MagneticSpectrum.RadialProfile(params, mode, float(r))) for r in radii
                )
                for r in radii:
                    self.assertLess(MagneticSpectrum.EigenResidual(params, mode, float(r)) / scale, 1e-8)

    # Test analytic derivatives against finite differences
    def test_profile_derivatives(self):
        params = MagneticParams(0.3, 2.0)
        step = 1e-5
        for k, m in ((0, 0), (-2, 1), (3, 2)):
            mode = ModeIndex(k, m)
            for r in (0.4, 1.0, 2.2):
                value, first, second = MagneticSpectrum.RadialProfileDerivatives(params, mode, r)
                plus = MagneticSpectrum.RadialProfile(params, mode, r + step)
                minus = MagneticSpectrum.RadialProfile(params, mode, r - step)
                self.assertAlmostEqual(value, MagneticSpectrum.RadialProfile(params, mode, r), delta=1e-12 * max(1.0, abs(value)))
                self.assertAlmostEqual(first, (plus - minus) / (2.0 * step), delta=1e-7)
                self.assertAlmostEqual(second, (plus - 2.0 * value + minus) / step ** 2, delta=1e-3)

    # Test eigenfunction values
    def test_eigenfunction(self):
        params = MagneticParams(0.5, 1.0)
        mode = ModeIndex(2, 1)
        p = PolarPoint(1.3, 0.7)
        expected = MagneticSpectrum.RadialProfile(params, mode, 1.3) * cmath.exp(2j * 0.7)
        self.assertAlmostEqual(abs(MagneticSpectrum.Eigenfunction(params, mode, p) - expected), 0.0, delta=1e-15)
        # Profiles vanish at the origin for a non-integer flux
        self.assertEqual(MagneticSpectrum.RadialProfile(params, ModeIndex(0, 0), 0.0), 0.0)

    # Test support radius
    def test_support_radius(self):
        params = MagneticParams(0.5, 1.0)
        for k, m in ((0, 0), (3, 4)):
            mode = ModeIndex(k, m)
            radius = MagneticSpectrum.SupportRadius(params, mode)
            peak = max(abs(MagneticSpectrum.RadialProfile(params, mode, r)) for r in np.linspace(0.1, radius, 200))
            self.assertLess(abs(MagneticSpectrum.RadialProfile(params, mode, radius)), 1e-12 * peak)

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(NonIntegerFluxError, MagneticParams, 1.0, 1.0)
        self.assertRaises(NonIntegerFluxError, MagneticParams, -2.0, 1.0)
        self.assertRaises(DomainError, MagneticParams, 0.5, 0.0)
        self.assertRaises(DomainError, MagneticParams, 0.5, -1.0)
        self.assertRaises(DomainError, MagneticParams, math.nan, 1.0)
        self.assertRaises(DomainError, ModeIndex, 0, -1)
        self.assertRaises(DomainError, PolarPoint, -1.0, 0.0)

        params = MagneticParams(0.5, 1.0)
        self.assertRaises(DomainError, MagneticSpectrum.EigenResidual, params, ModeIndex(0, 0), 0.0)
        self.assertRaises(DomainError, MagneticSpectrum.RadialProfileDerivatives, params, ModeIndex(0, 0), -1.0)
        self.assertRaises(DomainError, MagneticSpectrum.Multiplicity, params, 1.0, 0)

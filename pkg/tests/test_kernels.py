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
from scipy import special

from py_magnetic_ab_flow import (
    BesselSeriesKernel, CalibrationResult, DomainError, HeatKernel, MagneticParams, MehlerKernel, PoissonIdentity,
    PolarPoint, PrefactorCalibration, PrefactorCalibrationConst, SingularTimeError, TruncationConfig, TruncationError
)


# Test vector for the Mehler kernel, B0 = 1
TEST_VECT_MEHLER = [
    {"t": 0.3, "x": (0.5, 0.2), "y": (-0.4, 1.1)},
    {"t": math.pi / 4.0, "x": (1.0, 0.0), "y": (0.5, 0.5)},
    {"t": 2.0, "x": (-1.3, 0.7), "y": (0.0, -0.6)},
]

# Test vector for the Poisson kernel identity
TEST_VECT_POISSON = [
    {"nu": nu, "a": a, "b": b, "c": c}
    for nu in (0.3, 0.5, 1.7)
    for a in (0.5, 2.0)
    for b in (0.7, 1.5)
    for c in (0.5, 1.0, 2.0)
]

# Test vector for the heat kernel
TEST_VECT_HEAT_KERNEL = [
    {"alpha": 0.5, "b0": 1.0, "tau": 0.25, "x": (0.5, 0.3), "y": (0.8, 1.1)},
    {"alpha": 0.5, "b0": 1.0, "tau": 1.0, "x": (1.2, 2.0), "y": (1.5, 4.0)},
    {"alpha": 0.3, "b0": 2.0, "tau": 0.25, "x": (0.9, 0.0), "y": (0.9, 3.0)},
]


#
# Tests
#
class MehlerKernelTests(unittest.TestCase):
    # Test both Mehler forms
    def test_vector(self):
        for test in TEST_VECT_MEHLER:
            value = MehlerKernel.Evaluate(1.0, test["t"], test["x"], test["y"])
            rot_value = MehlerKernel.EvaluateRotForm(1.0, test["t"], test["x"], test["y"])
            self.assertAlmostEqual(abs(value - rot_value), 0.0, delta=1e-13)
            self.assertAlmostEqual(abs(value), 1.0 / (4.0 * math.pi * abs(math.sin(test["t"]))), delta=1e-13)

            spectral = MehlerKernel.SpectralForm(1.0, test["t"], test["x"], test["y"])
            expected = 1j * MehlerKernel.Evaluate(1.0, -test["t"], test["x"], test["y"])
            self.assertAlmostEqual(abs(spectral - expected), 0.0, delta=1e-15)

    # Test the value at the origin
    def test_origin(self):
        b0 = 2.0
        t = math.pi / (2.0 * b0)
        self.assertAlmostEqual(abs(MehlerKernel.Evaluate(b0, t, (0.0, 0.0), (0.0, 0.0)) - b0 / (4.0 * math.pi)),
                               0.0, delta=1e-15)

    # Test rotation matrix
    def test_rotation_matrix(self):
        rot = MehlerKernel.RotationMatrix(math.pi / 2.0)
        self.assertTrue(np.allclose(rot @ np.asarray([1.0, 0.0]), [0.0, 1.0], atol=1e-15))
        self.assertTrue(np.allclose(rot @ rot.T, np.eye(2), atol=1e-15))

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(SingularTimeError, MehlerKernel.Evaluate, 1.0, math.pi, (1.0, 0.0), (0.0, 1.0))
        self.assertRaises(SingularTimeError, MehlerKernel.Evaluate, 2.0, 0.0, (1.0, 0.0), (0.0, 1.0))
        self.assertRaises(SingularTimeError, MehlerKernel.EvaluateRotForm, 1.0, 2.0 * math.pi + 1e-4,
                          (1.0, 0.0), (0.0, 1.0))
        self.assertRaises(SingularTimeError, MehlerKernel.SpectralForm, 1.0, -math.pi, (1.0, 0.0), (0.0, 1.0))
        # Custom time guard
        self.assertRaises(SingularTimeError, MehlerKernel.Evaluate, 1.0, math.pi - 0.05, (1.0, 0.0), (0.0, 1.0), 0.1)


class PoissonIdentityTests(unittest.TestCase):
    # Test the identity on the grid
    def test_vector(self):
        for test in TEST_VECT_POISSON:
            self.assertLess(PoissonIdentity.Residual(test["nu"], test["a"], test["b"], test["c"], 200), 1e-8)

    # Test that a short spectral sum does not satisfy the identity
    def test_truncated_sum(self):
        self.assertGreater(PoissonIdentity.Residual(0.5, 2.0, 1.5, 0.5, 2), 1e-4)

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(DomainError, PoissonIdentity.LeftSide, -0.5, 1.0, 1.0, 1.0, 10)
        self.assertRaises(DomainError, PoissonIdentity.LeftSide, 0.5, 0.0, 1.0, 1.0, 10)
        self.assertRaises(DomainError, PoissonIdentity.RightSide, 0.5, 1.0, -1.0, 1.0)
        self.assertRaises(DomainError, PoissonIdentity.Residual, 0.5, 1.0, 1.0, 0.0, 10)


class HeatKernelTests(unittest.TestCase):
    # Test spectral sum against the closed form
    def test_vector(self):
        cfg = TruncationConfig()
        for test in TEST_VECT_HEAT_KERNEL:
            params = MagneticParams(test["alpha"], test["b0"])
            pair = HeatKernel.Pair(params, test["tau"], PolarPoint(*test["x"]), PolarPoint(*test["y"]), cfg)
            self.assertLess(pair.RelativeDifference(), 1e-8)
            self.assertEqual(pair.ToDict()["rel_diff"], pair.RelativeDifference())

    # Test the lowest level dominance at large imaginary time
    def test_lowest_level(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig(k_max=32, m_max=32)
        x, y = PolarPoint(0.7, 0.2), PolarPoint(0.9, 1.0)
        full = HeatKernel.Spectral(params, 20.0, x, y, cfg)
        lowest = HeatKernel.LowestLevel(params, 20.0, x, y, cfg)
        self.assertLess(abs(full - lowest) / abs(lowest), 1e-6)

    # Test invalid parameters
    def test_invalid_params(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig(k_max=4, m_max=4)
        x, y = PolarPoint(0.7, 0.2), PolarPoint(0.9, 1.0)
        self.assertRaises(DomainError, HeatKernel.Spectral, params, 0.0, x, y, cfg)
        self.assertRaises(DomainError, HeatKernel.Closed, params, -1.0, x, y, cfg)
        self.assertRaises(DomainError, HeatKernel.Pair, params, math.inf, x, y, cfg)


class BesselSeriesKernelTests(unittest.TestCase):
    # Test the kernel with the calibration constant 2 * pi against the zero-flux kernel
    def test_alpha_limit(self):
        params = MagneticParams(1e-4, 1.0)
        cfg = TruncationConfig()
        for test in TEST_VECT_MEHLER:
            x = PolarPoint.FromCartesian(*test["x"])
            y = PolarPoint.FromCartesian(*test["y"])
            value = BesselSeriesKernel.Evaluate(params, test["t"], x, y, cfg, 2.0 * math.pi)
            mehler = MehlerKernel.SpectralForm(1.0, test["t"], test["x"], test["y"])
            self.assertLess(abs(value.Value() - mehler) / abs(mehler), 1e-3)
            self.assertEqual(value.KTermsUsed(), 2 * cfg.KMax() + 1)
            self.assertLessEqual(value.EstTail(), cfg.TailTol())

    # Test the kernel modulus, which depends on the angles only through their difference
    def test_rotation_invariance(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig()
        value = BesselSeriesKernel.Evaluate(params, 0.7, PolarPoint(1.0, 0.3), PolarPoint(0.8, 1.2), cfg,
                                            2.0 * math.pi)
        rotated = BesselSeriesKernel.Evaluate(params, 0.7, PolarPoint(1.0, 1.3), PolarPoint(0.8, 2.2), cfg,
                                              2.0 * math.pi)
        self.assertAlmostEqual(abs(value.Value()), abs(rotated.Value()), delta=1e-12)

    # Test the angular series against a direct sum
    def test_angular_series(self):
        params = MagneticParams(0.3, 1.0)
        w = np.asarray([2.5j, -4.0j])
        phi = np.asarray([0.0, 1.1])
        series = BesselSeriesKernel.AngularSeries(params, 20, w, phi, 200)
        self.assertEqual(series.shape, (2, 2))
        for i, angle in enumerate(phi):
            for j, arg in enumerate(w):
                direct = sum(cmath.exp(1j * k * angle) * special.iv(abs(k + 0.3), arg) for k in range(-20, 21))
                self.assertAlmostEqual(abs(series[i, j] - direct), 0.0, delta=1e-11)

    # Test tail bounds and required cutoffs
    def test_tail(self):
        params = MagneticParams(0.5, 1.0)
        w = 10.0j
        self.assertGreater(BesselSeriesKernel.TailBound(params, w, 10), BesselSeriesKernel.TailBound(params, w, 20))
        k_max = BesselSeriesKernel.RequiredKMax(params, w, 1e-10)
        self.assertLessEqual(BesselSeriesKernel.TailBound(params, w, k_max), 1.01e-10)
        self.assertGreater(BesselSeriesKernel.TailBound(params, w, k_max - 1), 0.99e-10)
        self.assertEqual(BesselSeriesKernel.RequiredKMax(params, w, 1e-10, k_max + 5), k_max + 5)

        # Tolerances far below the size of the first dropped terms are met too
        w_far = complex(BesselSeriesKernel.BesselArgument(params, 0.7, np.asarray([16.0]))[0])
        for tail_tol in (1e-30, 1e-300):
            k_max = BesselSeriesKernel.RequiredKMax(params, w_far, tail_tol)
            self.assertLessEqual(BesselSeriesKernel.TailBound(params, w_far, k_max), 1.01 * tail_tol)
            self.assertGreater(BesselSeriesKernel.TailBound(params, w_far, k_max - 1), 0.99 * tail_tol)

    # Test that the tail bound covers the actual truncation error
    def test_tail_covers_truncation(self):
        params = MagneticParams(0.5, 1.0)
        w = np.asarray([-5.0j, 12.0j])
        phi = np.asarray([0.0, 0.7, 2.0])
        reference = BesselSeriesKernel.AngularSeries(params, 80, w, phi, 200)

        for k_max in (6, 10, 16):
            truncated = BesselSeriesKernel.AngularSeries(params, k_max, w, phi, 200)
            for j, arg in enumerate(w):
                error = float(np.max(np.abs(truncated[:, j] - reference[:, j])))
                tail = BesselSeriesKernel.TailBound(params, complex(arg), k_max)
                self.assertLessEqual(error, 2.0 * tail + 1e-12)

    # Test invalid parameters
    def test_invalid_params(self):
        params = MagneticParams(0.5, 1.0)
        x, y = PolarPoint(2.0, 0.0), PolarPoint(3.0, 1.0)
        cfg = TruncationConfig()
        self.assertRaises(SingularTimeError, BesselSeriesKernel.Evaluate, params, math.pi, x, y, cfg, 2.0 * math.pi)
        self.assertRaises(SingularTimeError, BesselSeriesKernel.Evaluate, params, 0.0, x, y, cfg, 2.0 * math.pi)

        # A short series cannot meet a tight tolerance
        with self.assertRaises(TruncationError) as ctx:
            BesselSeriesKernel.Evaluate(params, 0.5, x, y, cfg.Replace(k_max=2, tail_tol=1e-30), 2.0 * math.pi)
        self.assertGreater(ctx.exception.EstimatedTail(), 1e-30)
        # No cutoff up to the maximum one reaches a tail below the tolerance for such a large argument
        with self.assertRaises(TruncationError) as ctx:
            BesselSeriesKernel.RequiredKMax(params, 1e4j, 1e-10)
        self.assertGreater(ctx.exception.EstimatedTail(), 1e-10)


class PrefactorCalibrationTests(unittest.TestCase):
    # Test the calibration constant
    def test_vector(self):
        PrefactorCalibration.ClearCache()
        for alpha, b0 in ((0.5, 1.0), (0.3, 2.0)):
            params = MagneticParams(alpha, b0)
            result = PrefactorCalibration.Result(params, TruncationConfig())
            self.assertTrue(isinstance(result, CalibrationResult))
            self.assertLess(result.DistanceTo2Pi() / (2.0 * math.pi), 1e-5)
            self.assertGreater(result.DistanceTo2PiI(), 1.0)
            self.assertLessEqual(result.Spread(), PrefactorCalibrationConst.SPREAD_TOL)
            self.assertGreaterEqual(result.Alignment(), 1.0 - PrefactorCalibrationConst.ALIGNMENT_TOL)
            self.assertEqual(len(result.ReferenceTimes()), len(PrefactorCalibrationConst.REFERENCE_TIMES))
            # Cached value
            self.assertEqual(PrefactorCalibration.Calibrate(params, TruncationConfig()), result.Rho())

    # Test the calibrated kernel against the zero-flux kernel
    def test_calibrated_kernel(self):
        params = MagneticParams(1e-4, 1.0)
        cfg = TruncationConfig()
        x, y = (0.6, -0.3), (1.0, 0.9)
        value = BesselSeriesKernel.Evaluate(params, 0.9, PolarPoint.FromCartesian(*x), PolarPoint.FromCartesian(*y), cfg)
        mehler = MehlerKernel.SpectralForm(1.0, 0.9, x, y)
        self.assertLess(abs(value.Value() - mehler) / abs(mehler), 1e-3)

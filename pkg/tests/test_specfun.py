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
import math
import unittest

import numpy as np
from scipy import special

from py_magnetic_ab_flow import (
    BesselI, Binomial, DomainError, GammaFunction, GaussQuadrature, Laguerre, PkmPolynomial, Pochhammer
)


# Test vector for Gamma function logarithm
TEST_VECT_GAMMA = [0.1, 0.3, 0.5, 0.8, 1.0, 1.5, 2.5, 7.3, 10.0, 50.3, 170.5]
# Arguments close to the zeros of the Gamma function logarithm
TEST_VECT_GAMMA_NEAR_ZEROS = [1.2, 1.76, 2.0, 2.0 + 1e-7, 2.0 + 1e-4, 2.24]
# Offsets eps from 1, checked against the Taylor polynomial of log(Gamma(1 + eps))
TEST_VECT_GAMMA_NEAR_ONE = [-1e-5, -1e-6, 1e-6, 1e-8]

# Test vector for Pochhammer symbol
TEST_VECT_POCHHAMMER = [
    {"a": 2.0, "n": 3, "result": 24.0},
    {"a": 0.5, "n": 0, "result": 1.0},
    {"a": -3.0, "n": 2, "result": 6.0},
    {"a": -3.0, "n": 4, "result": 0.0},
    {"a": 1.5, "n": 2, "result": 3.75},
]

# Test vector for binomial coefficients C(m + nu, m)
TEST_VECT_BINOMIAL = [
    {"nu": 0.5, "m": 2, "result": 1.875},
    {"nu": 0.0, "m": 5, "result": 1.0},
    {"nu": 2.0, "m": 3, "result": 10.0},
]

# Parameters for Laguerre and Bessel functions
TEST_VECT_ALPHAS = [0.0, 0.3, 0.5, 1.7]
TEST_VECT_LAGUERRE_ARGS = [0.0, 0.1, 1.0, 5.0, 12.0]
TEST_VECT_BESSEL_ORDERS = [0.0, 0.3, 0.5, 1.7, 5.5]
TEST_VECT_BESSEL_ARGS = [0.1, 1.0, 3.5, 10.0, 25.0]


#
# Tests
#
class GammaTests(unittest.TestCase):
    # Test Gamma function logarithm against scipy
    def test_log(self):
        for x in TEST_VECT_GAMMA:
            expected = special.gammaln(x)
            self.assertAlmostEqual(GammaFunction.Log(x), expected, delta=1e-13 * abs(expected))

    # Test relative accuracy of the Gamma function logarithm close to its zeros
    def test_log_near_zeros(self):
        for x in TEST_VECT_GAMMA_NEAR_ZEROS:
            expected = special.gammaln(x)
            self.assertAlmostEqual(GammaFunction.Log(x), expected, delta=1e-13 * abs(expected))
        for eps in TEST_VECT_GAMMA_NEAR_ONE:
            x = 1.0 + eps
            eps = x - 1.0
            expected = math.fsum([
                -0.57721566490153286 * eps,
                math.pi ** 2 / 12.0 * eps ** 2,
                -1.2020569031595943 / 3.0 * eps ** 3,
                math.pi ** 4 / 360.0 * eps ** 4,
            ])
            self.assertAlmostEqual(GammaFunction.Log(x), expected, delta=1e-13 * abs(expected))

    # Test Gamma function values at integers and half-integers
    def test_value(self):
        self.assertAlmostEqual(GammaFunction.Value(5.0), 24.0, delta=1e-12)
        self.assertAlmostEqual(GammaFunction.Value(0.5), math.sqrt(math.pi), delta=1e-13)

    # Test Pochhammer symbol
    def test_pochhammer(self):
        for test in TEST_VECT_POCHHAMMER:
            self.assertAlmostEqual(Pochhammer.Compute(test["a"], test["n"]), test["result"], delta=1e-14)

    # Test binomial coefficients and their logarithm
    def test_binomial(self):
        for test in TEST_VECT_BINOMIAL:
            self.assertAlmostEqual(Binomial.Compute(test["nu"], test["m"]), test["result"], delta=1e-14)
            self.assertAlmostEqual(Binomial.Log(test["nu"], test["m"]), math.log(test["result"]), delta=1e-12)

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(DomainError, GammaFunction.Log, 0.0)
        self.assertRaises(DomainError, GammaFunction.Log, -1.5)
        self.assertRaises(DomainError, GammaFunction.Log, math.inf)
        self.assertRaises(DomainError, Pochhammer.Compute, 1.0, -1)
        self.assertRaises(DomainError, Pochhammer.Compute, 1.0, 1.5)
        self.assertRaises(DomainError, Pochhammer.Compute, 1.0, True)
        self.assertRaises(DomainError, Binomial.Compute, 0.5, -2)
        # Domain errors are value errors
        self.assertRaises(ValueError, GammaFunction.Log, 0.0)


class LaguerreTests(unittest.TestCase):
    # Test explicit sum and recurrence against scipy
    def test_vector(self):
        for alpha in TEST_VECT_ALPHAS:
            for m in range(9):
                for t in TEST_VECT_LAGUERRE_ARGS:
                    expected = special.eval_genlaguerre(m, alpha, t)
                    delta = 1e-10 * max(1.0, abs(expected))
                    self.assertAlmostEqual(Laguerre.Evaluate(alpha, m, t), expected, delta=delta)
                    self.assertAlmostEqual(Laguerre.EvaluateRecurrence(alpha, m, t), expected, delta=delta)

    # Test the orthonormality of the Laguerre functions
    def test_function_table(self):
        for nu in TEST_VECT_ALPHAS:
            nodes, weights = GaussQuadrature.GenLaguerre(40, nu)
            table = Laguerre.FunctionTable(nu, 10, nodes)
            self.assertEqual(table.shape, (11, nodes.size))
            # Remove the quadrature weight, already contained in the functions
            scaled = table / np.sqrt(nodes ** nu * np.exp(-nodes))
            gram = (scaled * weights[None, :]) @ scaled.T
            self.assertTrue(np.allclose(gram, np.eye(11), atol=1e-10))

    # Test normalized table against the explicit sum
    def test_normalized_table(self):
        u = np.asarray([0.2, 1.0, 4.0])
        nu = 0.5
        table = Laguerre.NormalizedTable(nu, 6, u)
        for m in range(7):
            norm = math.exp(0.5 * (special.gammaln(m + 1.0) - special.gammaln(m + nu + 1.0)))
            for i, ui in enumerate(u):
                self.assertAlmostEqual(table[m, i], norm * Laguerre.Evaluate(nu, m, float(ui)), delta=1e-12)

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(DomainError, Laguerre.Evaluate, -1.0, 2, 1.0)
        self.assertRaises(DomainError, Laguerre.Evaluate, 0.5, -1, 1.0)
        self.assertRaises(DomainError, Laguerre.EvaluateRecurrence, 0.5, 2.5, 1.0)
        self.assertRaises(DomainError, Laguerre.FunctionTable, 0.5, 3, np.asarray([-1.0]))


class PkmTests(unittest.TestCase):
    # Test explicit sum against the Laguerre form
    def test_vector(self):
        for alpha in (0.3, 0.5):
            for k in range(-5, 6):
                for m in range(11):
                    abs_coeffs = np.abs(PkmPolynomial.Coefficients(k, m, alpha))
                    for rho in (0.1, 0.5, 1.0, 2.0, 5.0):
                        scale = float(np.polynomial.polynomial.polyval(rho, abs_coeffs))
                        reference = PkmPolynomial.EvaluateFromLaguerre(k, m, alpha, rho)
                        diff = abs(PkmPolynomial.Evaluate(k, m, alpha, rho) - reference)
                        self.assertLess(diff / scale, 1e-12)
                        # Plain relative error away from the roots
                        if abs(reference) >= 1e-2 * scale:
                            self.assertLess(diff / abs(reference), 1e-10)

    # Test values at the origin and the degree
    def test_coefficients(self):
        for k in (-2, 0, 3):
            coeffs = PkmPolynomial.Coefficients(k, 4, 0.5)
            self.assertEqual(coeffs.size, 5)
            self.assertEqual(PkmPolynomial.Evaluate(k, 4, 0.5, 0.0), 1.0)

    # Test derivatives against finite differences
    def test_derivatives(self):
        rho = np.asarray([0.5, 1.5])
        step = 1e-5
        value, first, second = PkmPolynomial.EvaluateWithDerivatives(1, 3, 0.3, rho)
        for i, r in enumerate(rho):
            plus = PkmPolynomial.Evaluate(1, 3, 0.3, float(r) + step)
            minus = PkmPolynomial.Evaluate(1, 3, 0.3, float(r) - step)
            self.assertAlmostEqual(value[i], PkmPolynomial.Evaluate(1, 3, 0.3, float(r)), delta=1e-13)
            self.assertAlmostEqual(first[i], (plus - minus) / (2.0 * step), delta=1e-7)
            self.assertAlmostEqual(second[i], (plus - 2.0 * value[i] + minus) / step ** 2, delta=1e-3)

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(DomainError, PkmPolynomial.Coefficients, 0, -1, 0.5)
        self.assertRaises(DomainError, PkmPolynomial.Evaluate, 0, 1.5, 0.5, 1.0)


class BesselTests(unittest.TestCase):
    # Test real and imaginary arguments against scipy
    def test_vector(self):
        for nu in TEST_VECT_BESSEL_ORDERS:
            for x in TEST_VECT_BESSEL_ARGS:
                expected = special.iv(nu, x)
                self.assertAlmostEqual(abs(BesselI.Evaluate(nu, x) - expected) / expected, 0.0, delta=1e-11)

                # I_nu(ix) = i^nu * J_nu(x) on the principal branch
                expected = np.exp(0.5j * math.pi * nu) * special.jv(nu, x)
                value = BesselI.Evaluate(nu, 1j * x)
                self.assertAlmostEqual(abs(value - expected), 0.0, delta=1e-11 * max(1.0, abs(expected)))

    # Test power series against quadrature
    def test_series(self):
        for nu in TEST_VECT_BESSEL_ORDERS:
            for z in (0.3, 2.0 + 1.0j, 5.0j):
                quad = BesselI.Evaluate(nu, z)
                self.assertAlmostEqual(abs(BesselI.Series(nu, z) - quad), 0.0, delta=1e-11 * max(1.0, abs(quad)))

    # Test the bound on the imaginary axis
    def test_bound(self):
        for nu in (0.3, 0.5, 1.7, 5.5):
            for x in (0.1, 1.0, 10.0, 25.0):
                self.assertLessEqual(abs(BesselI.Evaluate(nu, 1j * x)), BesselI.Bound(nu, 1j * x))
        self.assertEqual(BesselI.Bound(0.0, 0.0), 1.0)
        self.assertEqual(BesselI.Bound(0.5, 0.0), 0.0)
        # Bounds beyond the float range saturate
        self.assertEqual(BesselI.Bound(2000.0, 1e4j), math.inf)

    # Test order ladders against scipy
    def test_ladder(self):
        z = np.asarray([0.5, 5.0, 20.0j, 3.0 + 4.0j])
        ladder = BesselI.Ladder(0.3, 12, z)
        self.assertEqual(ladder.shape, (12, 4))
        expected = np.asarray([[special.iv(0.3 + j, zi) for zi in z] for j in range(12)])
        self.assertTrue(np.allclose(ladder, expected, rtol=1e-9, atol=1e-12 * np.max(np.abs(expected))))

    # Test flux orders |k + alpha| against scipy
    def test_flux_orders(self):
        z = np.asarray([0.7, 6.0j])
        k_values = list(range(-4, 5))
        for alpha in (0.5, 0.3, 1.25):
            values = BesselI.FluxOrders(alpha, k_values, z)
            expected = np.asarray([[special.iv(abs(k + alpha), zi) for zi in z] for k in k_values])
            self.assertTrue(np.allclose(values, expected, rtol=1e-9, atol=1e-12))

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(DomainError, BesselI.Evaluate, -0.5, 1.0)
        self.assertRaises(DomainError, BesselI.Bound, -0.5, 1.0)
        self.assertRaises(DomainError, BesselI.Ladder, -0.1, 3, np.asarray([1.0]))


class QuadratureTests(unittest.TestCase):
    # Test exactness on polynomials
    def test_vector(self):
        nodes, weights = GaussQuadrature.Legendre(5)
        self.assertAlmostEqual(float(np.sum(weights * nodes ** 8)), 2.0 / 9.0, delta=1e-14)

        nodes, weights = GaussQuadrature.LegendreInterval(10, 0.0, 2.0)
        self.assertAlmostEqual(float(np.sum(weights * nodes ** 3)), 4.0, delta=1e-13)

        nodes, weights = GaussQuadrature.GenLaguerre(10, 0.5)
        self.assertAlmostEqual(float(np.sum(weights * nodes ** 2)), special.gamma(3.5), delta=1e-12)

        nodes, weights = GaussQuadrature.SymmetricJacobi(8, 0.5)
        # Integral of (1 - s^2)^(1/2) over [-1, 1]
        self.assertAlmostEqual(float(np.sum(weights)), 0.5 * math.pi, delta=1e-13)

    # Test that rules are read-only
    def test_read_only(self):
        nodes, _ = GaussQuadrature.Legendre(4)
        with self.assertRaises(ValueError):
            nodes[0] = 0.0

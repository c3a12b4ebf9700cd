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

from py_magnetic_ab_flow import (
    DecayGrid, DecayScanner, DecayVerifier, DomainError, MagneticParams, OmegaRegion, OmegaRegionTags,
    SingularTimeError, TruncationConfig, TruncationError
)


# Kernel calibration constant used to avoid calibrating in every test
PREFACTOR_SCALE = 2.0 * math.pi

# Test vector for the decay grid
TEST_VECT_GRID = [
    {"r_min": 0.05, "r_max": 4.0, "n_radii": 8, "n_angles": 6, "grid_points": 8 ** 2 * 6 ** 2},
    {"r_min": 0.1, "r_max": 2.0, "n_radii": 3, "n_angles": 1, "grid_points": 9},
    {"r_min": 0.5, "r_max": 8.0, "n_radii": 5, "n_angles": 4, "grid_points": 25 * 16},
]


def _SmallGrid() -> DecayGrid:
    return DecayGrid.LogSpaced(0.05, 4.0, 8, 6)


#
# Tests
#
class DecayGridTests(unittest.TestCase):
    # Test vector
    def test_vector(self):
        for test in TEST_VECT_GRID:
            grid = DecayGrid.LogSpaced(test["r_min"], test["r_max"], test["n_radii"], test["n_angles"])

            self.assertEqual(test["grid_points"], grid.NumPoints())
            self.assertAlmostEqual(test["r_min"], grid.RMin(), delta=1e-14)
            self.assertAlmostEqual(test["r_max"], grid.RMax(), delta=1e-14)
            self.assertEqual(test["grid_points"], grid.ToDict()["grid_points"])
            # Products and angle differences shall be distinct and sorted
            self.assertTrue(np.all(np.diff(grid.Products()) > 0.0))
            self.assertTrue(np.all(np.diff(grid.AngleDifferences()) > 0.0))
            self.assertEqual(test["n_angles"], grid.AngleDifferences().size)

    # Test refinement and minimum radius
    def test_refined(self):
        grid = _SmallGrid()
        refined = grid.Refined()

        self.assertEqual(15, refined.Radii().size)
        self.assertEqual(12, refined.Angles().size)
        self.assertTrue(np.all(np.isin(grid.Radii(), refined.Radii())))
        self.assertEqual(grid.RMax(), refined.RMax())

        lowered = grid.WithRMin(0.5 * grid.RMin())
        self.assertEqual(0.025, lowered.RMin())
        self.assertEqual(9, lowered.Radii().size)

        raised = grid.WithRMin(1.0)
        self.assertEqual(1.0, raised.RMin())
        self.assertTrue(np.all(raised.Radii()[1:] > 1.0))

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(DomainError, DecayGrid, [-1.0, 1.0], [0.0])
        self.assertRaises(DomainError, DecayGrid, [], [0.0])
        self.assertRaises(DomainError, DecayGrid, [1.0], [7.0])
        self.assertRaises(DomainError, DecayGrid.LogSpaced, 1.0, 0.5)
        self.assertRaises(DomainError, DecayGrid.LogSpaced, 0.1, 1.0, 1)
        self.assertRaises(DomainError, DecayGrid.FromRadii, [1.0], 0)
        self.assertRaises(DomainError, _SmallGrid().WithRMin, 10.0)


class OmegaRegionTests(unittest.TestCase):
    # Test regions
    def test_regions(self):
        params = MagneticParams(0.5, 1.0)
        t = 0.5 * math.pi

        self.assertAlmostEqual(2.0, OmegaRegion.ComputeThreshold(params, t), delta=1e-15)
        self.assertAlmostEqual(1.0, OmegaRegion.ComputeThreshold(MagneticParams(0.5, 2.0), t / 2.0), delta=1e-15)

        region = OmegaRegion.FromPoint(params, t, 1.0, 3.0)
        self.assertEqual(OmegaRegionTags.OMEGA1, region.Tag())
        self.assertAlmostEqual(2.0, region.Threshold(), delta=1e-15)
        self.assertEqual(OmegaRegionTags.OMEGA2, OmegaRegion.FromPoint(params, t, 1.0, 1.0).Tag())

        mask = OmegaRegion.Omega1Mask(params, t, np.array([0.5, 2.0, 4.0]))
        self.assertEqual([False, True, True], mask.tolist())

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(TypeError, OmegaRegion, "omega1", 1.0)


class DecayVerifierTests(unittest.TestCase):
    # Test weighted supremum
    def test_weighted_sup(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig()

        for sigma in (0.0, 0.25, params.Mu()):
            row = DecayVerifier.WeightedSup(params, 1.0, sigma, _SmallGrid(), cfg, PREFACTOR_SCALE)

            self.assertTrue(row.IsValid())
            self.assertIsNone(row.Error())
            self.assertTrue(math.isfinite(row.Product()) and row.Product() > 0.0)
            self.assertAlmostEqual(abs(math.sin(1.0)) ** (1.0 + sigma), row.SinFactor(), delta=1e-15)
            self.assertAlmostEqual(row.SupWeighted() * row.SinFactor(), row.Product(), delta=1e-12 * row.Product())
            self.assertEqual(_SmallGrid().NumPoints(), row.GridPoints())

    # Test the angular cutoff chosen for the tail tolerance
    def test_tail_tolerance(self):
        params = MagneticParams(0.5, 1.0)
        rows = [
            DecayVerifier.WeightedSup(params, 1.0, 0.25, _SmallGrid(), TruncationConfig(k_max=4, tail_tol=tail_tol),
                                      PREFACTOR_SCALE)
            for tail_tol in (1e-10, 1e-30, 1e-300)
        ]

        self.assertLess(4, rows[0].KMaxUsed())
        self.assertLess(rows[0].KMaxUsed(), rows[1].KMaxUsed())
        self.assertLessEqual(rows[1].KMaxUsed(), rows[2].KMaxUsed())
        for row in rows:
            self.assertTrue(row.IsValid())
            self.assertAlmostEqual(row.SupWeighted(), rows[-1].SupWeighted(), delta=1e-8 * rows[-1].SupWeighted())

        # Products up to 4e4 require cutoffs beyond the maximum one
        far_grid = DecayGrid.FromRadii([1.0, 200.0], 2)
        self.assertRaises(TruncationError, DecayVerifier.WeightedSup, params, 0.5 * math.pi, 0.0, far_grid,
                          TruncationConfig(), PREFACTOR_SCALE)

    # Test K1, K2 and chaining
    def test_chaining(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig()
        t = 0.5 * math.pi

        k1 = DecayVerifier.K1(params, t, _SmallGrid(), cfg)
        k2 = DecayVerifier.K2(params, t, _SmallGrid(), cfg)
        self.assertGreater(k1, 0.0)
        self.assertGreater(k2, 0.0)

        for t_chain in (0.3, 1.0, 2.0):
            ratio = DecayVerifier.ChainingRatio(params, t_chain, _SmallGrid(), cfg)
            self.assertTrue(DecayVerifier.IsChainingSatisfied(ratio))

        # Grids entirely inside one region
        self.assertEqual(0.0, DecayVerifier.K2(params, t, DecayGrid.FromRadii([3.0, 4.0], 4), cfg))
        self.assertEqual(0.0, DecayVerifier.K1(params, t, DecayGrid.FromRadii([0.1, 0.2], 4), cfg))

    # Test majorant
    def test_majorant(self):
        params = MagneticParams(0.5, 1.0)

        # At z = 0 only the two orders equal to mu contribute
        value = DecayVerifier.Majorant(params, np.array([0.0]), 8)
        self.assertAlmostEqual(4.0 / math.sqrt(2.0 * math.pi), float(value[0]), delta=1e-14)

        z = np.array([0.1, 0.5, 1.0])
        self.assertTrue(np.all(np.diff(DecayVerifier.Majorant(params, z, 8)) > 0.0))
        self.assertAlmostEqual(
            1.0, float(DecayVerifier.ReducedProducts(params, 0.5 * math.pi, np.array([2.0]))[0]), delta=1e-15
        )

    # Test small-time check
    def test_small_time(self):
        params = MagneticParams(0.5, 1.0)
        table = DecayVerifier.SmallTimeCheck(params, params.Mu(), [0.1, 0.3, 0.6], _SmallGrid(),
                                             TruncationConfig(), PREFACTOR_SCALE)

        self.assertEqual(3, len(table))
        self.assertTrue(table.Summary()["ratios_in_band"])
        self.assertAlmostEqual((0.5 * math.pi) ** 1.5, table.Summary()["ratio_upper_bound"], delta=1e-14)
        for row in table:
            self.assertGreaterEqual(row["factor_ratio"], 1.0 - 1e-12)
            self.assertLessEqual(row["scaled_sup"], table.Summary()["constant"])

    # Test grid sensitivity
    def test_grid_changes(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig()

        refinement = DecayVerifier.RefinementChange(params, 1.0, 0.0, _SmallGrid(), cfg, PREFACTOR_SCALE)
        self.assertGreaterEqual(refinement, 0.0)
        self.assertLess(refinement, 0.5)

        r_min_change = DecayVerifier.RMinChange(params, 1.0, params.Mu(), _SmallGrid(), cfg, PREFACTOR_SCALE)
        self.assertTrue(math.isfinite(r_min_change))

    # Test invalid parameters
    def test_invalid_params(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig()
        origin_grid = DecayGrid.FromRadii([0.0, 1.0], 4)

        self.assertRaises(DomainError, DecayVerifier.WeightedSup, params, 1.0, 0.25, origin_grid, cfg,
                          PREFACTOR_SCALE)
        self.assertRaises(DomainError, DecayVerifier.WeightedSup, params, 1.0, 0.75, _SmallGrid(), cfg,
                          PREFACTOR_SCALE)
        self.assertRaises(DomainError, DecayVerifier.WeightedSup, params, 1.0, -0.1, _SmallGrid(), cfg,
                          PREFACTOR_SCALE)
        self.assertRaises(SingularTimeError, DecayVerifier.WeightedSup, params, math.pi, 0.0, _SmallGrid(), cfg,
                          PREFACTOR_SCALE)
        self.assertRaises(DomainError, DecayVerifier.SmallTimeCheck, params, 0.0, [0.5 * math.pi], _SmallGrid(),
                          cfg, PREFACTOR_SCALE)


class DecayScannerTests(unittest.TestCase):
    # Test scan and table
    def test_scan(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig()
        rows = DecayScanner.Scan(params, [1.0, math.pi], [0.0, params.Mu()], _SmallGrid(), cfg)

        self.assertEqual(4, len(rows))
        self.assertEqual([1.0, 1.0, math.pi, math.pi], [row.T() for row in rows])
        self.assertEqual([0.0, 0.5, 0.0, 0.5], [row.Sigma() for row in rows])
        self.assertTrue(rows[0].IsValid() and rows[1].IsValid())
        self.assertFalse(rows[2].IsValid() or rows[3].IsValid())
        self.assertIsNone(rows[2].Product())

        table = DecayScanner.ToTable(rows)
        self.assertEqual(("t", "sigma", "sup_weighted", "sin_factor", "product", "grid_points"),
                         tuple(table.Columns()))
        self.assertEqual(2, table.Summary()["failed_rows"])
        self.assertIn("max_product[sigma=0.5]", table.Summary())
        self.assertIn(f"error[t={math.pi:.17g},sigma=0]", table.Summary())

    # Test that parallel scans give the serial rows
    def test_scan_parallel(self):
        params = MagneticParams(0.5, 1.0)
        cfg = TruncationConfig()
        t_values = [0.5, 1.0, 2.0]

        serial = DecayScanner.Scan(params, t_values, [params.Mu()], _SmallGrid(), cfg, jobs=1)
        parallel = DecayScanner.Scan(params, t_values, [params.Mu()], _SmallGrid(), cfg, jobs=2)

        self.assertEqual([row.T() for row in serial], [row.T() for row in parallel])
        for row_ser, row_par in zip(serial, parallel):
            self.assertAlmostEqual(row_ser.Product(), row_par.Product(), delta=1e-14 * row_ser.Product())

    # Test default times
    def test_times(self):
        self.assertAlmostEqual(0.05, DecayScanner.DefaultTimes(2.0)[0], delta=1e-15)
        near = DecayScanner.NearSingularTimes(1.0)
        self.assertTrue(all(t < math.pi for t in near))
        self.assertTrue(np.all(np.diff(near) > 0.0))

    # Test invalid parameters
    def test_invalid_params(self):
        params = MagneticParams(0.5, 1.0)

        self.assertRaises(DomainError, DecayScanner.Scan, params, [1.0], [0.0], _SmallGrid(), TruncationConfig(), 0)
        self.assertRaises(DomainError, DecayScanner.Scan, params, [1.0], [0.9], _SmallGrid(), TruncationConfig())

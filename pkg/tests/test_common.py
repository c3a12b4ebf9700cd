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
import unittest

from py_magnetic_ab_flow import DomainError, TruncationConfig, TruncationConfigConst


# Test vector for valid configurations
TEST_VECT = [
    {"kwargs": {}, "k_max": TruncationConfigConst.DEF_K_MAX, "m_max": TruncationConfigConst.DEF_M_MAX,
     "tail_tol": TruncationConfigConst.DEF_TAIL_TOL},
    {"kwargs": {"k_max": 1, "m_max": 1, "tail_tol": 1e-30}, "k_max": 1, "m_max": 1, "tail_tol": 1e-30},
    {"kwargs": {"k_max": 200, "m_max": 16, "tail_tol": 1}, "k_max": 200, "m_max": 16, "tail_tol": 1.0},
]

# Test vector for invalid configurations
TEST_VECT_INVALID = [
    {"k_max": 0},
    {"m_max": 0},
    {"k_max": -3},
    {"k_max": 2.5},
    {"k_max": True},
    {"m_max": False},
    {"quad_nodes": 0},
    {"radial_nodes": True},
    {"evolve_angular_nodes": 0},
    {"tail_tol": 0.0},
    {"tail_tol": -1e-10},
    {"tail_tol": float("nan")},
    {"tail_tol": True},
    {"tail_tol": "1e-10"},
    {"time_guard": 0.0},
    {"time_guard": 2.0},
    {"time_guard": True},
]


#
# Tests
#
class TruncationConfigTests(unittest.TestCase):
    # Test vector
    def test_vector(self):
        for test in TEST_VECT:
            cfg = TruncationConfig(**test["kwargs"])

            self.assertEqual(test["k_max"], cfg.KMax())
            self.assertEqual(test["m_max"], cfg.MMax())
            self.assertEqual(test["tail_tol"], cfg.TailTol())
            self.assertEqual(TruncationConfigConst.DEF_TIME_GUARD, cfg.TimeGuard())
            self.assertEqual(cfg.ToDict(), TruncationConfig(**cfg.ToDict()).ToDict())

    # Test copies with replaced values
    def test_replace(self):
        cfg = TruncationConfig()
        replaced = cfg.Replace(k_max=8, tail_tol=1e-6)

        self.assertEqual(8, replaced.KMax())
        self.assertEqual(1e-6, replaced.TailTol())
        self.assertEqual(cfg.MMax(), replaced.MMax())
        self.assertEqual(TruncationConfigConst.DEF_K_MAX, cfg.KMax())

    # Test invalid parameters
    def test_invalid_params(self):
        for kwargs in TEST_VECT_INVALID:
            self.assertRaises(DomainError, TruncationConfig, **kwargs)
            self.assertRaises(DomainError, TruncationConfig().Replace, **kwargs)
        self.assertRaises(TypeError, TruncationConfig().Replace, kmax=8)

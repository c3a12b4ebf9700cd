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
import argparse
import csv
import json
import math
import os
import tempfile
import unittest

from py_magnetic_ab_flow import ConfigError, ResultTable, RunConfig, RunConfigLoader, TableFormats
from py_magnetic_ab_flow.cli.main import CliMain, ExitCodes, main


# Small decay grid
TEST_GRID_CONFIG = {"r_min": 0.1, "r_max": 2.0, "n_radii": 4, "n_angles": 4}


def _ReadCsv(file_path):
    with open(file_path, "r", encoding="utf-8") as f:
        lines = [line for line in f.read().splitlines() if not line.startswith("#")]
    return list(csv.reader(lines))


def _ReadSummary(file_path):
    with open(file_path, "r", encoding="utf-8") as f:
        return dict(line[2:].split("=", 1) for line in f.read().splitlines() if line.startswith("# "))


#
# Tests
#
class RunConfigTests(unittest.TestCase):
    # Test default values
    def test_defaults(self):
        run_cfg = RunConfig({})

        self.assertEqual(0.5, run_cfg.Params().Alpha())
        self.assertEqual(1.0, run_cfg.Params().B0())
        self.assertEqual(64, run_cfg.Trunc().KMax())
        self.assertEqual(128, run_cfg.Trunc().MMax())
        self.assertEqual([0.0, 0.25, 0.5], run_cfg.Sigmas())
        self.assertEqual([0.1], run_cfg.Times([0.1]))
        self.assertEqual(TableFormats.CSV, run_cfg.Format())
        self.assertEqual("both", run_cfg.Route())
        self.assertEqual("eigen", run_cfg.Get("data"))
        self.assertIsNone(run_cfg.OutPath())
        self.assertIsNone(run_cfg.Suites())

    # Test parsing of flag strings
    def test_parse(self):
        run_cfg = RunConfig({"alpha": "0.3", "b0": "2", "sigma": "0,mu/2,mu", "t": "0.1,pi/4", "kmax": "8",
                             "format": "json", "jobs": "2", "suite": "laguerre, pkm"})

        self.assertAlmostEqual(0.3, run_cfg.Params().Mu(), delta=1e-15)
        self.assertEqual([0.0, 0.15, 0.3], run_cfg.Sigmas())
        self.assertEqual([0.1, math.pi / 4.0], run_cfg.Times([1.0]))
        self.assertEqual(8, run_cfg.Trunc().KMax())
        self.assertEqual(TableFormats.JSON, run_cfg.Format())
        self.assertEqual(2, run_cfg.Jobs())
        self.assertEqual(["laguerre", "pkm"], run_cfg.Suites())

    # Test flags overriding the configuration file
    def test_loader(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            cfg_path = os.path.join(tmp_dir, "run.json")
            with open(cfg_path, "w", encoding="utf-8") as f:
                json.dump({"alpha": 0.3, "b0": 2.0, "tail_tol": 1e-12, **TEST_GRID_CONFIG}, f)

            args = CliMain.BuildParser().parse_args(["spectrum", "--config", cfg_path, "--alpha", "0.7"])
            run_cfg = RunConfigLoader.FromArgs(args)

        self.assertEqual(0.7, run_cfg.Params().Alpha())
        self.assertEqual(2.0, run_cfg.Params().B0())
        self.assertEqual(1e-12, run_cfg.Trunc().TailTol())
        self.assertEqual(4, run_cfg.Grid().Radii().size)

    # Test invalid parameters
    def test_invalid_params(self):
        self.assertRaises(ConfigError, RunConfig, {"unknown": 1})
        self.assertRaises(ConfigError, RunConfig, {"alpha": 1.0})
        self.assertRaises(ConfigError, RunConfig, {"b0": -1.0})
        self.assertRaises(ConfigError, RunConfig, {"sigma": "0.6"})
        self.assertRaises(ConfigError, RunConfig, {"kmax": 1.5})
        self.assertRaises(ConfigError, RunConfig, {"jobs": 0})
        self.assertRaises(ConfigError, RunConfig, {"t": "abc"})
        self.assertRaises(ConfigError, RunConfig, {"x": [1.0]})
        self.assertRaises(ConfigError, RunConfig, {"sigma": "mu/0"})
        self.assertRaises(ConfigError, RunConfig, {"sigma": ["mu/2", "mu/0.0"]})
        self.assertRaises(ConfigError, RunConfigLoader.FromArgs,
                          argparse.Namespace(config="/nonexistent/run.json"))

    # Test command dispatch and failure detection
    def test_cli_main(self):
        self.assertEqual(["spectrum", "verify", "decay-scan", "evolve", "kernel-eval", "poisson-check"],
                         list(CliMain.CommandRunners()))

        table = ResultTable(["name"])
        self.assertFalse(CliMain.IsFailure("spectrum", table))
        table.SetSummary("all_passed", False)
        self.assertTrue(CliMain.IsFailure("verify", table))
        table.SetSummary("passed", True)
        self.assertFalse(CliMain.IsFailure("poisson-check", table))


class MainTests(unittest.TestCase):
    def setUp(self):
        self.m_tmp_dir = tempfile.TemporaryDirectory()
        self.m_out = os.path.join(self.m_tmp_dir.name, "out.csv")

    def tearDown(self):
        self.m_tmp_dir.cleanup()

    def __WriteConfig(self, values):
        cfg_path = os.path.join(self.m_tmp_dir.name, "run.json")
        with open(cfg_path, "w", encoding="utf-8") as f:
            json.dump(values, f)
        return cfg_path

    # Test spectrum
    def test_spectrum(self):
        self.assertEqual(ExitCodes.SUCCESS, main(["spectrum", "--kmax", "1", "--mmax", "1", "--out", self.m_out]))

        rows = _ReadCsv(self.m_out)
        self.assertEqual(["k", "m", "lambda", "multiplicity", "norm_squared"], rows[0])
        self.assertEqual(["-1", "0", "1"], rows[1][:3])
        self.assertEqual(1 + 3 * 2, len(rows))
        # Eigenvalues are sorted
        lambdas = [float(row[2]) for row in rows[1:]]
        self.assertEqual(sorted(lambdas), lambdas)

    # Test that repeated runs give identical output
    def test_deterministic(self):
        out_2 = os.path.join(self.m_tmp_dir.name, "out_2.csv")
        argv = ["spectrum", "--alpha", "0.3", "--b0", "2", "--kmax", "2", "--mmax", "2"]

        self.assertEqual(ExitCodes.SUCCESS, main(argv + ["--out", self.m_out]))
        self.assertEqual(ExitCodes.SUCCESS, main(argv + ["--out", out_2]))
        with open(self.m_out, "rb") as f1, open(out_2, "rb") as f2:
            self.assertEqual(f1.read(), f2.read())

    # Test JSON output
    def test_json(self):
        self.assertEqual(ExitCodes.SUCCESS,
                         main(["spectrum", "--kmax", "1", "--mmax", "0", "--format", "json", "--out", self.m_out]))

        with open(self.m_out, "r", encoding="utf-8") as f:
            data = json.load(f)
        self.assertEqual(3, len(data["rows"]))
        self.assertEqual(0.5, data["summary"]["mu"])

    # Test Poisson check
    def test_poisson_check(self):
        self.assertEqual(ExitCodes.SUCCESS, main(["poisson-check", "--out", self.m_out]))

        rows = _ReadCsv(self.m_out)
        self.assertEqual(["nu", "a", "b", "c", "lhs", "rhs", "residual"], rows[0])
        self.assertEqual(1 + 36, len(rows))
        self.assertEqual("true", _ReadSummary(self.m_out)["passed"])

    # Test verify
    def test_verify(self):
        self.assertEqual(ExitCodes.SUCCESS, main(["verify", "--suite", "laguerre,pkm", "--out", self.m_out]))

        summary = _ReadSummary(self.m_out)
        self.assertEqual("true", summary["all_passed"])
        self.assertEqual("0", summary["failed_checks"])
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["verify", "--suite", "unknown", "--out", self.m_out]))

    # Test that a truncation error makes verification fail
    def test_verify_truncation(self):
        cfg_path = self.__WriteConfig({"tail_tol": 1e-30})

        self.assertEqual(ExitCodes.VERIFICATION_FAILURE, main(["verify", "--suite", "alpha-limit",
                                                               "--config", cfg_path, "--out", self.m_out]))
        summary = _ReadSummary(self.m_out)
        self.assertEqual("false", summary["all_passed"])
        self.assertEqual("1", summary["failed_checks"])

    # Test decay scan
    def test_decay_scan(self):
        cfg_path = self.__WriteConfig(TEST_GRID_CONFIG)

        self.assertEqual(ExitCodes.SUCCESS, main(["decay-scan", "--config", cfg_path, "--t", "1.0,pi",
                                                  "--sigma", "0,mu", "--out", self.m_out]))
        rows = _ReadCsv(self.m_out)
        self.assertEqual(["t", "sigma", "sup_weighted", "sin_factor", "product", "grid_points"], rows[0])
        self.assertEqual(1 + 4, len(rows))
        self.assertEqual(str(16 * 16), rows[1][5])
        # Rows at the singular time have no supremum
        self.assertEqual("", rows[3][2])
        self.assertEqual("2", _ReadSummary(self.m_out)["failed_rows"])

    # Test evolve
    def test_evolve(self):
        self.assertEqual(ExitCodes.SUCCESS, main(["evolve", "--route", "spectral", "--t", "0.5,pi",
                                                  "--out", self.m_out]))

        rows = _ReadCsv(self.m_out)
        self.assertEqual(["route", "t", "r", "theta", "re_u", "im_u", "abs_u"], rows[0])
        self.assertEqual(1 + 2 * 10, len(rows))
        self.assertEqual("true", _ReadSummary(self.m_out)["norm_preserved"])

        # Kernel route alone at a singular time
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["evolve", "--route", "kernel", "--t", "pi",
                                                      "--out", self.m_out]))

    # Test kernel evaluation
    def test_kernel_eval(self):
        self.assertEqual(ExitCodes.SUCCESS, main(["kernel-eval", "--alpha", "1e-3", "--t", "0.3,1",
                                                  "--out", self.m_out]))
        rows = _ReadCsv(self.m_out)
        self.assertEqual(1 + 2, len(rows))
        self.assertNotEqual("", rows[1][6])
        self.assertEqual("true", _ReadSummary(self.m_out)["mehler_reported"])

        self.assertEqual(ExitCodes.USAGE_ERROR, main(["kernel-eval", "--t", "pi", "--out", self.m_out]))
        # Cutoff too small for the tail tolerance
        cfg_path = self.__WriteConfig({"kmax": 2, "tail_tol": 1e-30})
        self.assertEqual(ExitCodes.VERIFICATION_FAILURE, main(["kernel-eval", "--config", cfg_path,
                                                               "--out", self.m_out]))

    # Test usage errors
    def test_usage_errors(self):
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["spectrum", "--alpha", "1", "--out", self.m_out]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["spectrum", "--format", "xml", "--out", self.m_out]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["spectrum", "--kmax", "abc", "--out", self.m_out]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["unknown-command"]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main([]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["spectrum", "--config", self.__WriteConfig({"unknown": 1}),
                                                      "--out", self.m_out]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["spectrum", "--config", self.__WriteConfig([1, 2]),
                                                      "--out", self.m_out]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["spectrum", "--kmax", "1", "--mmax", "1",
                                                      "--out", os.path.join(self.m_tmp_dir.name, "no", "out.csv")]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["decay-scan", "--sigma", "mu/0", "--out", self.m_out]))
        self.assertEqual(ExitCodes.USAGE_ERROR, main(["decay-scan", "--sigma", "0,mu/0.0", "--out", self.m_out]))

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

"""Module with the run configuration of the command-line interface."""

# Imports
import argparse
import json
import math
import re
from typing import Any, Dict, List, Optional, Sequence, Tuple

from py_magnetic_ab_flow.common import ConfigError, DomainError, MagneticParams, TruncationConfig
from py_magnetic_ab_flow.decay import DecayGrid
from py_magnetic_ab_flow.saver import TableFormats
from py_magnetic_ab_flow.utils import Utils


class RunConfigConst:
    """Class container for run configuration constants."""

    # Default values of every configuration key
    DEFAULTS: Dict[str, Any] = {
        "alpha": 0.5,
        "b0": 1.0,
        "sigma": None,
        "t": None,
        "kmax": 64,
        "mmax": 128,
        "quad_nodes": 200,
        "tail_tol": 1e-10,
        "time_guard": 1e-3,
        "n_radii": 48,
        "r_min": 0.05,
        "r_max": 8.0,
        "n_angles": 24,
        "out": None,
        "format": "csv",
        "jobs": 1,
        "route": "both",
        "suite": None,
        "data": "eigen",
        "gauss_a": 1.0,
        "gauss_x0": [1.0, 0.0],
        "out_points": None,
        "parseval_tol": 1e-6,
        "nu": [0.3, 0.5, 1.7],
        "a": [0.5, 2.0],
        "b": [0.7, 1.5],
        "c": [0.5, 1.0, 2.0],
        "tau": [0.25, 0.5, 1.0],
        "x": [1.0, 0.0],
        "y": [0.5, 0.5],
    }

    ROUTES: Tuple[str, ...] = ("spectral", "kernel", "both")
    DATA_FAMILIES: Tuple[str, ...] = ("gaussian", "eigen")
    # Sigma expressions relative to the flux distance, e.g. "mu" or "mu/2"
    SIGMA_MU_REGEX: str = r"^\s*mu\s*(?:/\s*(\d+\.?\d*))?\s*$"


class RunConfig:
    """
    Run configuration class.
    It holds the validated values of a run, built from a JSON configuration file and command-line flags.
    """

    m_params: MagneticParams
    m_trunc: TruncationConfig
    m_grid: DecayGrid
    m_values: Dict[str, Any]

    def __init__(self,
                 values: Dict[str, Any]) -> None:
        """
        Construct class, validating every value.

        Args:
            values (dict): Configuration values by key, missing keys taking their default value

        Raises:
            ConfigError: If a value is not valid
        """
        unknown = set(values) - set(RunConfigConst.DEFAULTS)
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {sorted(unknown)}")
        merged = dict(RunConfigConst.DEFAULTS)
        merged.update({key: value for key, value in values.items() if value is not None})

        try:
            self.m_params = MagneticParams(self.__ToFloat(merged, "alpha"), self.__ToFloat(merged, "b0"))
            self.m_trunc = TruncationConfig(k_max=self.__ToInt(merged, "kmax"),
                                            m_max=self.__ToInt(merged, "mmax"),
                                            quad_nodes=self.__ToInt(merged, "quad_nodes"),
                                            tail_tol=self.__ToFloat(merged, "tail_tol"),
                                            time_guard=self.__ToFloat(merged, "time_guard"))
            self.m_grid = DecayGrid.LogSpaced(self.__ToFloat(merged, "r_min"),
                                              self.__ToFloat(merged, "r_max"),
                                              self.__ToInt(merged, "n_radii"),
                                              self.__ToInt(merged, "n_angles"))
        except DomainError as ex:
            raise ConfigError(f"Invalid configuration: {ex}") from ex

        self.m_values = merged
        self.m_values["sigma"] = self.__ParseSigmas(merged["sigma"])
        self.m_values["t"] = None if merged["t"] is None else self.__ToFloatList(merged, "t")
        self.m_values["gauss_x0"] = self.__ToPoint(merged, "gauss_x0")
        self.m_values["x"] = self.__ToPoint(merged, "x")
        self.m_values["y"] = self.__ToPoint(merged, "y")
        for key in ("nu", "a", "b", "c", "tau"):
            self.m_values[key] = self.__ToFloatList(merged, key)
        if merged["out_points"] is not None:
            self.m_values["out_points"] = [self.__ToPoint({"point": p}, "point") for p in merged["out_points"]]
        self.__Validate()

    def Params(self) -> MagneticParams:
        return self.m_params

    def Trunc(self) -> TruncationConfig:
        return self.m_trunc

    def Grid(self) -> DecayGrid:
        return self.m_grid

    def Sigmas(self) -> List[float]:
        """
        Get the weight exponents, [0, mu/2, mu] if not specified.

        Returns:
            list[float]: Weight exponents
        """
        sigmas = self.m_values["sigma"]
        if sigmas is None:
            mu = self.m_params.Mu()
            return [0.0, 0.5 * mu, mu]
        return sigmas

    def Times(self,
              default: Sequence[float]) -> List[float]:
        """
        Get the times, or the specified default ones if not configured.

        Args:
            default (list[float]): Default times

        Returns:
            list[float]: Times
        """
        return list(default) if self.m_values["t"] is None else self.m_values["t"]

    def OutPath(self) -> Optional[str]:
        return self.m_values["out"]

    def Format(self) -> TableFormats:
        return TableFormats[self.m_values["format"].upper()]

    def Jobs(self) -> int:
        return self.m_values["jobs"]

    def Route(self) -> str:
        return self.m_values["route"]

    def Suites(self) -> Optional[List[str]]:
        return self.m_values["suite"]

    def Get(self,
            key: str) -> Any:
        """
        Get a configuration value.

        Args:
            key (str): Configuration key

        Returns:
            Any: Value

        Raises:
            KeyError: If the key is not valid
        """
        return self.m_values[key]

    def __Validate(self) -> None:
        mu = self.m_params.Mu()
        for sigma in self.Sigmas():
            if not 0.0 <= sigma <= mu + 1e-12:
                raise ConfigError(f"Weight exponent shall be in [0, {mu}] ({sigma})")
        for t in self.m_values["t"] or []:
            if not math.isfinite(t):
                raise ConfigError(f"Time shall be finite ({t})")
        if self.m_values["format"] not in ("csv", "json"):
            raise ConfigError(f"Invalid output format ({self.m_values['format']})")
        if self.m_values["route"] not in RunConfigConst.ROUTES:
            raise ConfigError(f"Invalid route ({self.m_values['route']})")
        if self.m_values["data"] not in RunConfigConst.DATA_FAMILIES:
            raise ConfigError(f"Invalid initial data family ({self.m_values['data']})")
        self.m_values["jobs"] = self.__ToInt(self.m_values, "jobs")
        if self.m_values["jobs"] < 1:
            raise ConfigError(f"Number of jobs shall be strictly positive ({self.m_values['jobs']})")
        for key in ("gauss_a", "parseval_tol"):
            self.m_values[key] = self.__ToFloat(self.m_values, key)
            if not self.m_values[key] > 0.0:
                raise ConfigError(f"{key} shall be strictly positive ({self.m_values[key]})")
        if self.m_values["suite"] is not None and not isinstance(self.m_values["suite"], list):
            self.m_values["suite"] = [item.strip() for item in str(self.m_values["suite"]).split(",") if item.strip()]

    def __ParseSigmas(self,
                      value: Any) -> Optional[List[float]]:
        if value is None:
            return None
        items = value.split(",") if isinstance(value, str) else value
        if not isinstance(items, list):
            items = [items]
        sigmas = []
        for item in items:
            match = re.match(RunConfigConst.SIGMA_MU_REGEX, item) if isinstance(item, str) else None
            if match is not None:
                divisor = float(match.group(1)) if match.group(1) is not None else 1.0
                if not divisor > 0.0:
                    raise ConfigError(f"Invalid divisor for sigma: {item}")
                sigmas.append(self.m_params.Mu() / divisor)
            else:
                sigmas.append(self.__ParseNumber("sigma", item))
        return sigmas

    @staticmethod
    def __ParseNumber(key: str,
                      item: Any) -> float:
        try:
            return Utils.ParseNumber(item) if isinstance(item, str) else float(item)
        except (TypeError, ValueError) as ex:
            raise ConfigError(f"Invalid number for {key}: {item}") from ex

    @staticmethod
    def __ToFloat(values: Dict[str, Any],
                  key: str) -> float:
        return RunConfig.__ParseNumber(key, values[key])

    @staticmethod
    def __ToInt(values: Dict[str, Any],
                key: str) -> int:
        value = values[key]
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise ConfigError(f"{key} shall be an integer ({value})")
        try:
            return int(value)
        except ValueError as ex:
            raise ConfigError(f"{key} shall be an integer ({value})") from ex

    @staticmethod
    def __ToFloatList(values: Dict[str, Any],
                      key: str) -> List[float]:
        value = values[key]
        items = value.split(",") if isinstance(value, str) else value
        if not isinstance(items, list):
            items = [items]
        return [RunConfig.__ParseNumber(key, item) for item in items
                if not (isinstance(item, str) and not item.strip())]

    @staticmethod
    def __ToPoint(values: Dict[str, Any],
                  key: str) -> Tuple[float, float]:
        point = RunConfig.__ToFloatList(values, key)
        if len(point) != 2:
            raise ConfigError(f"{key} shall be a Cartesian point with two coordinates ({values[key]})")
        return point[0], point[1]


class RunConfigLoader:
    """Class container for loading run configurations."""

    # Command-line flags overriding configuration keys
    FLAG_KEYS: Tuple[str, ...] = ("alpha", "b0", "sigma", "t", "kmax", "mmax", "out", "format", "jobs", "route",
                                  "suite", "data")

    @staticmethod
    def FromFile(file_path: str) -> Dict[str, Any]:
        """
        Load configuration values from a flat JSON file.

        Args:
            file_path (str): File path

        Returns:
            dict: Configuration values

        Raises:
            ConfigError: If the file cannot be read or is not a flat JSON object
        """
        try:
            with open(file_path, "r", encoding="utf-8") as fin:
                values = json.load(fin)
        except (OSError, json.JSONDecodeError) as ex:
            raise ConfigError(f"Cannot load configuration file {file_path}: {ex}") from ex
        if not isinstance(values, dict):
            raise ConfigError(f"Configuration file {file_path} shall contain a JSON object")
        return values

    @staticmethod
    def FromArgs(args: argparse.Namespace) -> RunConfig:
        """
        Build a run configuration from parsed arguments, flags overriding the configuration file.

        Args:
            args (argparse.Namespace): Parsed arguments

        Returns:
            RunConfig object: Run configuration

        Raises:
            ConfigError: If the configuration is not valid
        """
        values = RunConfigLoader.FromFile(args.config) if getattr(args, "config", None) else {}
        for key in RunConfigLoader.FLAG_KEYS:
            flag_value = getattr(args, key, None)
            if flag_value is not None:
                values[key] = flag_value
        return RunConfig(values)

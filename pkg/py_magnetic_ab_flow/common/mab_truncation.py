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

"""Module with the truncation configuration."""

# Imports
import math
from typing import Any, Dict

from py_magnetic_ab_flow.common.mab_errors import DomainError


class TruncationConfigConst:
    """Class container for truncation configuration constants."""

    DEF_K_MAX: int = 64
    DEF_M_MAX: int = 128
    DEF_QUAD_NODES: int = 200
    DEF_TAIL_TOL: float = 1e-10
    DEF_TIME_GUARD: float = 1e-3
    DEF_RADIAL_NODES: int = 128
    DEF_EVOLVE_RADIAL_NODES: int = 96
    DEF_EVOLVE_ANGULAR_NODES: int = 48


class TruncationConfig:
    """
    Truncation configuration class.
    It collects the cutoffs and tolerances used by the series, quadratures and scans.
    Objects are immutable, use Replace to get a modified copy.
    """

    m_k_max: int
    m_m_max: int
    m_quad_nodes: int
    m_tail_tol: float
    m_time_guard: float
    m_radial_nodes: int
    m_evolve_radial_nodes: int
    m_evolve_angular_nodes: int

    def __init__(self,
                 k_max: int = TruncationConfigConst.DEF_K_MAX,
                 m_max: int = TruncationConfigConst.DEF_M_MAX,
                 quad_nodes: int = TruncationConfigConst.DEF_QUAD_NODES,
                 tail_tol: float = TruncationConfigConst.DEF_TAIL_TOL,
                 time_guard: float = TruncationConfigConst.DEF_TIME_GUARD,
                 radial_nodes: int = TruncationConfigConst.DEF_RADIAL_NODES,
                 evolve_radial_nodes: int = TruncationConfigConst.DEF_EVOLVE_RADIAL_NODES,
                 evolve_angular_nodes: int = TruncationConfigConst.DEF_EVOLVE_ANGULAR_NODES) -> None:
        """
        Construct class.

        Args:
            k_max (int, optional)               : Angular momentum cutoff
            m_max (int, optional)               : Radial quantum number cutoff
            quad_nodes (int, optional)          : Minimum number of nodes of the Bessel quadrature
            tail_tol (float, optional)          : Tolerance on estimated series tails
            time_guard (float, optional)        : Minimum distance of B0 * t from pi * Z
            radial_nodes (int, optional)        : Number of radial quadrature nodes for norms and expansions
            evolve_radial_nodes (int, optional) : Minimum number of radial nodes of the kernel route
            evolve_angular_nodes (int, optional): Number of angular nodes of the kernel route

        Raises:
            DomainError: If a value is not valid
        """
        for name, value in (("k_max", k_max),
                            ("m_max", m_max),
                            ("quad_nodes", quad_nodes),
                            ("radial_nodes", radial_nodes),
                            ("evolve_radial_nodes", evolve_radial_nodes),
                            ("evolve_angular_nodes", evolve_angular_nodes)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise DomainError(f"{name} shall be a positive integer ({value})")
        for name, value in (("tail_tol", tail_tol), ("time_guard", time_guard)):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise DomainError(f"{name} shall be a real number ({value})")
        if not tail_tol > 0.0:
            raise DomainError(f"Tail tolerance shall be strictly positive ({tail_tol})")
        if not 0.0 < time_guard < math.pi / 2.0:
            raise DomainError(f"Time guard shall be in (0, pi/2) ({time_guard})")

        self.m_k_max = k_max
        self.m_m_max = m_max
        self.m_quad_nodes = quad_nodes
        self.m_tail_tol = float(tail_tol)
        self.m_time_guard = float(time_guard)
        self.m_radial_nodes = radial_nodes
        self.m_evolve_radial_nodes = evolve_radial_nodes
        self.m_evolve_angular_nodes = evolve_angular_nodes

    def KMax(self) -> int:
        return self.m_k_max

    def MMax(self) -> int:
        return self.m_m_max

    def QuadNodes(self) -> int:
        return self.m_quad_nodes

    def TailTol(self) -> float:
        return self.m_tail_tol

    def TimeGuard(self) -> float:
        return self.m_time_guard

    def RadialNodes(self) -> int:
        return self.m_radial_nodes

    def EvolveRadialNodes(self) -> int:
        return self.m_evolve_radial_nodes

    def EvolveAngularNodes(self) -> int:
        return self.m_evolve_angular_nodes

    def Replace(self,
                **kwargs: Any) -> "TruncationConfig":
        """
        Get a copy of the configuration with some values replaced.

        Args:
            **kwargs: Values to replace, with the same names of the constructor arguments

        Returns:
            TruncationConfig object: New configuration

        Raises:
            TypeError: If an argument name is not valid
            DomainError: If a value is not valid
        """
        values = self.ToDict()
        for key in kwargs:
            if key not in values:
                raise TypeError(f"Invalid truncation configuration key: {key}")
        values.update(kwargs)
        return TruncationConfig(**values)

    def ToDict(self) -> Dict[str, Any]:
        """
        Get configuration as a dictionary.

        Returns:
            dict: Configuration as a dictionary
        """
        return {
            "k_max": self.m_k_max,
            "m_max": self.m_m_max,
            "quad_nodes": self.m_quad_nodes,
            "tail_tol": self.m_tail_tol,
            "time_guard": self.m_time_guard,
            "radial_nodes": self.m_radial_nodes,
            "evolve_radial_nodes": self.m_evolve_radial_nodes,
            "evolve_angular_nodes": self.m_evolve_angular_nodes,
        }

    def __eq__(self,
               other: object) -> bool:
        if not isinstance(other, TruncationConfig):
            return NotImplemented
        return self.ToDict() == other.ToDict()

    def __hash__(self) -> int:
        return hash(tuple(self.ToDict().values()))

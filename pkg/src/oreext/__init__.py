"""Exact arithmetic and structure computations for Ore extensions R[x; sigma, delta]."""

from .catalog import algebra, build_algebra, load_config
from .ore import NEG_INF, OreAlgebra, OrePoly, commutator, pi_map, right_divide, x_power_times
from .scalars import GF, QQ

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "NEG_INF", "OreAlgebra", "OrePoly", "algebra", "build_algebra",
    "commutator", "load_config", "pi_map", "right_divide", "x_power_times",
]

import functools
import random

import pytest
from hypothesis import HealthCheck, settings

from oreext import algebra

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

CATALOG = ["weyl_q", "weyl_f3", "qweyl_q", "qweyl_f7", "quantum_plane_q", "seq_shift", "f2quot"]
ALL_CONFIGS = CATALOG + ["quantum_plane_f7", "qweyl_ratfunc_q", "f2_poly", "f3quot_euler",
                         "euler_q", "eval0_q"]
DIFFERENTIAL = ["weyl_q", "weyl_f3", "f2quot", "euler_q", "f3quot_euler", "f2_poly"]


@functools.lru_cache(maxsize=None)
def get(name):
    """Built-in algebras are immutable, so one instance per session is enough."""
    return algebra(name)


@pytest.fixture
def rng():
    return random.Random(20240917)


# acceptance lines are collected here and echoed in the terminal summary
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])

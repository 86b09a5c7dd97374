import random

import pytest
from hypothesis import HealthCheck, settings

from jacobikit import Chart, parse_scalar
from jacobikit.jacobi import generators as gen

settings.register_profile(
    "exact",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("exact")


@pytest.fixture
def R2():
    return Chart.standard(2)


@pytest.fixture
def R3():
    return Chart.standard(3)


@pytest.fixture
def R4():
    return Chart.standard(4)


def S(text, chart):
    return parse_scalar(text, chart)


def rand_scalar(chart, seed, **kw):
    return gen.random_scalar(chart, random.Random(seed), **kw)

import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite", max_examples=60,
    suppress_health_check=[HealthCheck.too_slow], deadline=None)
settings.load_profile("suite")


@pytest.fixture
def rng():
    return random.Random(0xD06)


def random_graph(n, p, rng):
    from domguard.graph import Graph

    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)

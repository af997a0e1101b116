import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from collinear import PointSet
from collinear.inputs import planted, uniform

settings.register_profile(
    "default", deadline=None, max_examples=150,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def point_sets(draw, min_size=1, max_size=30, box=6):
    """Small boxes so that collinear triples are common."""
    coord = st.integers(-box, box)
    pts = draw(st.lists(st.tuples(coord, coord), min_size=min_size,
                        max_size=max_size, unique=True))
    return PointSet(pts)


def fuzz_corpus(count, seed=0, max_n=60):
    """Seeded mix of uniform and planted-line instances."""
    rng = random.Random(seed)
    for k in range(count):
        s = rng.getrandbits(32)
        if k % 2 == 0:
            box = rng.choice([3, 5, 10, 20])
            n = min(rng.randint(1, max_n), (2 * box + 1) ** 2)
            yield uniform(n, box, s)
        else:
            lines = rng.randint(1, 4)
            per_line = rng.randint(3, 8)
            noise = rng.randint(0, max(0, max_n - lines * per_line))
            yield planted(lines, per_line, noise, rng.choice([None, 12, 20]), s)


@pytest.fixture
def grid3():
    return PointSet((x, y) for y in range(3) for x in range(3))


# One line per acceptance criterion, printed after the run.
ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {label}: {detail}")

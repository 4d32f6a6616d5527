import random

import pytest
from hypothesis import strategies as st

from ellgenus import FixedPointData, FixedPointDatum

WEIGHTS = [m for m in range(-5, 6) if m]


def random_data(rng: random.Random, dim=None, max_points=4) -> FixedPointData:
    dim = dim if dim is not None else rng.choice([2, 4, 6, 8])
    points = [FixedPointDatum(rng.choice([1, -1]), tuple(rng.choice(WEIGHTS) for _ in range(dim // 2)))
              for _ in range(rng.randint(1, max_points))]
    return FixedPointData(dim, tuple(points))


def compatible_partner(rng: random.Random, p: FixedPointDatum) -> FixedPointDatum:
    """A fixed point that can be glued to p: same |weights|, shuffled, right sign parity."""
    weights = [abs(m) * rng.choice([1, -1]) for m in p.weights]
    rng.shuffle(weights)
    negatives = sum(m < 0 for m in p.weights) + sum(m < 0 for m in weights)
    sign = p.sign if negatives % 2 else -p.sign
    return FixedPointDatum(sign, tuple(weights))


@st.composite
def fixed_point_data(draw, dims=(2, 4, 6), max_points=3):
    dim = draw(st.sampled_from(dims))
    point = st.builds(FixedPointDatum, st.sampled_from([1, -1]),
                      st.lists(st.sampled_from(WEIGHTS), min_size=dim // 2, max_size=dim // 2).map(tuple))
    return FixedPointData(dim, tuple(draw(st.lists(point, min_size=0, max_size=max_points))))


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- acceptance summary -------------------------------------------------------

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.outcome == "failed":
        _acceptance[report.nodeid] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_acceptance.items()):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line("%s %s" % ("PASS" if outcome == "passed" else "FAIL", name))

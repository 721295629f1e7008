import json
from fractions import Fraction as Q

import pytest
from hypothesis import HealthCheck, settings

from artifact import DigitSequence, GridRepresentation, GridSystem

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("suite")


def golden_system() -> GridSystem:
    """Three dyadic grids in the plane: anchors 1/3, 2/3, 1/5 on the
    diagonal, digit rows (10), (01), (0) repeating."""
    g1 = GridRepresentation(
        2,
        (Q(1, 3), Q(1, 3)),
        (DigitSequence(2, (), (1, 0)), DigitSequence(2, (), (1, 0))),
    )
    g2 = GridRepresentation(
        2,
        (Q(2, 3), Q(2, 3)),
        (DigitSequence(2, (), (0, 1)), DigitSequence(2, (), (0, 1))),
    )
    g3 = GridRepresentation(
        2,
        (Q(1, 5), Q(1, 5)),
        (DigitSequence(2, (), (0,)), DigitSequence(2, (), (0,))),
    )
    return GridSystem(2, 2, (g1, g2, g3))


def degenerate_system() -> GridSystem:
    """Non-example: anchors (0,0), (0,1/3), (1/3,1/3) share coordinates."""
    zero_rows = (DigitSequence(2, (), (0,)), DigitSequence(2, (), (0,)))
    return GridSystem(
        2,
        2,
        (
            GridRepresentation(2, (Q(0), Q(0)), zero_rows),
            GridRepresentation(2, (Q(0), Q(1, 3)), zero_rows),
            GridRepresentation(2, (Q(1, 3), Q(1, 3)), zero_rows),
        ),
    )


GOLDEN_SPEC = {
    "n": 2,
    "d": 2,
    "grids": [
        {
            "delta": ["1/3", "1/3"],
            "digit_rows": [
                {"preperiod": [], "period": [1, 0]},
                {"preperiod": [], "period": [1, 0]},
            ],
        },
        {
            "delta": ["2/3", "2/3"],
            "digit_rows": [
                {"preperiod": [], "period": [0, 1]},
                {"preperiod": [], "period": [0, 1]},
            ],
        },
        {
            "delta": ["1/5", "1/5"],
            "digit_rows": [
                {"preperiod": [], "period": [0]},
                {"preperiod": [], "period": [0]},
            ],
        },
    ],
}

DEGENERATE_SPEC = {
    "n": 2,
    "d": 2,
    "grids": [
        {
            "delta": [a, b],
            "digit_rows": [
                {"preperiod": [], "period": [0]},
                {"preperiod": [], "period": [0]},
            ],
        }
        for a, b in [("0", "0"), ("0", "1/3"), ("1/3", "1/3")]
    ],
}


@pytest.fixture(scope="session")
def sys5() -> GridSystem:
    return golden_system()


@pytest.fixture(scope="session")
def fig_degenerate() -> GridSystem:
    return degenerate_system()


@pytest.fixture
def write_spec(tmp_path):
    """Dump a system description dict to a JSON file, return the path string."""

    def _write(obj, name="spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return _write

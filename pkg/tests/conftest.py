import functools
from pathlib import Path

import pytest

from sweeplab import Params, StepWord, enumerate_dyck, make_params

# Every parameter set exercised by the acceptance suite; the d > 1 sets
# exercise the rank-tie rules.
PARAM_SETS = [
    (3, 2, 1),
    (5, 2, 1),
    (5, 3, 1),
    (7, 4, 1),
    (7, 5, 1),
    (8, 5, 1),
    (1, 1, 2),
    (2, 1, 2),
    (3, 2, 2),
    (2, 1, 3),
]

GOLDEN_DIR = Path(__file__).parent / "golden"


@functools.lru_cache(maxsize=None)
def all_dyck(m: int, n: int, d: int) -> tuple[StepWord, ...]:
    return tuple(enumerate_dyck(make_params(m, n, d)))


def golden_bytes(name: str) -> bytes:
    return (GOLDEN_DIR / name).read_bytes()


@pytest.fixture
def p321() -> Params:
    return make_params(3, 2, 1)


@pytest.fixture
def p112() -> Params:
    return make_params(1, 1, 2)

import math

import numpy as np
import pytest

from stiefelcodes import Field, StiefelCode, random_stiefel


def brute_min_distance(code: StiefelCode) -> float:
    """Independent oracle: plain loop over all pairs with numpy norms."""
    best = math.inf
    for i in range(code.n):
        for j in range(i + 1, code.n):
            best = min(best, float(np.linalg.norm(code.array[i] - code.array[j])))
    return best


def brute_pair_traces(code: StiefelCode) -> list[float]:
    out = []
    for i in range(code.n):
        for j in range(i + 1, code.n):
            out.append(float(np.sum(code.array[i].conj() * code.array[j]).real))
    return out


def random_code(field: Field, d: int, r: int, n: int, seed: int) -> StiefelCode:
    rng = np.random.default_rng(seed)
    return StiefelCode.from_points(field, [random_stiefel(field, d, r, rng).mat for _ in range(n)])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)

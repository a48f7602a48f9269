import random

import pytest
from hypothesis import strategies as st

from sequency import SignMatrix, SignVector


def sign_lists(min_size=1, max_size=40):
    return st.lists(st.sampled_from([1, -1]), min_size=min_size, max_size=max_size)


@st.composite
def sign_matrices(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    cols = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return SignMatrix(tuple(cols))


def random_matrix(rng: random.Random, n: int) -> SignMatrix:
    return SignMatrix(tuple(rng.getrandbits(n) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def vec():
    return lambda *signs: SignVector.from_signs(signs)

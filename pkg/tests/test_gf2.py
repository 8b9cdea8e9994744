import random

import pytest
from hypothesis import given, strategies as st

from atomgenus.gf2 import Gf2Matrix, corank, mask_rank, principal_submatrix, rank

from oracles import dense_rank_gf2


def from_lists(rows: list[list[int]]) -> Gf2Matrix:
    dim = len(rows)
    packed = []
    for r in rows:
        bits = 0
        for j, v in enumerate(r):
            if v:
                bits |= 1 << j
        packed.append(bits)
    return Gf2Matrix(dim, tuple(packed))


def test_rank_small_cases():
    assert rank(from_lists([])) == 0
    assert rank(from_lists([[0]])) == 0
    assert rank(from_lists([[1]])) == 1
    assert rank(from_lists([[0, 1], [1, 0]])) == 2
    assert rank(from_lists([[1, 1], [1, 1]])) == 1


def test_corank():
    m = from_lists([[1, 1], [1, 1]])
    assert corank(m) == 1
    assert corank(from_lists([[0, 0], [0, 0]])) == 2


def test_principal_submatrix():
    m = from_lists([[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    sub = principal_submatrix(m, [0, 2])
    assert sub.to_lists() == [[1, 0], [0, 1]]
    assert principal_submatrix(m, []).dim == 0
    with pytest.raises(IndexError):
        principal_submatrix(m, [3])


@given(st.integers(0, 2**30 - 1))
def test_rank_random_vs_dense(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 8)
    rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
    assert rank(from_lists(rows)) == dense_rank_gf2(rows)


@given(st.integers(0, 2**30 - 1))
def test_mask_rank_matches_submatrix_rank(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
    m = from_lists(rows)
    mask = rng.randrange(1 << n)
    indices = [i for i in range(n) if mask >> i & 1]
    assert mask_rank(m.rows, mask) == rank(principal_submatrix(m, indices))


def test_rank_is_monotone_under_principal_extension():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 7)
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        m = from_lists(rows)
        mask = rng.randrange(1 << n)
        bigger = mask | (1 << rng.randrange(n))
        assert mask_rank(m.rows, mask) <= mask_rank(m.rows, bigger)

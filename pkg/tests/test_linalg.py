"""Incremental echelon form over a prime field."""

import random

import numpy as np
import pytest

from fsing.errors import UsageError
from fsing.linalg import Echelon, rank


def test_rank_of_known_matrix():
    # rows 2 and 3 are multiples of row 1 mod 5
    m = np.array([[1, 2, 3], [2, 4, 6], [3, 6, 9], [0, 1, 1]])
    assert rank(m, 5) == 2


def test_rank_of_empty_matrix():
    assert rank(np.zeros((0, 3), dtype=np.int64), 5) == 0


def test_echelon_add_and_contains():
    ech = Echelon(7, 3)
    assert ech.add([1, 2, 3])
    assert not ech.add([2, 4, 6])  # dependent
    assert ech.add([0, 1, 0])
    assert ech.rank == 2
    assert ech.contains([1, 3, 3])          # row1 + row2
    assert not ech.contains([0, 0, 1])


def test_zero_row_never_increases_rank():
    ech = Echelon(3, 4)
    assert not ech.add([0, 0, 0, 0])
    assert ech.rank == 0
    assert ech.contains([0, 0, 0, 0])


def test_width_mismatch_rejected():
    ech = Echelon(3, 4)
    with pytest.raises(UsageError):
        ech.add([1, 2])


def test_rank_matches_brute_force_span():
    rng = random.Random(20260819)
    p = 5
    for _ in range(20):
        width = rng.randrange(2, 5)
        rows = [
            [rng.randrange(p) for _ in range(width)]
            for _ in range(rng.randrange(1, 5))
        ]
        ech = Echelon(p, width)
        for row in rows:
            ech.add(list(row))
        # brute force the span: close under adding multiples of each row
        span = {tuple([0] * width)}
        changed = True
        while changed:
            changed = False
            for row in rows:
                for vec in list(span):
                    for c in range(1, p):
                        cand = tuple((v + c * r) % p for v, r in zip(vec, row))
                        if cand not in span:
                            span.add(cand)
                            changed = True
        assert len(span) == p ** ech.rank


def test_reduce_returns_residual():
    ech = Echelon(5, 3)
    ech.add([1, 0, 2])
    residual = ech.reduce([1, 1, 2])
    assert residual[0] == 0
    assert residual.any()
    assert not ech.reduce([2, 0, 4]).any()


def test_rows_are_rref():
    ech = Echelon(7, 3)
    ech.add([2, 2, 4])
    ech.add([1, 2, 3])
    rows = ech.rows()
    assert rows.shape == (2, 3)
    # pivots are monic and cleared in the other row
    assert rows[0][0] == 1 and rows[1][0] == 0
    assert rows[1][1] == 1 and rows[0][1] == 0

import random
from fractions import Fraction

import pytest

from detkit.linalg import rank, row_reduce, solve_column
from detkit.poly import QQ, PrimeField


def test_row_reduce_known():
    rows = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    red, piv = row_reduce(rows, QQ)
    assert piv == [0, 1]
    assert red == [
        [Fraction(1), Fraction(0), Fraction(1)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    assert rank(rows, QQ) == 2


def test_row_reduce_identity_and_empty():
    red, piv = row_reduce([], QQ)
    assert red == [] and piv == []
    rows = [[Fraction(0), Fraction(5)], [Fraction(3), Fraction(0)]]
    red, piv = row_reduce(rows, QQ)
    assert piv == [0, 1]
    assert red == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    with pytest.raises(ValueError):
        row_reduce([[Fraction(1)], [Fraction(1), Fraction(2)]], QQ)


def test_rank_random_products():
    # rank of an outer product bounded by 1; sums of k outer products by k
    rng = random.Random(3)
    fp = PrimeField(32003)
    for _ in range(20):
        n, m = rng.randint(2, 5), rng.randint(2, 5)
        k = rng.randint(1, 2)
        mat = [[fp.zero] * m for _ in range(n)]
        for _ in range(k):
            u = [fp.of_int(rng.randint(0, 10)) for _ in range(n)]
            v = [fp.of_int(rng.randint(0, 10)) for _ in range(m)]
            for i in range(n):
                for j in range(m):
                    mat[i][j] = fp.add(mat[i][j], fp.mul(u[i], v[j]))
        assert rank(mat, fp) <= k


def test_rref_is_projection():
    rng = random.Random(8)
    fp = PrimeField(101)
    for _ in range(20):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[fp.of_int(rng.randint(-5, 5)) for _ in range(m)] for _ in range(n)]
        red, piv = row_reduce(rows, fp)
        again, piv2 = row_reduce(red, fp)
        assert again == red and piv2 == piv
        for r, c in zip(red, piv):
            assert r[c] == fp.one
            for other in red:
                if other is not r:
                    assert other[c] == fp.zero


def test_solve_column():
    cols = [
        [Fraction(1), Fraction(0), Fraction(1)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    x = solve_column(cols, [Fraction(2), Fraction(3), Fraction(5)], QQ)
    assert x == [Fraction(2), Fraction(3)]
    assert solve_column(cols, [Fraction(1), Fraction(1), Fraction(0)], QQ) is None
    # underdetermined: free variable pinned to zero, residual still exact
    cols2 = [[Fraction(1)], [Fraction(2)]]
    x2 = solve_column(cols2, [Fraction(4)], QQ)
    assert x2 is not None
    assert x2[0] + 2 * x2[1] == Fraction(4)
import itertools
import random

import pytest

from ffext.linalg import left_nullspace, nullspace, rref, solve


def rand_matrix(rng, nrows, ncols, m):
    return [[rng.randrange(m) for _ in range(ncols)] for _ in range(nrows)]


def mat_vec(rows, v, m):
    return [sum(a * b for a, b in zip(row, v)) % m for row in rows]


def brute_nullspace_size(rows, ncols, m):
    count = 0
    for v in itertools.product(range(m), repeat=ncols):
        if all(x == 0 for x in mat_vec(rows, v, m)):
            count += 1
    return count


def test_rref_identity():
    red, pivots = rref([[1, 0], [0, 1]], 5)
    assert red == [[1, 0], [0, 1]]
    assert pivots == [0, 1]


def test_rref_is_reduced():
    rng = random.Random(3)
    for m in (2, 3, 5):
        for _ in range(50):
            rows = rand_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5), m)
            red, pivots = rref(rows, m)
            for r, c in enumerate(pivots):
                assert red[r][c] == 1
                for i in range(len(red)):
                    if i != r:
                        assert red[i][c] == 0
            # rows below the last pivot vanish
            for i in range(len(pivots), len(red)):
                assert all(x == 0 for x in red[i])


@pytest.mark.parametrize("m", [2, 3, 5])
def test_nullspace_kills_and_spans(m):
    rng = random.Random(17)
    for _ in range(60):
        nrows = rng.randrange(0, 4)
        ncols = rng.randrange(1, 5)
        rows = rand_matrix(rng, nrows, ncols, m)
        basis = nullspace(rows, ncols, m)
        for v in basis:
            assert all(x == 0 for x in mat_vec(rows, v, m))
        # count matches the exhaustive kernel size, which also pins down
        # independence of the basis
        assert m ** len(basis) == brute_nullspace_size(rows, ncols, m)
        assert len({tuple(v) for v in basis}) == len(basis)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_left_nullspace_is_row_kernel(m):
    rng = random.Random(23)
    for _ in range(60):
        nrows = rng.randrange(1, 5)
        ncols = rng.randrange(1, 5)
        rows = rand_matrix(rng, nrows, ncols, m)
        basis = left_nullspace(rows, m)
        for v in basis:
            combo = [
                sum(v[i] * rows[i][j] for i in range(nrows)) % m
                for j in range(ncols)
            ]
            assert all(x == 0 for x in combo)
        tr = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
        assert m ** len(basis) == brute_nullspace_size(tr, nrows, m)


def test_left_nullspace_empty():
    assert left_nullspace([], 3) == []


@pytest.mark.parametrize("m", [2, 3, 5])
def test_solve_agrees_with_brute_force(m):
    rng = random.Random(29)
    for _ in range(80):
        nrows = rng.randrange(1, 4)
        ncols = rng.randrange(1, 4)
        rows = rand_matrix(rng, nrows, ncols, m)
        rhs = [rng.randrange(m) for _ in range(nrows)]
        x = solve(rows, rhs, m)
        solvable = any(
            mat_vec(rows, v, m) == rhs
            for v in itertools.product(range(m), repeat=ncols)
        )
        if x is None:
            assert not solvable
        else:
            assert mat_vec(rows, x, m) == rhs


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [0, 1], 2) is None
    assert solve([[2]], [1], 5) == [3]

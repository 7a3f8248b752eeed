import random
from fractions import Fraction as Q

import pytest

from kostka import linalg
from kostka.errors import (MultipleSolutionsError, NoSolutionError,
                           SingularMatrixError)


def test_solve_1x1():
    assert linalg.solve_unique([[2]], [1]) == (Q(1, 2),)


def test_solve_c2_cartan_system():
    # 2x - y = 1, -2x + 2y = 0  =>  x = y = 1 (by hand elimination)
    assert linalg.solve_unique([[2, -1], [-2, 2]], [1, 0]) == (1, 1)


def test_solve_inconsistent():
    with pytest.raises(NoSolutionError):
        linalg.solve_unique([[1, 1], [2, 2]], [1, 3])


def test_solve_underdetermined():
    with pytest.raises(MultipleSolutionsError):
        linalg.solve_unique([[1, 1], [2, 2]], [1, 2])


def test_invert_1x1():
    assert linalg.invert([[2]]) == ((Q(1, 2),),)


def test_invert_c2_cartan():
    inv = linalg.invert([[2, -1], [-2, 2]])
    assert inv == ((1, Q(1, 2)), (1, 1))  # = (1/2) * [[2,1],[2,2]]


def test_invert_identity():
    assert linalg.invert(linalg.identity(3)) == linalg.identity(3)


def test_invert_singular():
    with pytest.raises(SingularMatrixError):
        linalg.invert([[1, 2], [2, 4]])


def test_rank_examples():
    assert linalg.rank(((0, 0), (0, 0))) == 0
    assert linalg.rank(linalg.identity(4)) == 4
    assert linalg.rank(((1, 2), (2, 4))) == 1


def test_nullspace_dim_examples():
    assert linalg.nullspace_dim(linalg.identity(3)) == 0
    assert linalg.nullspace_dim(((0, 0, 0),)) == 3
    assert linalg.nullspace_dim(((1, -1),)) == 1
    assert linalg.nullspace_dim((), cols=5) == 5


def test_det_examples():
    assert linalg.det(()) == 1
    assert linalg.det(((2, -1), (-2, 2))) == 2
    assert linalg.det(((1, 2), (2, 4))) == 0


def _random_matrix(rng, n):
    return linalg.matrix([[Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
                          for _ in range(n)])


def test_inverse_roundtrip_random():
    rng = random.Random(7)
    done = 0
    while done < 25:
        n = rng.randint(1, 5)
        a = _random_matrix(rng, n)
        try:
            inv = linalg.invert(a)
        except SingularMatrixError:
            continue
        assert linalg.mat_mul(a, inv) == linalg.identity(n)
        assert linalg.invert(inv) == a
        done += 1


def test_solve_exactness_random():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = _random_matrix(rng, n)
        x = linalg.vector([Q(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)])
        b = linalg.mat_vec(a, x)
        try:
            got = linalg.solve_unique(a, b)
        except MultipleSolutionsError:
            continue
        assert linalg.mat_vec(a, got) == tuple(b)


def test_rank_equals_transpose_rank_random():
    rng = random.Random(13)
    for _ in range(30):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        a = linalg.matrix([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
        assert linalg.rank(a) == linalg.rank(linalg.transpose(a))

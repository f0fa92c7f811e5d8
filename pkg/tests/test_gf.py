from __future__ import annotations

import random
from itertools import combinations

import pytest

from ekrcomplex.errors import DomainError, InputError
from ekrcomplex.gf import (
    DEFAULT_PRIME,
    PrimeMatrix,
    check_prime,
    det,
    greedy_pivot_columns,
    inverse,
    minor_det,
    random_matrix,
    rank,
)

P = DEFAULT_PRIME


def cofactor_det(rows, p):
    """Laplace expansion along the first row."""
    if not rows:
        return 1
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * a * cofactor_det(sub, p)
    return total % p


def test_inverse():
    rng = random.Random(1)
    for _ in range(1000):
        x = rng.randrange(1, P)
        assert x * inverse(x, P) % P == 1


def test_check_prime():
    assert check_prime(7) == 7
    with pytest.raises(InputError):
        check_prime(9)


def test_rank_basics():
    assert rank(PrimeMatrix.identity(5)) == 5
    assert rank(PrimeMatrix.zeros(3, 4)) == 0


def test_greedy_pivots():
    m = PrimeMatrix.from_rows([[1, 1, 0], [0, 0, 1]])
    assert [c + 1 for c in greedy_pivot_columns(m)] == [1, 3]
    g = random_matrix(4, 4, seed=3)
    assert greedy_pivot_columns(g) == [0, 1, 2, 3]


@pytest.mark.parametrize("p", [2, 3, 101, P])
def test_det_matches_cofactor_expansion(p):
    for seed in range(20):
        size = seed % 5 + 1
        g = random_matrix(size, size, seed, p)
        assert det(g) == cofactor_det(g.rows(), p)


def test_minors():
    ident = PrimeMatrix.identity(4)
    assert minor_det(ident, (1, 3), (1, 3)) == 1
    assert minor_det(ident, (1, 3), (2, 3)) == 0
    g = random_matrix(4, 4, seed=5)
    assert minor_det(g, (2,), (3,)) == g[1, 2]
    rows = g.rows()
    for rs in combinations(range(4), 2):
        for cs in combinations(range(4), 2):
            sub = [[rows[i][j] for j in cs] for i in rs]
            assert minor_det(g, [i + 1 for i in rs], [j + 1 for j in cs]) == cofactor_det(sub, P)
    with pytest.raises(DomainError):
        minor_det(g, (1, 2), (1,))


def test_random_matrix_determinism_and_genericity():
    assert random_matrix(6, 6, 11) == random_matrix(6, 6, 11)
    full = sum(rank(random_matrix(6, 6, s)) == 6 for s in range(1000))
    assert full >= 990
    distinct = sum(random_matrix(3, 3, s) != random_matrix(3, 3, s + 1000) for s in range(100))
    assert distinct == 100


def test_matmul_against_identity():
    g = random_matrix(3, 3, 2)
    assert g @ PrimeMatrix.identity(3) == g

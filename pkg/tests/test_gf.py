import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fpdec.gf import (
    Matrix,
    PrimeField,
    is_prime,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    row_space,
    rref,
    solve,
)


def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_prime_field_rejects_bad_moduli():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(TypeError):
        PrimeField(5.0)
    with pytest.raises(ValueError):
        PrimeField(2**31)  # above the supported bound


def test_field_ops():
    f = PrimeField(7)
    assert f.add(5, 4) == 2
    assert f.sub(2, 5) == 4
    assert f.neg(3) == 4
    assert f.mul(5, 5) == 4
    assert f.inv(3) == 5
    assert f.pow(3, 6) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_rref_properties(n_rows, n_cols, rng):
    field = PrimeField(5)
    m = Matrix(field, [[rng.randrange(5) for _ in range(n_cols)] for _ in range(n_rows)])
    reduced, pivots = rref(m)
    # pivot structure: strictly increasing columns, unit pivot, zeros elsewhere
    assert pivots == sorted(pivots)
    for i, c in enumerate(pivots):
        assert reduced.entries[i][c] == 1
        assert all(reduced.entries[k][c] == 0 for k in range(n_rows) if k != i)
    # rref is idempotent
    again, again_pivots = rref(reduced)
    assert again.entries == reduced.entries and again_pivots == pivots
    # rank = number of pivots
    assert rank(m) == len(pivots)


@given(st.integers(2, 6), st.integers(2, 6), st.randoms(use_true_random=False))
def test_kernel_vectors_annihilate(n_rows, n_cols, rng):
    field = PrimeField(7)
    m = Matrix(field, [[rng.randrange(7) for _ in range(n_cols)] for _ in range(n_rows)])
    basis = kernel_basis(m)
    assert len(basis) == n_cols - rank(m)
    for v in basis:
        assert mat_vec(m, v) == [0] * n_rows


def test_solve_consistent_and_inconsistent():
    field = PrimeField(5)
    m = Matrix(field, [[1, 2], [3, 4]])
    x = solve(m, [1, 0])
    assert mat_vec(m, x) == [1, 0]
    # rank-1 system with incompatible right-hand side
    m2 = Matrix(field, [[1, 2], [2, 4]])
    assert solve(m2, [0, 1]) is None
    x2 = solve(m2, [1, 2])
    assert mat_vec(m2, x2) == [1, 2]


def test_mat_mul_identity_and_shapes():
    field = PrimeField(3)
    m = Matrix(field, [[1, 2, 0], [0, 1, 2]])
    assert mat_mul(m, Matrix.identity(field, 3)).entries == m.entries
    assert mat_mul(Matrix.identity(field, 2), m).entries == m.entries
    with pytest.raises(ValueError):
        mat_mul(m, m)


def test_row_space_canonical():
    field = PrimeField(5)
    a = row_space([[1, 2, 3], [2, 4, 1]], field)
    b = row_space([[3, 6, 4], [1, 2, 3], [2, 4, 1]], field)
    assert a == b == [[1, 2, 3]]
    assert row_space([[0, 0, 0]], field) == []


def test_matrix_transpose_and_column():
    field = PrimeField(5)
    m = Matrix(field, [[1, 2], [3, 4], [0, 1]])
    assert m.transpose().entries == [[1, 3, 0], [2, 4, 1]]
    assert m.column(1) == [2, 4, 1]
    assert Matrix.zero(field, 2, 3).entries == [[0, 0, 0], [0, 0, 0]]


def test_entries_are_reduced():
    field = PrimeField(5)
    m = Matrix(field, [[7, -1], [10, 3]])
    assert m.entries == [[2, 4], [0, 3]]


def test_random_solve_roundtrip():
    rng = random.Random(11)
    field = PrimeField(13)
    for _ in range(25):
        n = rng.randrange(1, 5)
        m = Matrix(field, [[rng.randrange(13) for _ in range(n)] for _ in range(n)])
        x = [rng.randrange(13) for _ in range(n)]
        b = mat_vec(m, x)
        got = solve(m, b)
        assert got is not None
        assert mat_vec(m, got) == b

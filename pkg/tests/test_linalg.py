import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcross.errors import ShapeMismatchError, SingularMatrixError
from hopfcross.linalg import (
    Matrix,
    PrimeField,
    QuotientSpace,
    Rationals,
    in_span,
    is_prime,
    row_space_basis,
    solve_linear,
)

Q = Rationals()
F5 = PrimeField(5)


def qmat(rows):
    return Matrix(Q, [[Fraction(x) for x in r] for r in rows])


def fpmat(field, rows):
    return Matrix(field, [[field.from_int(x) for x in r] for r in rows])


def test_prime_check():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        PrimeField(4)


def test_fp_arithmetic():
    a = F5.from_int(3)
    b = F5.from_int(4)
    assert a + b == F5.from_int(2)
    assert a * b == F5.from_int(2)
    assert a / b == a * F5.from_int(4)  # 4^{-1} = 4 mod 5
    assert -a == F5.from_int(2)
    assert not F5.zero
    assert F5.one


def test_solve_identity():
    m = Matrix.identity(Q, 3)
    b = (Fraction(1), Fraction(2), Fraction(3))
    res = solve_linear(m, b)
    assert res.consistent
    assert res.solution == b
    assert res.kernel == []


def test_solve_inconsistent_certificate():
    m = qmat([[1, 1], [1, 1]])
    res = solve_linear(m, (Fraction(1), Fraction(0)))
    assert not res.consistent
    y = res.certificate
    # y^T M = 0 but y^T b != 0
    assert all(
        sum(y[i] * m.data[i][j] for i in range(2)) == 0 for j in range(2)
    )
    assert y[0] * 1 + y[1] * 0 != 0


def test_solve_f5_against_exhaustive_oracle():
    m = fpmat(F5, [[2, 1], [1, 1]])
    b = (F5.one, F5.one)
    # oracle: exhaustive check of all 25 candidate vectors
    hits = [
        (F5.from_int(x), F5.from_int(y))
        for x in range(5)
        for y in range(5)
        if m.apply((F5.from_int(x), F5.from_int(y))) == b
    ]
    assert hits == [(F5.zero, F5.one)]
    res = solve_linear(m, b)
    assert res.solution == (F5.zero, F5.one)


def test_solve_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        solve_linear(Matrix.identity(Q, 2), (Fraction(1),))


def test_kernel_zero_matrix():
    m = Matrix.zeros(Q, 2, 3)
    basis = m.kernel_basis()
    assert basis == [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]


def test_kernel_invertible_empty():
    m = qmat([[1, 2], [3, 4]])
    assert m.kernel_basis() == []


def test_kernel_rank_one():
    m = qmat([[1, 1], [1, 1]])
    # oracle: brute-force nullity over a small integer grid
    grid_null = [
        (x, y)
        for x in range(-2, 3)
        for y in range(-2, 3)
        if x + y == 0 and (x, y) != (0, 0)
    ]
    assert grid_null  # nullity >= 1
    basis = m.kernel_basis()
    assert len(basis) == 1
    v = basis[0]
    assert m.apply(v) == (Fraction(0), Fraction(0))
    # up to scaling: (1, -1)
    assert v[0] * Fraction(-1) == v[1]


def test_invert_examples():
    assert Matrix.identity(Q, 3).inverse() == Matrix.identity(Q, 3)
    swap = qmat([[0, 1], [1, 0]])
    assert swap.inverse() == swap
    with pytest.raises(SingularMatrixError):
        qmat([[1, 1], [1, 1]]).inverse()


def test_det():
    assert qmat([[2, 0], [0, 3]]).det() == 6
    assert qmat([[0, 1], [1, 0]]).det() == -1
    assert qmat([[1, 1], [1, 1]]).det() == 0


def test_rank_nullity_on_random_sparse_matrices():
    rng = random.Random(20240811)
    for field in (Q, PrimeField(7)):
        for _ in range(25):
            rows = rng.randint(1, 8)
            cols = rng.randint(1, 8)
            data = [[field.zero] * cols for _ in range(rows)]
            for _ in range(rng.randint(0, rows * cols // 2)):
                data[rng.randrange(rows)][rng.randrange(cols)] = field.random(rng)
            m = Matrix(field, data)
            assert m.rank() + len(m.kernel_basis()) == cols
            assert m.rank() <= min(rows, cols)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
        min_size=2,
        max_size=4,
    ),
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
)
def test_solve_recovers_known_solution(rows, x):
    m = qmat(rows)
    xv = tuple(Fraction(v) for v in x)
    b = m.apply(xv)
    res = solve_linear(m, b)
    assert res.consistent
    # x lies in the returned affine solution space
    diff = tuple(a - b2 for a, b2 in zip(xv, res.solution))
    span = row_space_basis(Q, res.kernel, m.cols)
    assert in_span(Q, span, diff)


def test_rref_determinism():
    m = qmat([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    r1 = m.rref()
    r2 = qmat([[0, 2, 4], [1, 1, 1], [1, 3, 5]]).rref()
    assert r1[0] == r2[0] and r1[1] == r2[1]


def test_quotient_space():
    # Q^3 modulo span{(1, 1, 0)}
    rels = [(Fraction(1), Fraction(1), Fraction(0))]
    q = QuotientSpace(Q, 3, rels)
    assert q.dim == 2
    assert q.complement == [1, 2]
    v = (Fraction(2), Fraction(3), Fraction(4))
    coords = q.project(v)
    # class of v equals class of its lift
    assert q.project(q.lift(coords)) == coords
    # relation vector projects to zero
    assert q.project(rels[0]) == (Fraction(0), Fraction(0))


def test_kron_indexing():
    a = qmat([[1, 2]])
    b = qmat([[3], [4]])
    k = a.kron(b)
    assert k.rows == 2 and k.cols == 2
    assert k.data[0] == (Fraction(3), Fraction(6))
    assert k.data[1] == (Fraction(4), Fraction(8))

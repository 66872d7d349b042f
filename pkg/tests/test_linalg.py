import random

import pytest

from deloop_kit.linalg import (
    Matrix,
    QQ,
    ScalarFormatError,
    kernel_basis,
    min_poly,
    parse_scalar,
    rational_roots,
    rref,
    scalar_to_str,
    solve_linear,
)


def test_scalar_roundtrip():
    for s in ["0", "1", "-1", "7", "-3/2", "22/7", "1/1000000007"]:
        assert scalar_to_str(parse_scalar(s)) == s


@pytest.mark.parametrize("bad", ["2/4", "1/-2", "4/1", "0/3", "+1", "007", "1/1", "-0", "", "a", "1.5", " 1"])
def test_scalar_rejects_non_canonical(bad):
    with pytest.raises(ScalarFormatError):
        parse_scalar(bad)


def test_rref_identity():
    r, p = rref(Matrix.identity(2))
    assert r == Matrix.identity(2)
    assert p == (0, 1)


def test_rref_zero():
    r, p = rref(Matrix.zero(3, 3))
    assert r == Matrix.zero(3, 3)
    assert p == ()


def test_rref_rank_one():
    r, p = rref(Matrix.from_rows([[2, 4], [1, 2]]))
    assert r == Matrix.from_rows([[1, 2], [0, 0]])
    assert p == (0,)


def test_rref_idempotent():
    rng = random.Random(7)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix(rows, cols, [QQ(rng.randint(-4, 4)) for _ in range(rows * cols)])
        r1, p1 = rref(m)
        r2, p2 = rref(r1)
        assert r1 == r2 and p1 == p2


def test_solve_identity():
    b = Matrix.column([3, -5])
    assert solve_linear(Matrix.identity(2), b) == b


def test_solve_inconsistent():
    assert solve_linear(Matrix.from_rows([[1, 1], [1, 1]]), Matrix.column([0, 1])) is None


def test_solve_scalar_division():
    assert solve_linear(Matrix.from_rows([[2]]), Matrix.column([3])) == Matrix.column([QQ(3, 2)])


def test_solve_exact_on_random_systems():
    rng = random.Random(11)
    for _ in range(30):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        a = Matrix(rows, cols, [QQ(rng.randint(-3, 3)) for _ in range(rows * cols)])
        x0 = Matrix.column([QQ(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)])
        b = a * x0
        x = solve_linear(a, b)
        assert x is not None
        assert a * x == b  # exact, no tolerance


def test_kernel_identity_empty():
    assert kernel_basis(Matrix.identity(4)) == []


def test_kernel_zero_matrix_full():
    assert len(kernel_basis(Matrix.zero(2, 3))) == 3


def test_kernel_row_vector():
    (v,) = kernel_basis(Matrix.from_rows([[1, 2]]))
    assert v == Matrix.column([-2, 1])


def test_rank_nullity_random():
    rng = random.Random(13)
    for _ in range(30):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = Matrix(rows, cols, [QQ(rng.randint(-4, 4)) for _ in range(rows * cols)])
        assert m.rank() + len(kernel_basis(m)) == cols


def test_kernel_vectors_solve_exactly():
    rng = random.Random(17)
    for _ in range(20):
        rows, cols = rng.randint(1, 5), rng.randint(1, 6)
        m = Matrix(rows, cols, [QQ(rng.randint(-3, 3)) for _ in range(rows * cols)])
        for v in kernel_basis(m):
            assert (m * v).is_zero()


def test_min_poly_and_roots():
    m = Matrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 2]])
    coeffs = min_poly(m)
    assert len(coeffs) == 3  # (x-1)(x-2)
    roots, rem = rational_roots(coeffs)
    assert sorted(roots) == [QQ(1), QQ(2)]
    assert rem == 0


def test_min_poly_nilpotent():
    m = Matrix.from_rows([[0, 1], [0, 0]])
    coeffs = min_poly(m)
    roots, rem = rational_roots(coeffs)
    assert roots == [QQ(0), QQ(0)] and rem == 0


def test_rational_roots_irreducible_remainder():
    # x^2 + 1 has no rational roots.
    roots, rem = rational_roots([QQ(1), QQ(0), QQ(1)])
    assert roots == [] and rem == 2


def test_inverse():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert m * m.inverse() == Matrix.identity(2)


def test_zero_dim_matrices():
    z = Matrix.zero(0, 3)
    assert len(kernel_basis(z)) == 3
    z2 = Matrix.zero(3, 0)
    assert kernel_basis(z2) == []
    assert (z2 * Matrix.zero(0, 2)) == Matrix.zero(3, 2)

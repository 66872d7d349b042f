import pytest

from deloop_kit.algebra import (
    AlgebraError,
    Bimodule,
    FinDimAlgebra,
    block_dims,
    center_dim,
    dual_bimodule,
    ground_field,
    make_B,
    make_C,
    make_lambda,
    make_mq_bimodule,
    opposite,
    primitive_idempotents,
    radical,
    radical_power_dims,
    swap_iso,
    triangular_algebra,
    validate_algebra,
    verify_explicit_iso,
)
from deloop_kit.linalg import Matrix, QQ, span_basis

from oracles import lambda_table_by_rewriting, product_algebra


def unit_col(i, dim):
    return Matrix.column([1 if j == i else 0 for j in range(dim)])


class TestValidate:
    def test_lambda_valid(self, lam):
        assert validate_algebra(lam).ok

    def test_ground_field(self):
        assert validate_algebra(ground_field()).ok

    def test_detects_associativity_violation(self):
        # b1*b1 = b2 but b2 products chosen inconsistently.
        bad = FinDimAlgebra(
            "bad",
            ["1", "t", "u"],
            [1, 0, 0],
            [
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
                [[0, 0, 1], [1, 0, 0], [0, 0, 0]],
            ],
        )
        report = validate_algebra(bad)
        assert not report.ok
        assert report.assoc_failures
        i, j, k = report.assoc_failures[0]
        assert all(0 <= t < 3 for t in (i, j, k))


class TestLambda:
    def test_rejects_roots_of_unity(self):
        for q in (0, 1, -1):
            with pytest.raises(AlgebraError, match="infinite multiplicative order"):
                make_lambda(q)

    def test_basis(self, lam):
        assert lam.dim == 6
        assert lam.basis_labels == ("1", "x", "y", "z", "yx", "zx")

    def test_xy_is_minus_q_yx(self, lam):
        assert lam.table[1][2] == (0, 0, 0, 0, QQ(-2), 0)

    def test_x_kills_yx(self, lam):
        assert all(c == 0 for c in lam.table[1][4])

    def test_zy_is_zx(self, lam):
        assert lam.table[3][2] == (0, 0, 0, 0, 0, QQ(1))

    def test_table_matches_rewriting_oracle(self):
        for q in (2, 3):
            lam = make_lambda(q)
            oracle = lambda_table_by_rewriting(q)
            for i in range(6):
                for j in range(6):
                    assert lam.table[i][j] == oracle[i][j], (i, j)

    def test_left_annihilation_of_yx(self, lam):
        # x, y, z and the degree-two elements kill yx on the left.
        for i in (1, 2, 3, 4, 5):
            assert all(c == 0 for c in lam.table[i][4])

    def test_radical_span(self, lam):
        rad = radical(lam)
        expected = [unit_col(i, 6) for i in range(1, 6)]
        assert span_basis(rad, 6) == span_basis(expected, 6)

    def test_radical_powers(self, lam):
        assert radical_power_dims(lam) == [5, 2]

    def test_local(self, lam):
        frame = primitive_idempotents(lam)
        assert len(frame) == 1
        assert frame.idempotents[0] == lam.unit_vec()


class TestOpposite:
    def test_involution(self, lam):
        assert opposite(opposite(lam)) == lam

    def test_commutative_fixed(self):
        k = ground_field()
        assert opposite(k) == k

    def test_transposed_product(self, lam):
        op = opposite(lam)
        # In the opposite algebra, x *op y equals the original y*x = yx.
        assert op.table[1][2] == lam.table[2][1]
        assert validate_algebra(op).ok


class TestRadical:
    def test_semisimple(self):
        assert radical(ground_field()) == []
        assert radical(product_algebra(ground_field(), ground_field())) == []

    def test_radical_is_ideal_and_nilpotent(self, algebra_C):
        rad = radical(algebra_C)
        assert len(rad) == 8
        dims = radical_power_dims(algebra_C)
        assert dims[0] == 8 and len(dims) <= algebra_C.dim
        # Two-sided ideal: products of radical elements with basis stay inside.
        rad_span = span_basis(rad, algebra_C.dim)
        for v in rad:
            vt = tuple(v[i, 0] for i in range(algebra_C.dim))
            for i in range(algebra_C.dim):
                left = Matrix.column(algebra_C.mult(algebra_C.basis_elem(i), vt))
                right = Matrix.column(algebra_C.mult(vt, algebra_C.basis_elem(i)))
                assert span_basis(rad + [left], algebra_C.dim) == rad_span
                assert span_basis(rad + [right], algebra_C.dim) == rad_span

    def test_quotient_dimension_consistency(self, lam, algebra_B, algebra_C):
        for a in (lam, algebra_B, algebra_C):
            assert a.dim == len(radical(a)) + (a.dim - len(radical(a)))
            # A/J of these basic algebras is a product of copies of Q.
            assert a.dim - len(radical(a)) == len(primitive_idempotents(a))


class TestPrimitiveIdempotents:
    def test_C_frame(self, algebra_C, frame_C):
        assert len(frame_C) == 2
        frame_C.validate()

    def test_lambda_frame_is_unit(self, lam):
        frame = primitive_idempotents(lam)
        assert frame.idempotents[0] == lam.unit_vec()

    def test_product_of_fields(self):
        a = product_algebra(ground_field(), ground_field())
        frame = primitive_idempotents(a)
        assert len(frame) == 2
        frame.validate()
        assert sorted(tuple(e[i, 0] for i in range(2)) for e in frame.idempotents) == [
            (QQ(0), QQ(1)),
            (QQ(1), QQ(0)),
        ]

    def test_matrix_block_split(self):
        # End-algebra shape: the 2x2 matrix algebra has a 2-element frame.
        m2 = FinDimAlgebra(
            "M2(Q)",
            ["e11", "e12", "e21", "e22"],
            [1, 0, 0, 1],
            [
                [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
                [[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]],
                [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
                [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            ],
        )
        assert validate_algebra(m2).ok
        frame = primitive_idempotents(m2)
        assert len(frame) == 2
        frame.validate()


class TestTriangular:
    def test_B_shape(self, algebra_B, frame_B):
        assert algebra_B.dim == 10
        assert validate_algebra(algebra_B).ok
        assert block_dims(algebra_B, frame_B) == [[1, 0], [3, 6]]

    def test_C_shape(self, algebra_C, frame_C):
        assert algebra_C.dim == 10
        assert validate_algebra(algebra_C).ok
        assert block_dims(algebra_C, frame_C) == [[6, 0], [3, 1]]

    def test_block_dims_ground_field(self):
        k = ground_field()
        frame = primitive_idempotents(k)
        assert block_dims(k, frame) == [[1]]

    def test_bimodule_mismatch_rejected(self, lam):
        k = ground_field()
        n = Bimodule(k, k, 1, [Matrix.identity(1)], [Matrix.identity(1)])
        with pytest.raises(AlgebraError, match="bimodule sides"):
            triangular_algebra(lam, k, n, "lower")


class TestBimodule:
    def test_mq_validates(self, lam):
        make_mq_bimodule(lam, 2).validate()

    def test_dual_validates(self, lam):
        dual_bimodule(make_mq_bimodule(lam, 2)).validate()

    def test_double_dual_on_the_nose(self, lam):
        n = make_mq_bimodule(lam, 2)
        dd = dual_bimodule(dual_bimodule(n))
        assert dd.left_action == n.left_action
        assert dd.right_action == n.right_action
        assert dd.left_algebra == n.left_algebra

    def test_dual_dimension(self, lam):
        assert dual_bimodule(make_mq_bimodule(lam, 2)).dim == 3

    def test_yx_right_annihilates_dual(self, lam):
        dm = dual_bimodule(make_mq_bimodule(lam, 2))
        assert dm.right_action[4].is_zero()


class TestSwapIso:
    def test_t1_is_C(self, lam, algebra_C):
        dm = dual_bimodule(make_mq_bimodule(lam, 2))
        iso = swap_iso(lam, dm.left_algebra, dm)
        assert iso.target == algebra_C
        iso.verify()

    def test_t2_is_B(self, lam, algebra_B):
        mq = make_mq_bimodule(lam, 2)
        iso = swap_iso(mq.right_algebra, lam, mq)
        assert iso.target == algebra_B
        iso.verify()

    def test_zero_bimodule_swaps_product_coordinates(self):
        k1, k2 = ground_field("k1"), ground_field("k2")
        n = Bimodule(k2, k1, 0, [Matrix.zero(0, 0)], [Matrix.zero(0, 0)])
        iso = swap_iso(k1, k2, n)
        iso.verify()
        assert iso.source.dim == 2

    def test_verify_rejects_non_multiplicative(self, lam):
        bad = Matrix.identity(6).scale(1)
        # Swapping two radical basis vectors is unital and bijective but
        # breaks multiplicativity (x*y lands on the wrong element).
        rows = [list(r) for r in bad.data]
        rows[4], rows[5] = rows[5], rows[4]
        bad = Matrix.from_rows(rows)
        with pytest.raises(AlgebraError, match="multiplicativity"):
            verify_explicit_iso(lam, lam, bad)


class TestInvariants:
    def test_center_dims(self, algebra_B, algebra_C):
        assert center_dim(algebra_B) == center_dim(algebra_C) == 3

    def test_radical_powers_B_C(self, algebra_B, algebra_C):
        assert radical_power_dims(algebra_B) == [8, 4]
        assert radical_power_dims(algebra_C) == [8, 3]

    def test_q3_same_golden_shape(self):
        b3, c3 = make_B(3), make_C(3)
        assert validate_algebra(b3).ok and validate_algebra(c3).ok
        fb, fc = primitive_idempotents(b3), primitive_idempotents(c3)
        assert block_dims(b3, fb) == [[1, 0], [3, 6]]
        assert block_dims(c3, fc) == [[6, 0], [3, 1]]
        assert radical_power_dims(b3) == [8, 4]
        assert radical_power_dims(c3) == [8, 3]

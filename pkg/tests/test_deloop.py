import pytest

from deloop_kit.algebra import AlgebraError, ground_field, primitive_idempotents
from deloop_kit.deloop import (
    CERTIFIED_NO,
    CERTIFIED_YES,
    INCONCLUSIVE,
    build_default_pool,
    build_overmodule_pool,
    del_algebra,
    del_bounded,
    find_embedding,
    sddel_bounded,
    syzygy_certificate,
)
from deloop_kit.linalg import Matrix, solve_linear
from deloop_kit.modules import (
    _projective_data,
    direct_sum,
    regular_representation,
    simples,
    stable_summand,
    submodule_and_quotient,
    syzygy,
    torsionless,
)


def unit_col(i, dim):
    return Matrix.column([1 if j == i else 0 for j in range(dim)])


class TestDelC:
    def test_S1_level_zero(self, algebra_C, simples_C):
        report = del_bounded(algebra_C, simples_C[0], 0)
        assert report.levels[0].status == CERTIFIED_YES
        assert report.lower_bound == 0 and report.upper_bound == 0

    def test_S2_projective(self, algebra_C, simples_C):
        report = del_bounded(algebra_C, simples_C[1], 0)
        assert report.upper_bound == 0
        assert "projective" in report.levels[0].reason

    def test_algebra_level(self, algebra_C):
        report = del_algebra(algebra_C, 0)
        assert report.lower_bound == 0 and report.upper_bound == 0
        assert report.bracket() == "0"

    def test_ground_field(self):
        k = ground_field()
        report = del_algebra(k, 0)
        assert report.upper_bound == 0

    def test_witnesses_reverify(self, algebra_C, simples_C):
        # Every certified-yes level carries a witness N with
        # Omega^n(m) a stable summand of Omega^{n+1}(N), recomputable.
        report = del_bounded(algebra_C, simples_C[0], 2)
        for st in report.levels:
            assert st.status == CERTIFIED_YES
            om_n = syzygy(simples_C[0], st.level)
            ok, _ = stable_summand(om_n, syzygy(st.witness, st.level + 1))
            assert ok, f"witness at level {st.level} failed to re-verify"

    def test_monotonicity_of_golden_certificate(self, algebra_C, simples_C):
        report = del_bounded(algebra_C, simples_C[0], 0)
        wit = report.levels[0].witness
        # Shifting the witness by one more syzygy keeps it valid.
        ok, _ = stable_summand(syzygy(simples_C[0], 1), syzygy(wit, 2))
        assert ok


class TestDelB:
    def test_corner_simple_probe(self, algebra_B, simples_B):
        report = del_bounded(algebra_B, simples_B[0], 2)
        assert report.levels[0].status == CERTIFIED_NO
        assert report.levels[1].status == INCONCLUSIVE
        assert report.levels[2].status == INCONCLUSIVE
        assert report.lower_bound == 1
        assert report.upper_bound is None

    def test_other_simple_is_fine(self, algebra_B, simples_B):
        report = del_bounded(algebra_B, simples_B[1], 1)
        assert report.upper_bound == 0

    def test_algebra_bracket_has_no_upper(self, algebra_B):
        report = del_algebra(algebra_B, 1)
        assert report.lower_bound >= 1
        assert report.upper_bound is None
        assert "no finite upper bound" in report.bracket()


class TestLevelZeroExactness:
    def test_cross_path_agreement_on_goldens(self, algebra_B, algebra_C, simples_B, simples_C, mq, lam):
        cases = [
            (algebra_C, simples_C[0]),
            (algebra_C, simples_C[1]),
            (algebra_B, simples_B[0]),
            (algebra_B, simples_B[1]),
            (lam, mq),
        ]
        for a, m in cases:
            tl, _ = torsionless(m)
            report = del_bounded(a, m, 0)
            assert (report.levels[0].status == CERTIFIED_YES) == tl


class TestSddel:
    def test_C_simples_zero(self, algebra_C, simples_C):
        for s in simples_C:
            report = sddel_bounded(algebra_C, s, 0)
            assert report.upper_bound == 0

    def test_sddel_at_most_del(self, algebra_C, simples_C):
        for s in simples_C:
            del_rep = del_bounded(algebra_C, s, 0)
            sd_rep = sddel_bounded(algebra_C, s, 0)
            assert sd_rep.upper_bound is not None
            assert del_rep.upper_bound is not None
            assert sd_rep.upper_bound <= del_rep.upper_bound

    def test_B_corner_no_upper_bound(self, algebra_B, simples_B):
        report = sddel_bounded(algebra_B, simples_B[0], 1)
        assert report.upper_bound is None
        assert len(report.entries) <= 6
        assert "no finite upper bound" in report.bracket()

    def test_embedding_found_for_identity(self, algebra_C, simples_C):
        emb, note = find_embedding(simples_C[0], simples_C[0])
        assert emb is not None and emb.is_injective()

    def test_embedding_dimension_obstruction(self, algebra_C, simples_C, projectives_C):
        emb, note = find_embedding(projectives_C[0], simples_C[0])
        assert emb is None and note == "dimension obstruction"

    def test_pool_shape(self, algebra_C, simples_C):
        pool = build_overmodule_pool(algebra_C, simples_C[0])
        names = [n for n, _ in pool]
        assert names[0] == "itself" and "injective envelope" in names


class TestSyzygyCertificate:
    def test_P1_with_yx(self, algebra_C, projectives_C):
        pd = _projective_data(algebra_C)
        u_gen = solve_linear(pd.inclusions[0].matrix, unit_col(4, 10))
        cert = syzygy_certificate(projectives_C[0], [u_gen])
        assert cert.u_dim == 1 and cert.quotient_dim == 8
        cert.verify()

    def test_zero_submodule_of_P2(self, algebra_C, projectives_C):
        cert = syzygy_certificate(projectives_C[1], [])
        assert cert.u_dim == 0
        cert.verify()

    def test_regular_lambda_socle_generator(self, lam):
        reg = regular_representation(lam)
        cert = syzygy_certificate(reg, [unit_col(4, 6)])
        assert cert.u_dim == 1 and cert.quotient_dim == 5
        cert.verify()

    def test_not_proper_rejected(self, algebra_C, projectives_C):
        p2 = projectives_C[1]
        with pytest.raises(AlgebraError, match="not proper"):
            syzygy_certificate(p2, [unit_col(0, 1)])

    def test_requires_projective(self, algebra_C, simples_C):
        with pytest.raises(AlgebraError, match="projective"):
            syzygy_certificate(simples_C[0], [])


class TestPoolDefaults:
    def test_pool_contents(self, algebra_C):
        pool = build_default_pool(algebra_C)
        names = [n for n, _ in pool]
        assert names == ["S1", "S2", "P1", "P2", "rad(P1)", "rad(P2)", "I(S1)", "I(S2)"]

    def test_user_pool_extension(self, algebra_C, simples_C, mq):
        extended = build_default_pool(algebra_C) + [("user", direct_sum([simples_C[0], simples_C[0]]))]
        report = del_bounded(algebra_C, simples_C[0], 0, pool=extended)
        assert report.upper_bound == 0

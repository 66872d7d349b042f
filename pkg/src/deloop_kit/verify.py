"""End-to-end verification pipeline.

Runs the whole battery of concrete checks on the algebras built from the
configured parameter q: the local algebra's structure, the annihilation
identities, the triangular constructions and swap isomorphisms, the
double dual, the simple-submodule syzygy certificate, exact delooping
levels on the coextension side, bounded soundness probes on the
extension side, and the two-term tilting evidence.  The report is a
deterministic JSON document; every pass carries a replayable witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import io as kio
from .algebra import (
    AlgebraError,
    block_dims,
    dual_bimodule,
    make_B,
    make_C,
    make_lambda,
    make_mq_bimodule,
    primitive_idempotents,
    radical,
    radical_power_dims,
    swap_iso,
    validate_algebra,
)
from .deloop import build_default_pool, del_algebra, del_bounded, sddel_bounded, syzygy_certificate
from .linalg import Matrix, QQ, scalar_to_str, solve_linear, span_basis
from .modules import (
    _projective_data,
    dual_module,
    hom_basis,
    is_isomorphic,
    make_M_alpha,
    radical_of_module,
    regular_representation,
    simples,
    submodule_and_quotient,
    torsionless,
)
from .tilting import compare_invariants, endo_algebra, is_tilting_two_term, ladkani_flip

VERSION = "0.1.0"


@dataclass
class VerifyConfig:
    q: object = 2
    n_max: int = 2
    seed: int = 0

    def normalized(self) -> "VerifyConfig":
        q = QQ(self.q)
        if q in (QQ(0), QQ(1), QQ(-1)):
            raise AlgebraError("q must have infinite multiplicative order (q not in {0, 1, -1})")
        if self.n_max < 2:
            raise AlgebraError("n_max must be at least 2")
        return VerifyConfig(q, int(self.n_max), int(self.seed))


class VerificationReport:
    def __init__(self, config: VerifyConfig):
        self.config = config
        self.checks: list[dict] = []
        self.aborted: str | None = None

    def add(self, check_id: str, anchor: str, status: str, detail: dict) -> None:
        self.checks.append(
            {"id": check_id, "paper_anchor": anchor, "status": status, "detail": detail}
        )

    @property
    def all_pass(self) -> bool:
        return self.aborted is None and all(c["status"] == "pass" for c in self.checks)

    @property
    def has_extra_inconclusive(self) -> bool:
        """Inconclusive probe levels beyond the default depth of 2."""
        for c in self.checks:
            if c["id"] != "deloop-B-probes":
                continue
            for entry in c["detail"].get("per_simple", []):
                for lvl in entry.get("del_report", {}).get("levels", []):
                    if lvl["status"] == "inconclusive" and lvl["level"] > 2:
                        return True
        return False

    def exit_code(self) -> int:
        if not self.all_pass:
            return 1
        if self.has_extra_inconclusive:
            return 3
        return 0

    def to_dict(self) -> dict:
        return {
            "version": VERSION,
            "config": {
                "q": scalar_to_str(self.config.q),
                "n_max": self.config.n_max,
                "seed": self.config.seed,
            },
            "aborted": self.aborted,
            "checks": self.checks,
        }

    def to_json(self) -> str:
        return kio.dumps_canonical(self.to_dict())


def _span_equals(vectors_a, vectors_b, dim: int) -> bool:
    return span_basis(vectors_a, dim) == span_basis(vectors_b, dim)


def _unit_col(i: int, dim: int) -> Matrix:
    return Matrix.column([1 if j == i else 0 for j in range(dim)])


def run_paper_verification(config: VerifyConfig) -> VerificationReport:
    config = config.normalized()
    report = VerificationReport(config)
    q = config.q
    try:
        _run_stages(report, q, config)
    except AlgebraError as exc:
        report.aborted = str(exc)
    return report


def _run_stages(report: VerificationReport, q, config: VerifyConfig) -> None:
    # Stage 1: the local algebra.
    lam = make_lambda(q)
    val = validate_algebra(lam)
    rad = radical(lam)
    expected_rad = [_unit_col(i, 6) for i in range(1, 6)]
    rad_ok = _span_equals(rad, expected_rad, 6)
    powers = radical_power_dims(lam)
    j2_expected = [_unit_col(4, 6), _unit_col(5, 6)]
    stage1_ok = (
        val.ok
        and lam.dim == 6
        and rad_ok
        and powers == [5, 2]
    )
    report.add(
        "lambda-structure",
        "1, x, y, z, yx, zx form a basis of the 6-dimensional local algebra; the radical is spanned by x, y, z, yx, zx and cubes to zero",
        "pass" if stage1_ok else "fail",
        {
            "dim": lam.dim,
            "basis": list(lam.basis_labels),
            "validation": val.summary(),
            "radical_dim": len(rad),
            "radical_equals_expected_span": rad_ok,
            "radical_power_dims": powers,
        },
    )
    if not stage1_ok:
        raise AlgebraError("stage lambda-structure failed")

    # Stage 2: the left ideal generated by yx is one-dimensional.
    reg_lam = regular_representation(lam)
    u_sub, _, _, _ = submodule_and_quotient(reg_lam, [_unit_col(4, 6)], name="Lambda(yx)")
    left_ann = all(
        all(x == 0 for x in lam.mult(lam.basis_elem(i), lam.basis_elem(4)))
        for i in (1, 2, 3, 4, 5)
    )
    stage2_ok = u_sub.dim == 1 and left_ann
    report.add(
        "yx-left-ideal",
        "the left ideal generated by yx is one-dimensional: x, y, z and the radical square annihilate yx on the left",
        "pass" if stage2_ok else "fail",
        {"ideal_dim": u_sub.dim, "left_annihilation": left_ann},
    )
    if not stage2_ok:
        raise AlgebraError("stage yx-left-ideal failed")

    # Stage 3: yx annihilates M(q) and, on the right, its dual.
    mq = make_M_alpha(lam, q)
    mq_bimod = make_mq_bimodule(lam, q)
    dm = dual_bimodule(mq_bimod)
    act_zero = mq.action[4].is_zero()
    right_zero = dm.right_action[4].is_zero()
    stage3_ok = act_zero and right_zero
    report.add(
        "yx-annihilation",
        "yx acts by zero on M(q), hence annihilates the dual of M(q) from the right",
        "pass" if stage3_ok else "fail",
        {"action_of_yx_on_Mq_zero": act_zero, "right_action_of_yx_on_dual_zero": right_zero},
    )
    if not stage3_ok:
        raise AlgebraError("stage yx-annihilation failed")

    # Stage 4: the triangular algebras.
    b_alg = make_B(q)
    c_alg = make_C(q)
    val_b = validate_algebra(b_alg)
    val_c = validate_algebra(c_alg)
    frame_b = primitive_idempotents(b_alg)
    frame_c = primitive_idempotents(c_alg)
    blocks_b = block_dims(b_alg, frame_b)
    blocks_c = block_dims(c_alg, frame_c)
    projs_b = [p.dim for p in _projective_data(b_alg, frame_b).projectives]
    projs_c = [p.dim for p in _projective_data(c_alg, frame_c).projectives]
    stage4_ok = (
        val_b.ok
        and val_c.ok
        and b_alg.dim == 10
        and c_alg.dim == 10
        and blocks_b == [[1, 0], [3, 6]]
        and blocks_c == [[6, 0], [3, 1]]
        and projs_b == [4, 6]
        and projs_c == [9, 1]
    )
    report.add(
        "construct-B-C",
        "B = [[k, 0], [M(q), Lambda]] and C = [[Lambda, 0], [D(M(q)), k]] are valid 10-dimensional algebras with the expected block structure",
        "pass" if stage4_ok else "fail",
        {
            "B": {"dim": b_alg.dim, "valid": val_b.ok, "block_dims": blocks_b, "projective_dims": projs_b},
            "C": {"dim": c_alg.dim, "valid": val_c.ok, "block_dims": blocks_c, "projective_dims": projs_c},
        },
    )
    if not stage4_ok:
        raise AlgebraError("stage construct-B-C failed")

    # Stage 5: the swap isomorphisms T1 = C and T2 = B.
    iso1 = swap_iso(lam, dm.left_algebra, dm)
    iso2 = swap_iso(mq_bimod.right_algebra, lam, mq_bimod)
    t1_matches = iso1.target == c_alg
    t2_matches = iso2.target == b_alg
    stage5_ok = t1_matches and t2_matches
    report.add(
        "swap-isomorphisms",
        "the block-swap gives explicit algebra isomorphisms [[k, D(M(q))], [0, Lambda]] = C and [[Lambda, M(q)], [0, k]] = B, multiplicative on all basis pairs",
        "pass" if stage5_ok else "fail",
        {
            "T1_pairs_verified": iso1.source.dim ** 2,
            "T1_target_equals_C": t1_matches,
            "T1_matrix": kio.matrix_to_lists(iso1.matrix),
            "T2_pairs_verified": iso2.source.dim ** 2,
            "T2_target_equals_B": t2_matches,
            "T2_matrix": kio.matrix_to_lists(iso2.matrix),
        },
    )
    if not stage5_ok:
        raise AlgebraError("stage swap-isomorphisms failed")

    # Stage 6: double dual and hom-dimension symmetry under duality.
    ddm = dual_module(dual_module(mq))
    on_the_nose = ddm.algebra is lam and all(
        ddm.action[i] == mq.action[i] for i in range(lam.dim)
    )
    sc = simples(c_alg, frame_c)
    pc = _projective_data(c_alg, frame_c).projectives
    golden_pairs = [
        ("S1,S1", sc[0], sc[0]),
        ("S1,S2", sc[0], sc[1]),
        ("S2,P1", sc[1], pc[0]),
        ("P2,P1", pc[1], pc[0]),
        ("P1,P1", pc[0], pc[0]),
    ]
    sym = []
    sym_ok = True
    for label, x, y in golden_pairs:
        d1 = len(hom_basis(x, y))
        d2 = len(hom_basis(dual_module(y), dual_module(x)))
        sym.append({"pair": label, "dim_hom": d1, "dim_hom_dual": d2})
        sym_ok = sym_ok and d1 == d2
    stage6_ok = on_the_nose and sym_ok
    report.add(
        "double-dual",
        "the double dual of M(q) is canonically isomorphic to M(q), and hom dimensions are symmetric under duality",
        "pass" if stage6_ok else "fail",
        {"double_dual_equals_Mq": on_the_nose, "hom_dim_symmetry": sym},
    )
    if not stage6_ok:
        raise AlgebraError("stage double-dual failed")

    # Stage 7: the simple submodule U of P1 and its syzygy certificate.
    p1 = pc[0]
    pd_c = _projective_data(c_alg, frame_c)
    yx_in_c = _unit_col(4, 10)
    u_gen = solve_linear(pd_c.inclusions[0].matrix, yx_in_c)
    if u_gen is None:
        raise AlgebraError("stage simple-submodule-syzygy: yx does not lie in P1")
    u_sub, u_incl, quot, _ = submodule_and_quotient(p1, [u_gen], name="U")
    ok_iso, witness = is_isomorphic(u_sub, sc[0])
    e2_kills = p1.act(frame_c.idempotents[1]) * u_incl.matrix
    rad_p1, rad_incl = radical_of_module(p1)
    in_rad = solve_linear(rad_incl.matrix, u_incl.matrix) is not None
    cert = syzygy_certificate(p1, [u_gen], frame_c)
    stage7_ok = (
        u_sub.dim == 1
        and ok_iso
        and e2_kills.is_zero()
        and in_rad
        and rad_p1.dim == 8
        and quot.dim == 8
    )
    report.add(
        "simple-submodule-syzygy",
        "U = Lambda(yx) x 0 is a simple C-submodule of P1 isomorphic to S1, contained in rad P1, and the syzygy of P1/U is isomorphic to U",
        "pass" if stage7_ok else "fail",
        {
            "U_dim": u_sub.dim,
            "U_iso_S1": ok_iso,
            "iso_witness": kio.matrix_to_lists(witness.matrix) if witness else None,
            "e2_kills_U": e2_kills.is_zero(),
            "U_inside_rad_P1": in_rad,
            "rad_P1_dim": rad_p1.dim,
            "quotient_dim": quot.dim,
            "certificate_iso": kio.matrix_to_lists(cert.iso.matrix),
        },
    )
    if not stage7_ok:
        raise AlgebraError("stage simple-submodule-syzygy failed")

    # Stage 8: delooping levels of C are exactly zero.
    pool_c = build_default_pool(c_alg, frame_c)
    del_c = del_algebra(c_alg, config.n_max, frame_c, pool_c)
    sddel_s1 = sddel_bounded(c_alg, sc[0], config.n_max, frame_c, seed=config.seed)
    sddel_s2 = sddel_bounded(c_alg, sc[1], config.n_max, frame_c, seed=config.seed)
    stage8_ok = (
        del_c.lower_bound == 0
        and del_c.upper_bound == 0
        and sddel_s1.upper_bound == 0
        and sddel_s2.upper_bound == 0
    )
    report.add(
        "deloop-C",
        "del(C) = 0 exactly: both simples are syzygies (level-0 certificates), and sddel(C) = 0 via the identity embedding",
        "pass" if stage8_ok else "fail",
        {
            "del": kio.algebra_del_report_to_dict(del_c),
            "sddel_S1": kio.sddel_report_to_dict(sddel_s1),
            "sddel_S2": kio.sddel_report_to_dict(sddel_s2),
        },
    )
    if not stage8_ok:
        raise AlgebraError("stage deloop-C failed")

    # Stage 9: bounded probes on the B side; a finite upper bound for a
    # simple failing level 0 would be a contradiction, hence a failure.
    sb = simples(b_alg, frame_b)
    pool_b = build_default_pool(b_alg, frame_b)
    per_simple = []
    probes_ok = True
    k_vertex_not_torsionless = False
    for idx, s in enumerate(sb):
        tl, _ = torsionless(s)
        rep = del_bounded(b_alg, s, config.n_max, frame_b, pool_b)
        entry = {
            "simple": f"S{idx + 1}",
            "torsionless": tl,
            "del_report": kio.del_report_to_dict(rep),
        }
        per_simple.append(entry)
        if not tl:
            if idx == 0:
                k_vertex_not_torsionless = True
            if rep.upper_bound is not None:
                probes_ok = False
    stage9_ok = probes_ok and k_vertex_not_torsionless
    report.add(
        "deloop-B-probes",
        "the simple at the one-dimensional corner of B is not torsionless, and bounded probes produce no finite upper bound for it",
        "pass" if stage9_ok else "fail",
        {"per_simple": per_simple, "no_finite_upper_bound_for_failing_simples": probes_ok},
    )
    if not stage9_ok:
        raise AlgebraError("stage deloop-B-probes failed")

    # Stage 10: the flip tilting complex and its endomorphism algebra.
    flip = ladkani_flip(c_alg, frame_c)
    tilt = is_tilting_two_term(flip, frame_c)
    endo, endo_frame = endo_algebra(flip)
    endo_blocks = block_dims(endo, endo_frame)
    inv = compare_invariants(endo, b_alg)
    stage10_ok = tilt.ok and endo.dim == 10 and inv.all_match
    report.add(
        "tilting-flip",
        "a two-term tilting complex over C with two summand classes whose opposite endomorphism algebra matches B on every computed invariant; by Rickard's Morita theory for derived categories the algebras are derived equivalent",
        "pass" if stage10_ok else "fail",
        {
            "complex": kio.complex_to_dict(flip),
            "tilting": {
                "self_orthogonal": tilt.self_orthogonal,
                "hom_plus_one": tilt.hom_plus_one,
                "hom_minus_one": tilt.hom_minus_one,
                "summand_classes": [c.label() for c in tilt.classes],
                "simple_count": tilt.simple_count,
                "summary": tilt.summary(),
            },
            "endo_dim": endo.dim,
            "endo_block_dims": endo_blocks,
            "B_block_dims": block_dims(b_alg, frame_b),
            "invariants": [
                {
                    "name": it.name,
                    "endo_value": _jsonable(it.value1),
                    "B_value": _jsonable(it.value2),
                    "match": it.match,
                    "note": it.note,
                }
                for it in inv.items
            ],
        },
    )
    if not stage10_ok:
        raise AlgebraError("stage tilting-flip failed")


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v

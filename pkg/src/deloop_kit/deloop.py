"""Bounded computation of delooping levels with explicit certificates.

Level 0 is decided exactly: a module is a stable summand of a first
syzygy iff it embeds into a projective (torsionless), with the witness
overmodule produced by Schanuel's argument.  Higher levels are bracketed:
certified-yes needs a replayable witness from a finite pool, certified-no
needs failure of a necessary condition, and everything else stays
inconclusive.  No finite search can certify an infinite delooping level,
so the report vocabulary deliberately has no such state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraError, FinDimAlgebra, IdempotentFrame, primitive_idempotents
from .linalg import Matrix, QQ, solve_linear
from .modules import (
    ModuleMap,
    Representation,
    cosyzygy,
    decompose,
    direct_sum,
    hom_basis,
    injective_envelope,
    is_isomorphic,
    is_projective_rep,
    kernel_submodule,
    projective_cover,
    quotient_representation,
    radical_of_module,
    regular_and_projectives,
    simples,
    stable_summand,
    submodule_and_quotient,
    syzygy,
    torsionless,
    zero_rep,
)

CERTIFIED_YES = "certified-yes"
CERTIFIED_NO = "certified-no"
INCONCLUSIVE = "inconclusive"


@dataclass
class LevelStatus:
    level: int
    status: str
    reason: str
    witness_name: str | None = None
    witness: Representation | None = None


@dataclass
class DelReport:
    algebra_name: str
    module_name: str
    n_max: int
    levels: list[LevelStatus]
    lower_bound: int
    upper_bound: int | None

    def bracket(self) -> str:
        if self.upper_bound is not None and self.upper_bound == self.lower_bound:
            return str(self.upper_bound)
        hi = str(self.upper_bound) if self.upper_bound is not None else "no finite upper bound found"
        return f"[{self.lower_bound}, {hi}]"

    def status_at(self, n: int) -> str:
        return self.levels[n].status


@dataclass
class AlgebraDelReport:
    algebra_name: str
    per_simple: list[DelReport]
    lower_bound: int
    upper_bound: int | None

    def bracket(self) -> str:
        if self.upper_bound is not None and self.upper_bound == self.lower_bound:
            return str(self.upper_bound)
        hi = str(self.upper_bound) if self.upper_bound is not None else "no finite upper bound found"
        return f"[{self.lower_bound}, {hi}]"


def build_default_pool(a: FinDimAlgebra, frame: IdempotentFrame | None = None):
    """Small documented pool: simples, projectives, their radicals,
    injective envelopes of simples.  Cached per algebra."""
    if "del_pool" in a._cache:
        return a._cache["del_pool"]
    pool = []
    for i, s in enumerate(simples(a, frame)):
        pool.append((f"S{i + 1}", s))
    for i, p in enumerate(regular_and_projectives(a, frame)):
        pool.append((f"P{i + 1}", p))
    for i, p in enumerate(regular_and_projectives(a, frame)):
        radp, _ = radical_of_module(p)
        pool.append((f"rad(P{i + 1})", radp))
    for i, s in enumerate(simples(a, frame)):
        pool.append((f"I(S{i + 1})", injective_envelope(s).target))
    a._cache["del_pool"] = pool
    return pool


def _schanuel_witness(m: Representation, embedding: ModuleMap) -> Representation:
    """Cokernel of an embedding into a projective; by Schanuel, m is a
    stable summand of its first syzygy."""
    cols = [Matrix.column(embedding.matrix.col(j)) for j in range(embedding.matrix.cols)]
    coker, _ = quotient_representation(embedding.target, cols, name=f"coker({m.name or 'M'})")
    return coker


def del_bounded(
    a: FinDimAlgebra,
    m: Representation,
    n_max: int,
    frame: IdempotentFrame | None = None,
    pool=None,
    pool_dim_cap: int = 60,
) -> DelReport:
    """Bracket the delooping level of m by certificates up to level n_max.

    Pool candidates above pool_dim_cap are skipped (documented default 60,
    the scale the concrete instances live at); skipping candidates can
    only lose completeness, never soundness, and the level then stays
    inconclusive rather than certified.
    """
    if n_max < 0:
        raise AlgebraError("n_max must be nonnegative")
    if frame is None:
        frame = primitive_idempotents(a)
    if pool is None:
        pool = build_default_pool(a, frame)
    levels: list[LevelStatus] = []
    yes_witness: tuple[str, Representation] | None = None

    omega = m
    for n in range(n_max + 1):
        if n > 0:
            omega = syzygy(omega, 1, frame)
        if yes_witness is not None:
            # Applying the syzygy functor to the level-(n-1) decomposition
            # carries the witness up; re-verification happens in the test
            # suite, not on every run.
            name, wit = yes_witness
            levels.append(
                LevelStatus(
                    n,
                    CERTIFIED_YES,
                    f"witness {name} carries: syzygies of stable summands are stable summands of syzygies",
                    name,
                    wit,
                )
            )
            continue
        # A module is stably zero iff it is projective iff its cover kernel
        # vanishes; the cover is cached and reused by the next level anyway.
        stably_zero = syzygy(omega, 1, frame).dim == 0
        if stably_zero:
            # A projective (or stably zero) module is a summand of
            # Omega(N) + projectives for every N; the zero witness replays.
            witness = zero_rep(a)
            yes_witness = ("0 (module is stably projective)", witness)
            levels.append(
                LevelStatus(
                    n,
                    CERTIFIED_YES,
                    "every indecomposable summand is projective, so the module is stably zero",
                    yes_witness[0],
                    witness,
                )
            )
            continue
        tl, embedding = torsionless(omega)
        if n == 0:
            if tl:
                witness = _schanuel_witness(omega, embedding)
                ok, _ = stable_summand(omega, syzygy(witness, 1, frame), frame)
                if not ok:
                    raise AlgebraError("internal: Schanuel witness failed to verify")
                yes_witness = ("coker(embedding into projectives)", witness)
                levels.append(
                    LevelStatus(
                        n,
                        CERTIFIED_YES,
                        "module is torsionless; Schanuel cokernel realizes it as a stable summand of a first syzygy",
                        yes_witness[0],
                        witness,
                    )
                )
            else:
                levels.append(
                    LevelStatus(
                        n,
                        CERTIFIED_NO,
                        "module does not embed into any projective (not torsionless)",
                    )
                )
            continue
        if not tl:
            levels.append(
                LevelStatus(
                    n,
                    CERTIFIED_NO,
                    "syzygy is not torsionless, so it cannot be a stable summand of a deeper syzygy",
                )
            )
            continue
        found = None
        candidates = list(pool)
        sig = omega
        for j in range(1, n + 2):
            sig = cosyzygy(sig)
            candidates.append((f"cosyz^{j}(Omega^{n} m)", sig))
        tried = skipped = 0
        for name, cand in candidates:
            if cand.dim > pool_dim_cap:
                skipped += 1
                continue
            tried += 1
            ok, _ = stable_summand(omega, syzygy(cand, n + 1, frame), frame)
            if ok:
                found = (name, cand)
                break
        if found is not None:
            yes_witness = found
            levels.append(
                LevelStatus(n, CERTIFIED_YES, f"pool witness {found[0]} verified", found[0], found[1])
            )
        else:
            note = f"; {skipped} candidates above the dimension cap {pool_dim_cap} skipped" if skipped else ""
            levels.append(
                LevelStatus(
                    n,
                    INCONCLUSIVE,
                    "no witness among " + str(tried) + " pool candidates; the quantifier over all modules is out of reach" + note,
                )
            )

    lower = 0
    for st in levels:
        if st.status == CERTIFIED_NO:
            lower += 1
        else:
            break
    upper = None
    for st in levels:
        if st.status == CERTIFIED_YES:
            upper = st.level
            break
    return DelReport(a.name, m.name or "M", n_max, levels, lower, upper)


def del_algebra(
    a: FinDimAlgebra,
    n_max: int,
    frame: IdempotentFrame | None = None,
    pool=None,
) -> AlgebraDelReport:
    """del(A) bracket: componentwise sup of the per-simple brackets."""
    if frame is None:
        frame = primitive_idempotents(a)
    reports = [del_bounded(a, s, n_max, frame, pool) for s in simples(a, frame)]
    lower = max((r.lower_bound for r in reports), default=0)
    uppers = [r.upper_bound for r in reports]
    upper = max(uppers) if all(u is not None for u in uppers) and uppers else None
    return AlgebraDelReport(a.name, reports, lower, upper)


# -- sddel ----------------------------------------------------------------

_GRID_COEFFS = (0, 1, -1, 2, -2)


def find_embedding(m: Representation, n: Representation, seed: int = 0):
    """Search for an injective module map m -> n.

    Injective homs form a Zariski-open subset of the hom space when one
    exists, so a small deterministic grid over the hom basis is tried
    first and a seeded random sample afterwards.  A miss is reported as
    "not found", never as a proof that no embedding exists.
    Returns (ModuleMap or None, description of the search).
    """
    if m.dim == 0:
        return ModuleMap(m, n, Matrix.zero(n.dim, 0)), "zero module"
    if m.dim > n.dim:
        return None, "dimension obstruction"
    homs = hom_basis(m, n)
    if not homs:
        return None, "hom space is zero"
    t = len(homs)
    import itertools
    import random

    if len(_GRID_COEFFS) ** t <= 4000:
        combos = itertools.product(_GRID_COEFFS, repeat=t)
        kind = "deterministic grid 0,±1,±2"
    else:
        head = min(t, 5)
        combos = (
            tuple(c) + (0,) * (t - head) for c in itertools.product(_GRID_COEFFS, repeat=head)
        )
        kind = f"deterministic grid on the first {head} basis maps"
    for coeffs in combos:
        f = Matrix.zero(n.dim, m.dim)
        for c, h in zip(coeffs, homs):
            if c != 0:
                f = f + h.matrix.scale(QQ(c))
        if f.rank() == m.dim:
            return ModuleMap(m, n, f), kind
    rng = random.Random(seed)
    for _ in range(200):
        coeffs = [rng.randint(-5, 5) for _ in range(t)]
        f = Matrix.zero(n.dim, m.dim)
        for c, h in zip(coeffs, homs):
            if c != 0:
                f = f + h.matrix.scale(QQ(c))
        if f.rank() == m.dim:
            return ModuleMap(m, n, f), f"seeded random sample (seed={seed})"
    return None, f"embedding not found (grid + 200 seeded samples, seed={seed})"


@dataclass
class SddelEntry:
    overmodule_name: str
    overmodule: Representation
    embedding_found: bool
    search_note: str
    del_report: DelReport | None


@dataclass
class SddelReport:
    algebra_name: str
    module_name: str
    n_max: int
    seed: int
    entries: list[SddelEntry]
    upper_bound: int | None
    note: str = (
        "upper bound only: the infimum quantifies over all overmodules, "
        "so lower bounds are not computed"
    )

    def bracket(self) -> str:
        if self.upper_bound is None:
            return "no finite upper bound found in pool"
        return f"<= {self.upper_bound}"


def build_overmodule_pool(a: FinDimAlgebra, m: Representation, frame: IdempotentFrame | None = None):
    """Default overmodule candidates: m itself, its injective envelope,
    and m + P_i for each indecomposable projective."""
    pool = [("itself", m), ("injective envelope", injective_envelope(m).target)]
    for i, p in enumerate(regular_and_projectives(a, frame)):
        pool.append((f"m+P{i + 1}", direct_sum([m, p])))
    return pool


def sddel_bounded(
    a: FinDimAlgebra,
    m: Representation,
    n_max: int,
    frame: IdempotentFrame | None = None,
    overmodule_pool=None,
    seed: int = 0,
    del_pool=None,
) -> SddelReport:
    """Upper-bound the sub-derived delooping level over a finite pool.

    Runs in two phases: a cheap level-0 sweep over every embeddable
    overmodule first, and the expensive level search up to n_max only
    when no overmodule certifies at level 0 (0 is the minimum possible
    value, so deeper probing cannot improve on it).
    """
    if frame is None:
        frame = primitive_idempotents(a)
    if overmodule_pool is None:
        overmodule_pool = build_overmodule_pool(a, m, frame)
    embedded = []
    entries = []
    for name, over in overmodule_pool:
        emb, note = find_embedding(m, over, seed)
        if emb is None:
            entries.append(SddelEntry(name, over, False, note, None))
        else:
            entries.append(SddelEntry(name, over, True, note, None))
            embedded.append((len(entries) - 1, name, over))
    upper = None
    for pos, name, over in embedded:
        rep = del_bounded(a, over, 0, frame, del_pool)
        entries[pos].del_report = rep
        if rep.upper_bound is not None and (upper is None or rep.upper_bound < upper):
            upper = rep.upper_bound
    if upper is None and n_max > 0:
        for pos, name, over in embedded:
            rep = del_bounded(a, over, n_max, frame, del_pool)
            entries[pos].del_report = rep
            if rep.upper_bound is not None and (upper is None or rep.upper_bound < upper):
                upper = rep.upper_bound
    return SddelReport(a.name, m.name or "M", n_max, seed, entries, upper)


# -- the syzygy certificate of the golden proposition ---------------------


@dataclass
class SyzygyCertificate:
    projective_name: str
    u_dim: int
    quotient_dim: int
    u_in_radical: bool
    iso: ModuleMap  # explicit isomorphism syzygy(p/U) -> U

    def verify(self) -> None:
        self.iso.validate()
        if not self.iso.is_isomorphism():
            raise AlgebraError("certificate isomorphism is singular")


def syzygy_certificate(
    p: Representation,
    u_generators,
    frame: IdempotentFrame | None = None,
) -> SyzygyCertificate:
    """Machine check that U is the syzygy of p/U for proper U inside a
    local projective: forms p/U, recomputes the syzygy of the quotient,
    and returns an explicit isomorphism onto U."""
    a = p.algebra
    if frame is None:
        frame = primitive_idempotents(a)
    if not is_projective_rep(p, frame):
        raise AlgebraError("certificate requires an indecomposable projective module")
    u_sub, u_incl, quot, _ = submodule_and_quotient(p, list(u_generators), name="U")
    if u_sub.dim == p.dim:
        raise AlgebraError("not proper")
    rad_sub, rad_incl = radical_of_module(p)
    # Membership of U in rad(p): solvable coordinates for every U vector.
    if u_sub.dim > 0:
        if solve_linear(rad_incl.matrix, u_incl.matrix) is None:
            raise AlgebraError("cover not minimal")
    cover = projective_cover(quot, frame)
    om, _ = kernel_submodule(cover)
    ok, witness = is_isomorphic(om, u_sub)
    if not ok:
        raise AlgebraError("syzygy of the quotient is not isomorphic to U")
    cert = SyzygyCertificate(p.name or "P", u_sub.dim, quot.dim, True, witness)
    cert.verify()
    return cert

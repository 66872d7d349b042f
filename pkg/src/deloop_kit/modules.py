"""Left modules as matrix representations.

A representation stores one action matrix per algebra basis element, so
validity is a purely linear condition.  Homs are computed from a
projective presentation (two projective covers), which keeps every
linear system small; the returned bases are canonicalized by RREF so
results do not depend on the computation path.
"""

from __future__ import annotations

from .algebra import (
    AlgebraError,
    FinDimAlgebra,
    IdempotentFrame,
    _as_tuple_vec,
    m_alpha_action_matrices,
    opposite,
    primitive_idempotents,
    radical,
)
from .linalg import (
    Matrix,
    ONE,
    QQ,
    ZERO,
    column_space_basis,
    coords_in_basis,
    direct_sum_matrices,
    hstack_all,
    kernel_basis,
    rref,
    scalar_to_str,
    solve_linear,
    span_basis,
    vstack_all,
)


class Representation:
    """A left module over a FinDimAlgebra, given by its action matrices."""

    def __init__(self, algebra: FinDimAlgebra, dim: int, action, name: str = ""):
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(action)
        self.name = name
        if len(self.action) != algebra.dim:
            raise AlgebraError("need one action matrix per algebra basis element")
        for m in self.action:
            if m.rows != dim or m.cols != dim:
                raise AlgebraError("action matrices must be dim x dim")
        self._cache: dict = {}

    def __repr__(self):
        label = self.name or "module"
        return f"Representation({label} over {self.algebra.name}, dim={self.dim})"

    def act(self, u) -> Matrix:
        """Action matrix of an arbitrary algebra element."""
        u = _as_tuple_vec(u, self.algebra.dim)
        acc = Matrix.zero(self.dim, self.dim)
        for c, m in zip(u, self.action):
            if c != 0:
                acc = acc + m.scale(c)
        return acc

    def validate(self) -> None:
        a = self.algebra
        if self.act(a.unit) != Matrix.identity(self.dim):
            raise AlgebraError("unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                if self.action[i] * self.action[j] != self.act(a.table[i][j]):
                    raise AlgebraError(f"action breaks structure constants at ({i},{j})")

    def same_algebra(self, other: "Representation") -> bool:
        return self.algebra is other.algebra or self.algebra == other.algebra


class ModuleMap:
    """A linear map between representations commuting with the actions."""

    def __init__(self, source: Representation, target: Representation, matrix: Matrix):
        self.source = source
        self.target = target
        self.matrix = matrix
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise AlgebraError("module map has wrong shape")

    def __repr__(self):
        return f"ModuleMap({self.source.dim} -> {self.target.dim} over {self.source.algebra.name})"

    def validate(self) -> None:
        if not self.source.same_algebra(self.target):
            raise AlgebraError("module map between different algebras")
        for i in range(self.source.algebra.dim):
            if self.matrix * self.source.action[i] != self.target.action[i] * self.matrix:
                raise AlgebraError(f"map does not commute with the action of basis element {i}")

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self after first."""
        return ModuleMap(first.source, self.target, self.matrix * first.matrix)

    def is_injective(self) -> bool:
        return not kernel_basis(self.matrix)

    def is_surjective(self) -> bool:
        return self.matrix.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.matrix.is_invertible()


# -- constructions --------------------------------------------------------


def zero_rep(a: FinDimAlgebra) -> Representation:
    return Representation(a, 0, [Matrix.zero(0, 0)] * a.dim, name="0")


def make_M_alpha(lam: FinDimAlgebra, alpha) -> Representation:
    """The three-dimensional module M(alpha) on basis (v, v', v'')."""
    mats = m_alpha_action_matrices(lam, alpha)
    return Representation(lam, 3, mats, name=f"M({scalar_to_str(QQ(alpha))})")


def regular_representation(a: FinDimAlgebra) -> Representation:
    if "regular_rep" not in a._cache:
        a._cache["regular_rep"] = Representation(
            a, a.dim, a.left_regular_matrices(), name=f"{a.name} (regular)"
        )
    return a._cache["regular_rep"]


def direct_sum(reps, name: str = "") -> Representation:
    """Block-diagonal direct sum; zero summands are legal."""
    reps = list(reps)
    if not reps:
        raise AlgebraError("direct_sum needs at least one summand (use zero_rep)")
    a = reps[0].algebra
    for r in reps:
        if not r.same_algebra(reps[0]):
            raise AlgebraError("direct sum of modules over different algebras")
    dim = sum(r.dim for r in reps)
    action = []
    for i in range(a.dim):
        action.append(direct_sum_matrices([r.action[i] for r in reps]))
    return Representation(a, dim, action, name=name or "+".join(r.name or "?" for r in reps))


def sub_representation(m: Representation, basis_columns, name: str = "", trusted: bool = False):
    """Subrepresentation on an invariant subspace; returns (sub, inclusion).

    When the basis has unit-pivot structure (every RREF-derived basis
    does), induced actions are read off the pivot rows directly; callers
    that construct mathematically invariant spans (kernels, images,
    radical spans, closures) pass trusted=True to skip re-verification,
    everything else is checked exactly.
    """
    basis = list(basis_columns)
    if not basis:
        sub = zero_rep(m.algebra)
        return sub, ModuleMap(sub, m, Matrix.zero(m.dim, 0))
    incl = hstack_all(basis)
    k = len(basis)
    # Detect unit-pivot rows: for column j a row r with incl[r] = e_j.
    pivot_rows = []
    for j in range(k):
        found = None
        for r in range(m.dim):
            row = incl.data[r]
            if row[j] == 1 and all(row[t] == 0 for t in range(k) if t != j):
                found = r
                break
        if found is None:
            break
        pivot_rows.append(found)
    action = []
    if len(pivot_rows) == k:
        for i in range(m.algebra.dim):
            img = m.action[i] * incl
            x = Matrix._raw(k, k, tuple(img.data[r] for r in pivot_rows))
            if not trusted and incl * x != img:
                raise AlgebraError("subspace is not invariant under the action")
            action.append(x)
    else:
        images = hstack_all([m.action[i] * incl for i in range(m.algebra.dim)])
        sol = solve_linear(incl, images)
        if sol is None:
            raise AlgebraError("subspace is not invariant under the action")
        for i in range(m.algebra.dim):
            action.append(sol.col_slice(i * k, (i + 1) * k))
    sub = Representation(m.algebra, k, action, name=name)
    return sub, ModuleMap(sub, m, incl)


def quotient_representation(m: Representation, span_columns, name: str = ""):
    """Quotient by an invariant subspace; returns (quot, projection)."""
    sub_basis = span_basis(span_columns, m.dim)
    if not sub_basis:
        quot = Representation(m.algebra, m.dim, m.action, name=name or m.name)
        return quot, ModuleMap(m, quot, Matrix.identity(m.dim))
    stacked = Matrix.from_rows([[v[i, 0] for i in range(m.dim)] for v in sub_basis])
    red, pivots = rref(stacked)
    red_rows = [red.row(i) for i in range(len(pivots))]
    pivot_set = set(pivots)
    free = [j for j in range(m.dim) if j not in pivot_set]
    proj_cols = []
    for idx in range(m.dim):
        vec = [ONE if j == idx else ZERO for j in range(m.dim)]
        for row, p in zip(red_rows, pivots):
            c = vec[p]
            if c != 0:
                vec = [x - c * y for x, y in zip(vec, row)]
        proj_cols.append([vec[f] for f in free])
    proj = Matrix(len(free), m.dim, [proj_cols[j][i] for i in range(len(free)) for j in range(m.dim)])
    sect = Matrix(m.dim, len(free), [ONE if free[j] == i else ZERO for i in range(m.dim) for j in range(len(free))])
    action = [proj * m.action[i] * sect for i in range(m.algebra.dim)]
    quot = Representation(m.algebra, len(free), action, name=name)
    return quot, ModuleMap(m, quot, proj)


def submodule_closure(m: Representation, generators):
    """Canonical basis of the smallest submodule containing the generators."""
    current = span_basis(list(generators), m.dim)
    while True:
        images = list(current)
        for v in current:
            for i in range(m.algebra.dim):
                images.append(m.action[i] * v)
        new = span_basis(images, m.dim)
        if len(new) == len(current):
            return new
        current = new


def submodule_and_quotient(m: Representation, generators, name: str = "U"):
    """Algebra-span of the generators plus the quotient by it.

    Returns (sub, inclusion, quot, projection).
    """
    for g in generators:
        if g.rows != m.dim or g.cols != 1:
            raise AlgebraError("generators must be column vectors inside the module")
    basis = submodule_closure(m, generators)
    sub, incl = sub_representation(m, basis, name=name, trusted=True)
    quot, proj = quotient_representation(m, basis, name=f"{m.name or 'M'}/{name}")
    return sub, incl, quot, proj


def radical_of_module(m: Representation):
    """J*M as a subrepresentation with its inclusion."""
    if "radical_sub" in m._cache:
        return m._cache["radical_sub"]
    j_basis = radical(m.algebra)
    vecs = []
    for j in j_basis:
        mat = m.act(j)
        for col in range(m.dim):
            vecs.append(Matrix.column(mat.col(col)))
    basis = span_basis(vecs, m.dim)
    result = sub_representation(m, basis, name=f"rad({m.name or 'M'})", trusted=True)
    m._cache["radical_sub"] = result
    return result


def top_of_module(m: Representation):
    """M / JM with its projection; the top is semisimple."""
    if "top" in m._cache:
        return m._cache["top"]
    j_basis = radical(m.algebra)
    vecs = []
    for j in j_basis:
        mat = m.act(j)
        for col in range(m.dim):
            vecs.append(Matrix.column(mat.col(col)))
    result = quotient_representation(m, vecs, name=f"top({m.name or 'M'})")
    m._cache["top"] = result
    return result


def regular_and_projectives(a: FinDimAlgebra, frame: IdempotentFrame | None = None):
    """The indecomposable projectives P_i = A e_i as representations."""
    return _projective_data(a, frame).projectives


class _ProjectiveData:
    def __init__(self, regular, projectives, inclusions, generators):
        self.regular = regular
        self.projectives = projectives
        self.inclusions = inclusions
        self.generators = generators


def _projective_data(a: FinDimAlgebra, frame: IdempotentFrame | None = None) -> _ProjectiveData:
    if "projdata" in a._cache:
        return a._cache["projdata"]
    if frame is None:
        frame = primitive_idempotents(a)
    reg = regular_representation(a)
    projectives = []
    inclusions = []
    generators = []
    for idx, e in enumerate(frame.idempotents):
        re_mat = a.right_mult_matrix(_as_tuple_vec(e, a.dim))
        basis = column_space_basis(re_mat)
        sub, incl = sub_representation(reg, basis, name=f"P{idx + 1}({a.name})", trusted=True)
        projectives.append(sub)
        inclusions.append(incl)
        generators.append(coords_in_basis(basis, e))
    data = _ProjectiveData(reg, projectives, inclusions, generators)
    a._cache["projdata"] = data
    return data


def simples(a: FinDimAlgebra, frame: IdempotentFrame | None = None):
    """Tops of the indecomposable projectives (split basic algebras)."""
    if "simples" in a._cache:
        return a._cache["simples"]
    data = _projective_data(a, frame)
    out = []
    for idx, p in enumerate(data.projectives):
        top, _ = top_of_module(p)
        top.name = f"S{idx + 1}({a.name})"
        out.append(top)
    a._cache["simples"] = out
    return out


def evaluation_matrix(y: Representation, w: Matrix) -> Matrix:
    """Matrix of a -> rho_y(a) w as a map from algebra coordinates into y."""
    return hstack_all([y.action[i] * w for i in range(y.algebra.dim)])


def projective_cover(m: Representation, frame: IdempotentFrame | None = None) -> ModuleMap:
    """Projective cover P woheadrightarrow M.

    P is the sum of P_i with the multiplicity of S_i in top(M); generators
    are mapped onto lifts of a basis of e_i * top(M), so the kernel lies
    inside rad P.  For the zero module this is the zero map from the zero
    module.
    """
    if "cover" in m._cache:
        return m._cache["cover"]
    a = m.algebra
    if frame is None:
        frame = primitive_idempotents(a)
    data = _projective_data(a, frame)
    if m.dim == 0:
        z = zero_rep(a)
        z._cache["profile"] = []
        cover = ModuleMap(z, m, Matrix.zero(0, 0))
        m._cache["cover"] = cover
        return cover
    top, proj_t = top_of_module(m)
    summands = []
    components = []
    profile = []
    for idx, e in enumerate(frame.idempotents):
        e_act = m.act(e)
        mat_t = proj_t.matrix * e_act
        image = column_space_basis(mat_t)
        for t in image:
            w = solve_linear(mat_t, t)
            if w is None:
                raise AlgebraError("internal: top image lift failed")
            u = e_act * w
            comp = evaluation_matrix(m, u) * data.inclusions[idx].matrix
            summands.append(data.projectives[idx])
            components.append(comp)
            profile.append(idx)
    if not summands:
        raise AlgebraError("nonzero module with zero top; radical not nilpotent?")
    p = direct_sum(summands, name=f"P({m.name or 'M'})")
    p._cache["profile"] = profile
    mat = hstack_all(components)
    cover = ModuleMap(p, m, mat)
    if not cover.is_surjective():
        raise AlgebraError("internal: projective cover is not surjective")
    m._cache["cover"] = cover
    return cover


def kernel_submodule(f: ModuleMap):
    """Kernel of a module map as a subrepresentation of the source."""
    basis = kernel_basis(f.matrix)
    return sub_representation(f.source, basis, name=f"ker({f.source.name or '?'})", trusted=True)


def syzygy(m: Representation, n: int, frame: IdempotentFrame | None = None) -> Representation:
    """The n-th syzygy: iterated kernels of projective covers.

    The chain m, Omega m, Omega^2 m, ... is cached on the module, which
    assumes one fixed frame per algebra (the canonical one).
    """
    if n < 0:
        raise AlgebraError("syzygy power must be nonnegative")
    chain = m._cache.setdefault("syzygy_chain", [m])
    while len(chain) <= n:
        cover = projective_cover(chain[-1], frame)
        nxt, _ = kernel_submodule(cover)
        chain.append(nxt)
    return chain[n]


def syzygy_with_inclusion(m: Representation, frame: IdempotentFrame | None = None):
    """First syzygy together with its inclusion into the cover."""
    cover = projective_cover(m, frame)
    sub, incl = kernel_submodule(cover)
    return sub, incl, cover


# -- hom spaces -----------------------------------------------------------


def hom_basis(x: Representation, y: Representation, frame: IdempotentFrame | None = None):
    """Canonical basis of Hom(x, y) as a list of ModuleMaps.

    Maps out of x correspond to maps out of its projective cover P0 that
    kill the cover kernel; Hom(P_i, Y) is just e_i Y, which keeps the
    linear algebra small.  The resulting basis is canonicalized by RREF
    on the flattened matrices, so it is independent of the presentation.
    """
    if not x.same_algebra(y):
        raise AlgebraError("hom between modules over different algebras")
    if x.dim == 0 or y.dim == 0:
        return []
    a = x.algebra
    if frame is None:
        frame = primitive_idempotents(a)
    data = _projective_data(a, frame)
    cover0 = projective_cover(x, frame)
    p0 = cover0.source
    kb = kernel_basis(cover0.matrix)
    d = hstack_all(kb) if kb else Matrix.zero(p0.dim, 0)
    profile = p0._cache["profile"]
    # Unknowns: for each copy P_i in P0, a vector in e_i * y.
    blocks = []  # (copy_offset, copy_dim, phi-basis list)
    off = 0
    e_img_cache = {}
    for idx in profile:
        if idx not in e_img_cache:
            e = frame.idempotents[idx]
            e_img = column_space_basis(y.act(e))
            e_img_cache[idx] = [
                evaluation_matrix(y, w) * data.inclusions[idx].matrix for w in e_img
            ]
        blocks.append((off, data.projectives[idx].dim, e_img_cache[idx]))
        off += data.projectives[idx].dim
    total_unknowns = sum(len(b[2]) for b in blocks)
    if total_unknowns == 0:
        return []
    # Constraint: the assembled map must kill the cover kernel.
    if d.cols == 0:
        sol_vectors = [
            Matrix.column([ONE if i == k else ZERO for i in range(total_unknowns)])
            for k in range(total_unknowns)
        ]
    else:
        cols = []
        for c_off, c_dim, phis in blocks:
            d_block = Matrix._raw(c_dim, d.cols, d.data[c_off : c_off + c_dim])
            for phi in phis:
                g = phi * d_block
                cols.append([v for row in g.data for v in row])
        constraint = Matrix.from_rows(cols).transpose()
        sol_vectors = kernel_basis(constraint)
    if not sol_vectors:
        return []
    sect0 = solve_linear(cover0.matrix, Matrix.identity(x.dim))
    assert sect0 is not None
    maps = []
    for sol in sol_vectors:
        acc = [[ZERO] * p0.dim for _ in range(y.dim)]
        u = 0
        for c_off, c_dim, phis in blocks:
            for phi in phis:
                coef = sol[u, 0]
                u += 1
                if coef == 0:
                    continue
                for i in range(y.dim):
                    prow = phi.data[i]
                    arow = acc[i]
                    for j in range(c_dim):
                        v = prow[j]
                        if v != 0:
                            arow[c_off + j] += coef * v
        g = Matrix._raw(y.dim, p0.dim, tuple(tuple(r) for r in acc))
        maps.append(g * sect0)
    # Canonicalize the basis of the hom space.
    flat = Matrix._raw(
        len(maps), y.dim * x.dim, tuple(tuple(v for row in f.data for v in row) for f in maps)
    )
    red, pivots = rref(flat)
    out = []
    for r in range(len(pivots)):
        row = red.data[r]
        out.append(ModuleMap(x, y, Matrix._raw(y.dim, x.dim, tuple(row[i * x.dim : (i + 1) * x.dim] for i in range(y.dim)))))
    return out


def dual_module(m: Representation) -> Representation:
    """D(M) over the opposite algebra: transposed action matrices."""
    aop = get_opposite(m.algebra)
    return Representation(aop, m.dim, [mat.transpose() for mat in m.action], name=f"D({m.name or 'M'})")


def get_opposite(a: FinDimAlgebra) -> FinDimAlgebra:
    """Opposite algebra, cached so double opposites return the original."""
    if "op" not in a._cache:
        op = opposite(a)
        op._cache["op"] = a
        a._cache["op"] = op
    return a._cache["op"]


def injective_envelope(m: Representation) -> ModuleMap:
    """Embedding of m into its injective envelope D(P(D(m))).

    The dual of a projective cover over the opposite algebra is an
    injective envelope; the embedding matrix is the transposed cover.
    """
    if m.dim == 0:
        return ModuleMap(m, m, Matrix.zero(0, 0))
    dm = dual_module(m)
    cover = projective_cover(dm, primitive_idempotents(dm.algebra))
    env = dual_module(cover.source)
    env.name = f"I({m.name or 'M'})"
    return ModuleMap(m, env, cover.matrix.transpose())


def cosyzygy(m: Representation) -> Representation:
    """Cokernel of the embedding into the injective envelope."""
    emb = injective_envelope(m)
    cols = [Matrix.column(emb.matrix.col(j)) for j in range(emb.matrix.cols)]
    quot, _ = quotient_representation(emb.target, cols, name=f"cosyz({m.name or 'M'})")
    return quot


# -- decomposition into indecomposables ----------------------------------


def _hom_space_pivots(maps):
    """Pivot positions of an RREF-canonical hom basis (flattened entries).

    hom_basis returns the RREF rows of the flattened hom space, so the
    coordinates of any map inside the space are its entries at the pivot
    positions.
    """
    pivots = []
    for f in maps:
        flat = [x for row in f.matrix.data for x in row]
        for idx, x in enumerate(flat):
            if x != 0:
                pivots.append(idx)
                break
    return pivots


def _coords_at_pivots(mat: Matrix, pivots):
    flat = [x for row in mat.data for x in row]
    return [flat[p] for p in pivots]


def endomorphism_algebra(m: Representation):
    """End(m) as a FinDimAlgebra; returns (algebra, hom basis maps)."""
    if "end_algebra" in m._cache:
        return m._cache["end_algebra"]
    maps = hom_basis(m, m)
    n = len(maps)
    if n == 0:
        raise AlgebraError("endomorphism algebra of the zero module")
    pivots = _hom_space_pivots(maps)
    table = []
    for fi in maps:
        row = []
        for fj in maps:
            row.append(tuple(_coords_at_pivots(fi.matrix * fj.matrix, pivots)))
        table.append(row)
    unit = tuple(_coords_at_pivots(Matrix.identity(m.dim), pivots))
    alg = FinDimAlgebra(
        f"End({m.name or 'M'})",
        [f"f{i}" for i in range(n)],
        unit,
        table,
    )
    m._cache["end_algebra"] = (alg, maps)
    return alg, maps


class Summand:
    """One indecomposable direct summand with inclusion and projection."""

    def __init__(self, rep: Representation, inclusion: ModuleMap, projection: ModuleMap):
        self.rep = rep
        self.inclusion = inclusion
        self.projection = projection


def decompose_with_witnesses(m: Representation):
    """All indecomposable summands from a primitive idempotent frame of End(m)."""
    if "summands" in m._cache:
        return m._cache["summands"]
    if m.dim == 0:
        m._cache["summands"] = []
        return []
    alg, maps = endomorphism_algebra(m)
    try:
        frame = primitive_idempotents(alg)
    except AlgebraError as exc:
        raise AlgebraError(f"unsupported: non-split End ({exc})") from exc
    out = []
    for e in frame.idempotents:
        e_mat = Matrix.zero(m.dim, m.dim)
        for c, f in zip((e[i, 0] for i in range(len(maps))), maps):
            if c != 0:
                e_mat = e_mat + f.matrix.scale(c)
        image = column_space_basis(e_mat)
        sub, incl = sub_representation(m, image, name=f"{m.name or 'M'}-summand", trusted=True)
        proj_mat = solve_linear(incl.matrix, e_mat)
        assert proj_mat is not None
        out.append(Summand(sub, incl, ModuleMap(m, sub, proj_mat)))
    m._cache["summands"] = out
    return out


def indec_isomorphism(u: Representation, v: Representation):
    """Iso witness between indecomposables, or None.

    Valid because non-isomorphisms between indecomposables form a linear
    subspace: when u and v are isomorphic some basis hom must fall
    outside the radical, i.e. be invertible.
    """
    if u.dim != v.dim:
        return None
    if u.dim == 0:
        return ModuleMap(u, v, Matrix.zero(0, 0))
    for f in hom_basis(u, v):
        if f.matrix.is_invertible():
            return f
    return None


def decompose(m: Representation):
    """Indecomposable summands grouped into iso classes with multiplicities."""
    summands = decompose_with_witnesses(m)
    classes = []  # (representative Summand, count)
    for s in summands:
        for idx, (rep0, count) in enumerate(classes):
            if indec_isomorphism(rep0.rep, s.rep) is not None:
                classes[idx] = (rep0, count + 1)
                break
        else:
            classes.append((s, 1))
    return [(s.rep, count) for s, count in classes]


def is_isomorphic(u: Representation, v: Representation):
    """Iso test via Krull-Schmidt matching; returns (bool, witness ModuleMap)."""
    if not u.same_algebra(v):
        raise AlgebraError("isomorphism test between modules over different algebras")
    if u.dim != v.dim:
        return False, None
    if u.dim == 0:
        return True, ModuleMap(u, v, Matrix.zero(0, 0))
    su = decompose_with_witnesses(u)
    sv = decompose_with_witnesses(v)
    if len(su) != len(sv):
        return False, None
    used = [False] * len(sv)
    total = Matrix.zero(v.dim, u.dim)
    for s in su:
        found = False
        for j, t in enumerate(sv):
            if used[j]:
                continue
            iso = indec_isomorphism(s.rep, t.rep)
            if iso is not None:
                used[j] = True
                total = total + t.inclusion.matrix * iso.matrix * s.projection.matrix
                found = True
                break
        if not found:
            return False, None
    witness = ModuleMap(u, v, total)
    if not witness.is_isomorphism():
        raise AlgebraError("internal: assembled iso witness is singular")
    return True, witness


def is_projective_rep(m: Representation, frame: IdempotentFrame | None = None) -> bool:
    """Whether an indecomposable module is isomorphic to some P_i."""
    data = _projective_data(m.algebra, frame)
    for p in data.projectives:
        if indec_isomorphism(m, p) is not None:
            return True
    return False


def multiplicity_as_summand(x: Representation, y: Representation) -> int:
    """Multiplicity of the indecomposable x as a direct summand of y.

    Equals the rank of the composition pairing
    Hom(x, y) x Hom(y, x) -> End(x) -> End(x)/rad, which avoids
    decomposing y.  Requires x indecomposable with split local End.
    """
    if x.dim == 0:
        return 0
    fs = hom_basis(x, y)
    if not fs:
        return 0
    gs = hom_basis(y, x)
    if not gs:
        return 0
    alg, maps = endomorphism_algebra(x)
    rad_e = radical(alg)
    if alg.dim - len(rad_e) != 1:
        raise AlgebraError("multiplicity test requires an indecomposable with split local End")
    # Character of End(x): the unique functional vanishing on the radical
    # and sending the identity to 1; build it from quotient coordinates.
    pivots = _hom_space_pivots(maps)
    coords_list = []
    for g in gs:
        for f in fs:
            coords_list.append(_coords_at_pivots(g.matrix * f.matrix, pivots))
    if rad_e:
        stacked = Matrix.from_rows([[v[i, 0] for i in range(alg.dim)] for v in rad_e])
        red, pivots = rref(stacked)
        red_rows = [red.row(i) for i in range(len(pivots))]
        free = [j for j in range(alg.dim) if j not in set(pivots)][0]

        def char(vec):
            v = list(vec)
            for row, p in zip(red_rows, pivots):
                c = v[p]
                if c != 0:
                    v = [s - c * t for s, t in zip(v, row)]
            return v[free]

    else:

        def char(vec):
            return vec[0]

    unit_val = char(list(alg.unit))
    assert unit_val != 0
    pairing = []
    idx = 0
    for _ in range(len(gs)):
        row = []
        for _ in range(len(fs)):
            row.append(char(coords_list[idx]) / unit_val)
            idx += 1
        pairing.append(row)
    return Matrix.from_rows(pairing).rank()


def stable_summand(x: Representation, y: Representation, frame: IdempotentFrame | None = None):
    """Whether x is a direct summand of y + (projective) in the stable category.

    True iff every non-projective indecomposable summand of x appears
    among the summands of y with at least the same multiplicity; the
    multiplicities in y are read off the composition pairing rather than
    a full decomposition of y.  Returns (bool, witness).
    """
    if not x.same_algebra(y):
        raise AlgebraError("stable summand test between modules over different algebras")
    x_classes = decompose(x)
    matches = []
    for rep, count in x_classes:
        if is_projective_rep(rep, frame):
            matches.append({"summand": rep.name, "dim": rep.dim, "multiplicity": count, "projective": True})
            continue
        mult = multiplicity_as_summand(rep, y)
        if mult < count:
            return False, None
        matches.append(
            {
                "summand": rep.name,
                "dim": rep.dim,
                "multiplicity": count,
                "available": mult,
                "projective": False,
            }
        )
    return True, {"matched": matches}


def torsionless(m: Representation):
    """Embedding test into a finite sum of copies of the regular module.

    Decides via the common kernel of the whole hom space into the regular
    module; the returned witness is assembled from a greedily chosen
    minimal subset of the hom basis, which keeps downstream cokernels
    small.  Returns (True, embedding) or (False, None).
    """
    a = m.algebra
    reg = regular_representation(a)
    if m.dim == 0:
        return True, ModuleMap(m, reg, Matrix.zero(a.dim, 0))
    homs = hom_basis(m, reg)
    if not homs:
        return False, None
    stacked = vstack_all([f.matrix for f in homs])
    if kernel_basis(stacked):
        return False, None
    selected = []
    ker_dim = m.dim
    for f in homs:
        trial = selected + [f]
        k = len(kernel_basis(vstack_all([g.matrix for g in trial])))
        if k < ker_dim:
            selected = trial
            ker_dim = k
        if ker_dim == 0:
            break
    target = direct_sum([reg] * len(selected), name=f"{a.name}^{len(selected)}")
    return True, ModuleMap(m, target, vstack_all([f.matrix for f in selected]))


def random_basis_change(m: Representation, rng) -> Representation:
    """Conjugate the action by a random invertible matrix (for tests)."""
    n = m.dim
    if n == 0:
        return m
    while True:
        g = Matrix(n, n, [QQ(rng.randint(-3, 3)) for _ in range(n * n)])
        if g.is_invertible():
            break
    ginv = g.inverse()
    action = [g * mat * ginv for mat in m.action]
    return Representation(m.algebra, n, action, name=f"{m.name or 'M'}~")

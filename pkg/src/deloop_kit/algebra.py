"""Finite-dimensional algebras given by structure-constant tables.

An algebra is stored as its full multiplication table over the rationals:
``table[i][j]`` holds the coordinates of ``b_i * b_j`` in the basis.  The
concrete algebras of interest (the local algebra Lambda, the triangular
algebras B and C, opposites, endomorphism algebras) are all built through
this one representation, so validation, radicals and idempotents have a
single code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import (
    Matrix,
    ONE,
    QQ,
    ZERO,
    coords_in_basis,
    kernel_basis,
    min_poly,
    rational_roots,
    rref,
    scalar_to_str,
    solve_linear,
    span_basis,
)


class AlgebraError(ValueError):
    """Usage errors: bad inputs, mismatched frames, unsupported shapes."""


def _as_tuple_vec(v, dim: int):
    if isinstance(v, Matrix):
        if v.cols != 1 or v.rows != dim:
            raise AlgebraError(f"expected a {dim}-coordinate column vector")
        return tuple(v[i, 0] for i in range(dim))
    vec = tuple(QQ(x) for x in v)
    if len(vec) != dim:
        raise AlgebraError(f"expected {dim} coordinates, got {len(vec)}")
    return vec


class FinDimAlgebra:
    """An associative unital algebra over Q with a distinguished basis."""

    def __init__(self, name: str, basis_labels, unit, table):
        self.name = str(name)
        self.basis_labels = tuple(str(x) for x in basis_labels)
        self.dim = len(self.basis_labels)
        self.unit = _as_tuple_vec(unit, self.dim)
        tbl = []
        if len(table) != self.dim:
            raise AlgebraError("table must have dim rows")
        for i, row in enumerate(table):
            if len(row) != self.dim:
                raise AlgebraError(f"table row {i} must have dim entries")
            tbl.append(tuple(_as_tuple_vec(v, self.dim) for v in row))
        self.table = tuple(tbl)
        self._cache: dict = {}

    def __repr__(self):
        return f"FinDimAlgebra({self.name!r}, dim={self.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, FinDimAlgebra)
            and self.dim == other.dim
            and self.unit == other.unit
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.dim, self.unit, self.table))

    # -- element arithmetic (elements are coordinate tuples) --

    def mult(self, u, v):
        """Product of two elements given by coordinate tuples."""
        out = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.table[i]
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = ui * vj
                for l, t in enumerate(row[j]):
                    if t != 0:
                        out[l] += c * t
        return tuple(out)

    def unit_vec(self) -> Matrix:
        return Matrix.column(self.unit)

    def basis_elem(self, i: int):
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def left_mult_matrix(self, u) -> Matrix:
        """Matrix of x -> u*x in the basis."""
        u = _as_tuple_vec(u, self.dim)
        cols = [self.mult(u, self.basis_elem(j)) for j in range(self.dim)]
        return Matrix(self.dim, self.dim, [cols[j][l] for l in range(self.dim) for j in range(self.dim)])

    def right_mult_matrix(self, u) -> Matrix:
        """Matrix of x -> x*u in the basis."""
        u = _as_tuple_vec(u, self.dim)
        cols = [self.mult(self.basis_elem(j), u) for j in range(self.dim)]
        return Matrix(self.dim, self.dim, [cols[j][l] for l in range(self.dim) for j in range(self.dim)])

    def left_regular_matrices(self):
        """Left multiplication matrix of every basis element, cached."""
        if "Lmats" not in self._cache:
            self._cache["Lmats"] = tuple(
                self.left_mult_matrix(self.basis_elem(i)) for i in range(self.dim)
            )
        return self._cache["Lmats"]


@dataclass
class AlgebraValidationReport:
    """Outcome of validate_algebra: empty lists mean a valid algebra."""

    assoc_failures: list = field(default_factory=list)
    unit_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.assoc_failures and not self.unit_failures

    def summary(self) -> str:
        if self.ok:
            return "valid: associative and unital"
        parts = []
        if self.assoc_failures:
            parts.append(
                f"{len(self.assoc_failures)} associativity failures, first at (i,j,k)="
                f"{self.assoc_failures[0]}"
            )
        if self.unit_failures:
            parts.append(f"unit failures at {self.unit_failures}")
        return "; ".join(parts)


def validate_algebra(a: FinDimAlgebra) -> AlgebraValidationReport:
    """Check associativity on all basis triples and both unit laws."""
    report = AlgebraValidationReport()
    for i in range(a.dim):
        bi = a.basis_elem(i)
        if a.mult(a.unit, bi) != bi:
            report.unit_failures.append(("left", i))
        if a.mult(bi, a.unit) != bi:
            report.unit_failures.append(("right", i))
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.table[i][j]
            for k in range(a.dim):
                left = a.mult(ij, a.basis_elem(k))
                right = a.mult(a.basis_elem(i), a.table[j][k])
                if left != right:
                    report.assoc_failures.append((i, j, k))
    return report


# -- concrete algebras --------------------------------------------------


def ground_field(name: str = "Q") -> FinDimAlgebra:
    return FinDimAlgebra(name, ["1"], [ONE], [[[ONE]]])


LAMBDA_LABELS = ("1", "x", "y", "z", "yx", "zx")


def make_lambda(q) -> FinDimAlgebra:
    """The six-dimensional local algebra on 1, x, y, z, yx, zx.

    Generator products: x*x = y*y = z*z = 0, y*z = 0, x*y = -q*yx,
    x*z = z*x = zx, z*y = zx, y*x = yx, and the degree-two basis elements
    multiply everything (except 1) to zero.  q must not be 0 or a root of
    unity, which over Q means q outside {0, 1, -1}.
    """
    q = QQ(q)
    if q in (QQ(0), QQ(1), QQ(-1)):
        raise AlgebraError("q must have infinite multiplicative order (q not in {0, 1, -1})")
    dim = 6
    zero = tuple(ZERO for _ in range(dim))

    def e(i, c=ONE):
        return tuple(c if j == i else ZERO for j in range(dim))

    # Indices: 0=1, 1=x, 2=y, 3=z, 4=yx, 5=zx.
    prod = {
        (1, 1): zero,
        (1, 2): e(4, -q),
        (1, 3): e(5),
        (2, 1): e(4),
        (2, 2): zero,
        (2, 3): zero,
        (3, 1): e(5),
        (3, 2): e(5),
        (3, 3): zero,
    }
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i == 0:
                row.append(e(j))
            elif j == 0:
                row.append(e(i))
            elif i >= 4 or j >= 4:
                row.append(zero)
            else:
                row.append(prod[(i, j)])
        table.append(row)
    return FinDimAlgebra(f"Lambda(q={scalar_to_str(q)})", LAMBDA_LABELS, e(0), table)


def m_alpha_action_matrices(lam: FinDimAlgebra, alpha):
    """Action matrices of the three-dimensional module M(alpha) on (v, v', v'').

    x sends v to alpha*v', y sends v to v', z sends v to v''; everything
    else acts by zero.  Returned per Lambda basis element.
    """
    if lam.basis_labels != LAMBDA_LABELS:
        raise AlgebraError("module M(alpha) is only defined over the algebra from make_lambda")
    alpha = QQ(alpha)
    z3 = Matrix.zero(3, 3)
    mats = {
        0: Matrix.identity(3),
        1: Matrix(3, 3, [ZERO, ZERO, ZERO, alpha, ZERO, ZERO, ZERO, ZERO, ZERO]),
        2: Matrix(3, 3, [ZERO, ZERO, ZERO, ONE, ZERO, ZERO, ZERO, ZERO, ZERO]),
        3: Matrix(3, 3, [ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ONE, ZERO, ZERO]),
        4: z3,
        5: z3,
    }
    return tuple(mats[i] for i in range(6))


def opposite(a: FinDimAlgebra) -> FinDimAlgebra:
    """Same basis, transposed multiplication table."""
    table = [[a.table[j][i] for j in range(a.dim)] for i in range(a.dim)]
    name = a.name[:-3] if a.name.endswith("^op") else a.name + "^op"
    return FinDimAlgebra(name, a.basis_labels, a.unit, table)


def radical(a: FinDimAlgebra):
    """Basis of the Jacobson radical as a list of coordinate columns.

    In characteristic zero the radical is the kernel of the trace form
    (x, y) -> trace(L(xy)) of the left regular representation.
    """
    key = "radical"
    if key in a._cache:
        return a._cache[key]
    lm = a.left_regular_matrices()
    d = a.dim
    # Nonzero entries of each L_i, and of each transposed L_j, as flat lists.
    sparse = []
    sparse_t = []
    for m in lm:
        entries = []
        entries_t = []
        for r in range(d):
            row = m.data[r]
            for c in range(d):
                x = row[c]
                if x != 0:
                    entries.append((r, c, x))
                    entries_t.append((c, r, x))
        sparse.append(entries)
        sparse_t.append({(r, c): x for r, c, x in entries_t})
    gram = []
    for i in range(d):
        ent_i = sparse[i]
        row_out = []
        for j in range(d):
            tj = sparse_t[j]
            t = ZERO
            for r, c, x in ent_i:
                y = tj.get((r, c))
                if y is not None:
                    t += x * y
            row_out.append(t)
        gram.append(row_out)
    basis = kernel_basis(Matrix.from_rows(gram))
    a._cache[key] = basis
    return basis


def radical_power_dims(a: FinDimAlgebra):
    """Dimensions [dim J, dim J^2, ...] down to the first zero power."""
    j_basis = radical(a)
    dims = []
    current = j_basis
    steps = 0
    while current:
        dims.append(len(current))
        products = []
        for u in current:
            ut = _as_tuple_vec(u, a.dim)
            for v in j_basis:
                products.append(Matrix.column(a.mult(ut, _as_tuple_vec(v, a.dim))))
        current = span_basis(products, a.dim)
        steps += 1
        if steps > a.dim + 1:
            raise AlgebraError("radical is not nilpotent; input is not a valid algebra")
    return dims


def center_dim(a: FinDimAlgebra) -> int:
    """Dimension of {x : xb = bx for all basis elements b}."""
    rows = []
    lm = a.left_regular_matrices()
    for j in range(a.dim):
        # Coordinates x solve (R_j - L_j) x = 0 for every basis element b_j.
        diff = a.right_mult_matrix(a.basis_elem(j)) - lm[j]
        for r in range(a.dim):
            rows.append(list(diff.row(r)))
    return len(kernel_basis(Matrix.from_rows(rows)))


# -- quotients and subalgebras ------------------------------------------


def _reduce_mod_rows(red_rows, pivots, vec):
    """Reduce a coordinate tuple modulo an RREF-row spanned subspace."""
    v = list(vec)
    for row, p in zip(red_rows, pivots):
        c = v[p]
        if c != 0:
            for j, x in enumerate(row):
                if x != 0:
                    v[j] -= c * x
    return v


def quotient_algebra(a: FinDimAlgebra, ideal_basis, name: str | None = None):
    """Quotient by a two-sided ideal given by spanning columns.

    Returns (quotient, proj, sect) where proj maps old coordinates onto
    quotient coordinates and sect is a linear section.
    """
    if not ideal_basis:
        ident = Matrix.identity(a.dim)
        return a, ident, ident
    stacked = Matrix.from_rows([[v[i, 0] for i in range(a.dim)] for v in ideal_basis])
    red, pivots = rref(stacked)
    red_rows = [red.row(i) for i in range(len(pivots))]
    pivot_set = set(pivots)
    free = [j for j in range(a.dim) if j not in pivot_set]
    qdim = len(free)
    proj_rows = []
    for v_idx in range(a.dim):
        vec = [ONE if j == v_idx else ZERO for j in range(a.dim)]
        reduced = _reduce_mod_rows(red_rows, pivots, vec)
        proj_rows.append([reduced[f] for f in free])
    proj = Matrix.from_rows(proj_rows).transpose()
    sect = Matrix(a.dim, qdim, [ONE if free[j] == i else ZERO for i in range(a.dim) for j in range(qdim)])
    labels = [a.basis_labels[f] for f in free]
    unit_q = proj * a.unit_vec()
    prods = []
    for i in range(qdim):
        bi = tuple(ONE if j == free[i] else ZERO for j in range(a.dim))
        for jq in range(qdim):
            bj = tuple(ONE if j == free[jq] else ZERO for j in range(a.dim))
            prods.append(list(a.mult(bi, bj)))
    mapped = proj * Matrix.from_rows(prods).transpose()
    table = []
    for i in range(qdim):
        row = []
        for jq in range(qdim):
            col = i * qdim + jq
            row.append(tuple(mapped[l, col] for l in range(qdim)))
        table.append(row)
    quot = FinDimAlgebra(name or a.name + "/J", labels, tuple(unit_q[i, 0] for i in range(qdim)), table)
    return quot, proj, sect


def subalgebra_on_span(a: FinDimAlgebra, span_vectors, unit_vec: Matrix, name: str):
    """The algebra structure on a multiplicatively closed unital subspace.

    Returns (sub_algebra, inclusion matrix); raises when the span is not
    closed under multiplication or does not contain the given unit.
    """
    basis = span_basis(span_vectors, a.dim)
    if not basis:
        raise AlgebraError("empty subalgebra span")
    incl = basis[0]
    for v in basis[1:]:
        incl = incl.hstack(v)
    n = len(basis)
    tuples = [_as_tuple_vec(v, a.dim) for v in basis]
    # One multi-RHS solve covers all n^2 products plus the unit.
    rhs_cols = []
    for ui in tuples:
        for vj in tuples:
            rhs_cols.append(list(a.mult(ui, vj)))
    rhs_cols.append([unit_vec[i, 0] for i in range(a.dim)])
    rhs = Matrix.from_rows(rhs_cols).transpose()
    sol = solve_linear(incl, rhs)
    if sol is None:
        raise AlgebraError("span is not closed under multiplication or misses the unit")
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            col = i * n + j
            row.append(tuple(sol[l, col] for l in range(n)))
        table.append(row)
    unit_coords = tuple(sol[l, n * n] for l in range(n))
    sub = FinDimAlgebra(name, [f"c{i}" for i in range(n)], unit_coords, table)
    return sub, incl


# -- idempotents ---------------------------------------------------------


@dataclass
class IdempotentFrame:
    """A complete orthogonal set of primitive idempotents."""

    algebra: FinDimAlgebra
    idempotents: tuple

    def __len__(self):
        return len(self.idempotents)

    def validate(self) -> None:
        a = self.algebra
        total = tuple(ZERO for _ in range(a.dim))
        for i, e in enumerate(self.idempotents):
            ei = _as_tuple_vec(e, a.dim)
            if a.mult(ei, ei) != ei:
                raise AlgebraError(f"frame element {i} is not idempotent")
            if all(x == 0 for x in ei):
                raise AlgebraError(f"frame element {i} is zero")
            total = tuple(t + x for t, x in zip(total, ei))
            for jdx, f in enumerate(self.idempotents):
                if jdx == i:
                    continue
                fj = _as_tuple_vec(f, a.dim)
                if any(x != 0 for x in a.mult(ei, fj)):
                    raise AlgebraError(f"frame elements {i},{jdx} are not orthogonal")
        if total != a.unit:
            raise AlgebraError("frame does not sum to the unit")
        for i, e in enumerate(self.idempotents):
            if not _is_primitive(a, e):
                raise AlgebraError(f"frame element {i} is not primitive")


def _is_primitive(a: FinDimAlgebra, e: Matrix) -> bool:
    """e A e must be local: its semisimple quotient is one-dimensional."""
    et = _as_tuple_vec(e, a.dim)
    corner = [Matrix.column(a.mult(a.mult(et, a.basis_elem(i)), et)) for i in range(a.dim)]
    sub, _ = subalgebra_on_span(a, corner, Matrix.column(et), "corner")
    return sub.dim - len(radical(sub)) == 1


def _poly_mul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] += a * b
    return out


def _poly_divmod(p, q):
    p = list(p)
    dq = len(q) - 1
    while len(q) > 1 and q[-1] == 0:
        q = q[:-1]
        dq -= 1
    quot = [ZERO] * max(1, len(p) - dq)
    while len(p) - 1 >= dq and any(x != 0 for x in p):
        while len(p) > 1 and p[-1] == 0:
            p.pop()
        if len(p) - 1 < dq:
            break
        c = p[-1] / q[-1]
        k = len(p) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            p[k + i] -= c * b
        p.pop()
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return quot, p


def _poly_xgcd(p, q):
    """Extended gcd over Q[x] for ascending-coefficient polynomials."""
    r0, r1 = list(p), list(q)
    s0, s1 = [ONE], [ZERO]
    t0, t1 = [ZERO], [ONE]
    while any(x != 0 for x in r1):
        quo, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem

        def step(a0, a1):
            prod = _poly_mul(quo, a1)
            width = max(len(a0), len(prod))
            diff = [(a0[i] if i < len(a0) else ZERO) - (prod[i] if i < len(prod) else ZERO) for i in range(width)]
            return a1, diff

        s0, s1 = step(s0, s1)
        t0, t1 = step(t0, t1)
    return r0, s0, t0


def _eval_poly_in_corner(a: FinDimAlgebra, coeffs, u, corner_unit):
    """Evaluate a polynomial at u inside the corner algebra (u^0 = corner unit)."""
    acc = tuple(ZERO for _ in range(a.dim))
    power = corner_unit
    for i, c in enumerate(coeffs):
        if c != 0:
            acc = tuple(x + c * y for x, y in zip(acc, power))
        if i + 1 < len(coeffs):
            power = a.mult(power, u)
    return acc


_GRID_STEPS = (1, -1, 2, -2)


def _splitting_candidates(a: FinDimAlgebra, block_basis):
    """Deterministic stream of elements to try when splitting a block."""
    vecs = [_as_tuple_vec(v, a.dim) for v in block_basis]
    for v in vecs:
        yield v
    n = len(vecs)
    for c in _GRID_STEPS:
        for i in range(n):
            for j in range(i + 1, n):
                yield tuple(x + c * y for x, y in zip(vecs[i], vecs[j]))
    for c in _GRID_STEPS:
        for d in _GRID_STEPS:
            for i in range(n):
                for j in range(i + 1, n):
                    for k in range(j + 1, n):
                        yield tuple(x + c * y + d * z for x, y, z in zip(vecs[i], vecs[j], vecs[k]))


def _refine_idempotent(a: FinDimAlgebra, f):
    """Split an idempotent of a semisimple algebra into primitive ones.

    Works inside the corner algebra fAf: find an element whose minimal
    polynomial has at least two coprime factors with a rational root
    among them, and cut with the corresponding Bezout idempotent.
    """
    ft = _as_tuple_vec(f, a.dim)
    corner_vecs = [Matrix.column(a.mult(a.mult(ft, a.basis_elem(i)), ft)) for i in range(a.dim)]
    block = span_basis(corner_vecs, a.dim)
    if len(block) == 1:
        return [ft]
    tried = 0
    for cand in _splitting_candidates(a, block):
        tried += 1
        if tried > 400:
            break
        # Minimal polynomial of left multiplication on the block.
        try:
            cols = [coords_in_basis(block, Matrix.column(a.mult(cand, _as_tuple_vec(b, a.dim)))) for b in block]
        except ValueError:
            continue
        lu = Matrix(len(block), len(block), [cols[j][i, 0] for i in range(len(block)) for j in range(len(block))])
        mp = min_poly(lu)
        roots, rem_deg = rational_roots(mp)
        distinct = sorted(set(roots), reverse=True)
        if not distinct:
            continue
        if len(distinct) == 1 and rem_deg == 0:
            continue
        lam = distinct[0]
        mult = roots.count(lam)
        p1 = [ONE]
        for _ in range(mult):
            p1 = _poly_mul(p1, [-lam, ONE])
        p2, rem = _poly_divmod(mp, p1)
        assert all(x == 0 for x in rem)
        g, alpha, beta = _poly_xgcd(p1, p2)
        if len([x for x in g if x != 0]) != 1:
            continue
        scale = ONE / g[0]
        bp2 = _poly_mul([x * scale for x in beta], p2)
        e = _eval_poly_in_corner(a, bp2, cand, ft)
        if a.mult(e, e) != e:
            continue
        if all(x == 0 for x in e) or e == ft:
            continue
        rest = tuple(x - y for x, y in zip(ft, e))
        return _refine_idempotent(a, Matrix.column(e)) + _refine_idempotent(a, Matrix.column(rest))
    raise AlgebraError(
        "unsupported: non-split algebra (no rational splitting element found for a "
        f"{len(block)}-dimensional semisimple block)"
    )


def primitive_idempotents(a: FinDimAlgebra) -> IdempotentFrame:
    """Complete orthogonal primitive idempotents of a split algebra.

    The semisimple quotient A/J is decomposed by exact eigenvalue
    splitting, then the idempotents are lifted through the nilpotent
    radical with the iteration e <- 3e^2 - 2e^3, sequentially conjugated
    into the complement of the already-lifted part so orthogonality is
    exact.  Algebras whose quotient has a block not split over Q are
    rejected loudly.
    """
    key = "frame"
    if key in a._cache:
        return a._cache[key]
    j_basis = radical(a)
    quot, proj, sect = quotient_algebra(a, j_basis)
    frame_bar = _refine_idempotent(quot, quot.unit_vec())
    lifted = []
    g = tuple(ZERO for _ in range(a.dim))
    one = a.unit
    for ebar in frame_bar:
        a0 = sect * Matrix.column(ebar)
        a0 = tuple(a0[i, 0] for i in range(a.dim))
        comp = tuple(x - y for x, y in zip(one, g))
        e = a.mult(a.mult(comp, a0), comp)
        for _ in range(64):
            e2 = a.mult(e, e)
            if e2 == e:
                break
            e3 = a.mult(e2, e)
            e = tuple(3 * x - 2 * y for x, y in zip(e2, e3))
        else:
            raise AlgebraError("idempotent lifting did not converge; radical not nilpotent?")
        lifted.append(e)
        g = tuple(x + y for x, y in zip(g, e))
    if g != one:
        raise AlgebraError("lifted idempotents do not sum to the unit")
    frame = IdempotentFrame(a, tuple(Matrix.column(e) for e in lifted))
    frame.validate()
    a._cache[key] = frame
    return frame


def block_dims(a: FinDimAlgebra, frame: IdempotentFrame):
    """Matrix of dim(e_i A e_j) over the frame; entries sum to dim A."""
    if frame.algebra is not a and frame.algebra != a:
        raise AlgebraError("frame does not belong to this algebra")
    out = []
    for e in frame.idempotents:
        et = _as_tuple_vec(e, a.dim)
        row = []
        for f in frame.idempotents:
            ftv = _as_tuple_vec(f, a.dim)
            vecs = [Matrix.column(a.mult(a.mult(et, a.basis_elem(i)), ftv)) for i in range(a.dim)]
            row.append(len(span_basis(vecs, a.dim)))
        out.append(row)
    return out


# -- bimodules and triangular algebras ----------------------------------


class Bimodule:
    """An (S, R)-bimodule: left action of S, right action of R.

    Right action matrices satisfy the contravariant law
    R(b_i b_j) = R(b_j) R(b_i), matching column-vector conventions.
    """

    def __init__(self, left_algebra: FinDimAlgebra, right_algebra: FinDimAlgebra, dim: int, left_action, right_action):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.left_action = tuple(left_action)
        self.right_action = tuple(right_action)
        if len(self.left_action) != left_algebra.dim:
            raise AlgebraError("need one left action matrix per left algebra basis element")
        if len(self.right_action) != right_algebra.dim:
            raise AlgebraError("need one right action matrix per right algebra basis element")
        for m in (*self.left_action, *self.right_action):
            if m.rows != dim or m.cols != dim:
                raise AlgebraError("bimodule action matrices must be dim x dim")

    def left_of(self, u) -> Matrix:
        u = _as_tuple_vec(u, self.left_algebra.dim)
        acc = Matrix.zero(self.dim, self.dim)
        for c, m in zip(u, self.left_action):
            if c != 0:
                acc = acc + m.scale(c)
        return acc

    def right_of(self, u) -> Matrix:
        u = _as_tuple_vec(u, self.right_algebra.dim)
        acc = Matrix.zero(self.dim, self.dim)
        for c, m in zip(u, self.right_action):
            if c != 0:
                acc = acc + m.scale(c)
        return acc

    def validate(self) -> None:
        s, r = self.left_algebra, self.right_algebra
        ident = Matrix.identity(self.dim)
        if self.left_of(s.unit) != ident:
            raise AlgebraError("left action is not unital")
        if self.right_of(r.unit) != ident:
            raise AlgebraError("right action is not unital")
        for i in range(s.dim):
            for j in range(s.dim):
                if self.left_action[i] * self.left_action[j] != self.left_of(s.table[i][j]):
                    raise AlgebraError(f"left action breaks structure constants at ({i},{j})")
        for i in range(r.dim):
            for j in range(r.dim):
                if self.right_action[j] * self.right_action[i] != self.right_of(r.table[i][j]):
                    raise AlgebraError(f"right action breaks structure constants at ({i},{j})")
        for i in range(s.dim):
            for j in range(r.dim):
                if self.left_action[i] * self.right_action[j] != self.right_action[j] * self.left_action[i]:
                    raise AlgebraError(f"left and right actions do not commute at ({i},{j})")


def dual_bimodule(n: Bimodule) -> Bimodule:
    """Linear dual: algebras swap sides, actions become transposes."""
    return Bimodule(
        left_algebra=n.right_algebra,
        right_algebra=n.left_algebra,
        dim=n.dim,
        left_action=tuple(m.transpose() for m in n.right_action),
        right_action=tuple(m.transpose() for m in n.left_action),
    )


def triangular_algebra(r: FinDimAlgebra, s: FinDimAlgebra, n: Bimodule, orientation: str, name: str | None = None) -> FinDimAlgebra:
    """Triangular matrix algebra with R and S on the diagonal and N in a corner.

    ``lower`` builds [[R, 0], [N, S]] on the ordered basis (R-block,
    N-block, S-block); ``upper`` builds [[S, N], [0, R]] on (S-block,
    N-block, R-block).  In both cases N is a left-S right-R bimodule.
    """
    if orientation not in ("upper", "lower"):
        raise AlgebraError("orientation must be 'upper' or 'lower'")
    if n.left_algebra != s or n.right_algebra != r:
        raise AlgebraError("bimodule sides do not match the given algebras")
    dr, dn, ds = r.dim, n.dim, s.dim
    dim = dr + dn + ds
    if orientation == "lower":
        r_off, n_off, s_off = 0, dr, dr + dn
        labels = (
            [f"r:{lbl}" for lbl in r.basis_labels]
            + [f"n:{i}" for i in range(dn)]
            + [f"s:{lbl}" for lbl in s.basis_labels]
        )
    else:
        s_off, n_off, r_off = 0, ds, ds + dn
        labels = (
            [f"s:{lbl}" for lbl in s.basis_labels]
            + [f"n:{i}" for i in range(dn)]
            + [f"r:{lbl}" for lbl in r.basis_labels]
        )

    def embed(offset, vec):
        out = [ZERO] * dim
        for i, c in enumerate(vec):
            out[offset + i] = c
        return tuple(out)

    zero = tuple(ZERO for _ in range(dim))
    table = [[zero] * dim for _ in range(dim)]

    for i in range(dr):
        for j in range(dr):
            table[r_off + i][r_off + j] = embed(r_off, r.table[i][j])
    for i in range(ds):
        for j in range(ds):
            table[s_off + i][s_off + j] = embed(s_off, s.table[i][j])
    # N-block products: s*n via the left action, n*r via the right action.
    for i in range(ds):
        m = n.left_action[i]
        for j in range(dn):
            table[s_off + i][n_off + j] = embed(n_off, m.col(j))
    for i in range(dn):
        for j in range(dr):
            m = n.right_action[j]
            table[n_off + i][r_off + j] = embed(n_off, m.col(i))

    unit = tuple(
        x + y
        for x, y in zip(embed(r_off, r.unit), embed(s_off, s.unit))
    )
    if name is None:
        shape = "[[R,0],[N,S]]" if orientation == "lower" else "[[S,N],[0,R]]"
        name = f"tri_{orientation}({r.name};{s.name};{n.dim}) {shape}"
    return FinDimAlgebra(name, labels, unit, table)


@dataclass
class AlgebraIso:
    """An explicit unital multiplicative linear bijection between algebras."""

    source: FinDimAlgebra
    target: FinDimAlgebra
    matrix: Matrix

    def verify(self) -> None:
        verify_explicit_iso(self.source, self.target, self.matrix)


def verify_explicit_iso(a1: FinDimAlgebra, a2: FinDimAlgebra, m: Matrix) -> None:
    """Check that m is bijective, unital and multiplicative on all basis pairs."""
    if a1.dim != a2.dim or m.rows != a2.dim or m.cols != a1.dim:
        raise AlgebraError("isomorphism candidate has wrong shape")
    if not m.is_invertible():
        raise AlgebraError("isomorphism candidate is singular")
    if m * a1.unit_vec() != a2.unit_vec():
        raise AlgebraError("isomorphism candidate does not preserve the unit")
    cols = [m.col(i) for i in range(a1.dim)]
    for i in range(a1.dim):
        for j in range(a1.dim):
            lhs = m * Matrix.column(a1.table[i][j])
            rhs = Matrix.column(a2.mult(cols[i], cols[j]))
            if lhs != rhs:
                raise AlgebraError(f"isomorphism candidate fails multiplicativity at ({i},{j})")


def swap_iso(r: FinDimAlgebra, s: FinDimAlgebra, n: Bimodule) -> AlgebraIso:
    """The block-swap isomorphism [[S,N],[0,R]] -> [[R,0],[N,S]].

    Realized by the permutation of basis blocks; verified on every basis
    pair before being returned.
    """
    upper = triangular_algebra(r, s, n, "upper")
    lower = triangular_algebra(r, s, n, "lower")
    dr, dn, ds = r.dim, n.dim, s.dim
    dim = dr + dn + ds
    perm = [ZERO] * (dim * dim)

    def set_entry(new, old):
        perm[new * dim + old] = ONE

    for k in range(ds):
        set_entry(dr + dn + k, k)
    for k in range(dn):
        set_entry(dr + k, ds + k)
    for k in range(dr):
        set_entry(k, ds + dn + k)
    matrix = Matrix(dim, dim, perm)
    iso = AlgebraIso(upper, lower, matrix)
    iso.verify()
    return iso


# -- the triangular algebras of interest ---------------------------------


def make_mq_bimodule(lam: FinDimAlgebra, q) -> Bimodule:
    """M(q) as a (Lambda, Q)-bimodule."""
    kk = ground_field()
    return Bimodule(
        left_algebra=lam,
        right_algebra=kk,
        dim=3,
        left_action=m_alpha_action_matrices(lam, q),
        right_action=(Matrix.identity(3),),
    )


def make_B(q) -> FinDimAlgebra:
    """B = [[k, 0], [M(q), Lambda]]: one-point extension shape, dim 10."""
    q = QQ(q)
    lam = make_lambda(q)
    mq = make_mq_bimodule(lam, q)
    return triangular_algebra(mq.right_algebra, lam, mq, "lower", name=f"B(q={scalar_to_str(q)})")


def make_C(q) -> FinDimAlgebra:
    """C = [[Lambda, 0], [D(M(q)), k]]: one-point coextension shape, dim 10."""
    q = QQ(q)
    lam = make_lambda(q)
    dm = dual_bimodule(make_mq_bimodule(lam, q))
    return triangular_algebra(lam, dm.left_algebra, dm, "lower", name=f"C(q={scalar_to_str(q)})")

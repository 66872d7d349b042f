"""Independent oracles for the test suite.

Everything here deliberately avoids the library's own computation paths:
the multiplication table of the local algebra is regenerated by word
rewriting from the defining relations, hom spaces are solved from the
raw intertwining system, and decompositions are re-found by exhaustive
idempotent search on a small rational grid.
"""

from deloop_kit.algebra import FinDimAlgebra, ground_field, primitive_idempotents, triangular_algebra, Bimodule
from deloop_kit.linalg import Matrix, ONE, QQ, ZERO, kernel_basis, rref
from deloop_kit.modules import (
    Representation,
    direct_sum,
    hom_basis,
    regular_and_projectives,
    sub_representation,
    submodule_and_quotient,
)
from deloop_kit.linalg import column_space_basis, solve_linear


# -- word rewriting for the local algebra ---------------------------------

NORMAL_WORDS = ((), ("x",), ("y",), ("z",), ("y", "x"), ("z", "x"))


def _rules(q):
    return {
        ("x", "x"): {},
        ("y", "y"): {},
        ("z", "z"): {},
        ("y", "z"): {},
        ("x", "y"): {("y", "x"): -QQ(q)},
        ("x", "z"): {("z", "x"): ONE},
        ("z", "y"): {("z", "x"): ONE},
    }


def reduce_word(word, q):
    """Linear combination of normal words equal to the given word."""
    rules = _rules(q)
    result = {}
    stack = [(tuple(word), ONE)]
    while stack:
        w, coeff = stack.pop()
        for i in range(len(w) - 1):
            pair = w[i : i + 2]
            if pair in rules:
                for repl, c in rules[pair].items():
                    stack.append((w[:i] + repl + w[i + 2 :], coeff * c))
                break
        else:
            result[w] = result.get(w, ZERO) + coeff
    return {w: c for w, c in result.items() if c != 0}


def lambda_table_by_rewriting(q):
    """Full multiplication table on the normal-word basis, plus sanity
    data: every product must land in the span of the normal words."""
    index = {w: i for i, w in enumerate(NORMAL_WORDS)}
    table = []
    for u in NORMAL_WORDS:
        row = []
        for v in NORMAL_WORDS:
            combo = reduce_word(u + v, q)
            vec = [ZERO] * len(NORMAL_WORDS)
            for w, c in combo.items():
                assert w in index, f"non-normal word {w} survived rewriting"
                vec[index[w]] = c
            row.append(tuple(vec))
        table.append(row)
    return table


# -- naive hom solver -------------------------------------------------------


def naive_hom_basis(x: Representation, y: Representation):
    """Basis of Hom(x, y) from the raw intertwining system, canonicalized
    by RREF on flattened matrices (same convention as the library)."""
    if x.dim == 0 or y.dim == 0:
        return []
    n_unknowns = y.dim * x.dim
    rows = []
    for b in range(x.algebra.dim):
        ax = x.action[b]
        ay = y.action[b]
        # Constraint F ax - ay F = 0, entry (i, j).
        for i in range(y.dim):
            for j in range(x.dim):
                row = [ZERO] * n_unknowns
                for k in range(x.dim):
                    row[i * x.dim + k] += ax[k, j]
                for k in range(y.dim):
                    row[k * x.dim + j] -= ay[i, k]
                rows.append(row)
    sols = kernel_basis(Matrix.from_rows(rows))
    if not sols:
        return []
    flat = Matrix.from_rows([[v[i, 0] for i in range(n_unknowns)] for v in sols])
    red, pivots = rref(flat)
    out = []
    for r in range(len(pivots)):
        row = red.data[r]
        out.append(Matrix._raw(y.dim, x.dim, tuple(row[i * x.dim : (i + 1) * x.dim] for i in range(y.dim))))
    return out


# -- brute-force decomposition ----------------------------------------------

_GRID = (ZERO, ONE, -ONE, QQ(1, 2), QQ(-1, 2))


def brute_force_summand_dims(m: Representation, max_basis: int = 6):
    """Multiset of summand dimensions found by exhaustive idempotent
    search in End(m) over a small rational grid, recursing on images."""
    if m.dim == 0:
        return []
    homs = hom_basis(m, m)
    use = homs[:max_basis]
    import itertools

    ident = Matrix.identity(m.dim)
    for coeffs in itertools.product(_GRID, repeat=len(use)):
        e = Matrix.zero(m.dim, m.dim)
        for c, f in zip(coeffs, use):
            if c != 0:
                e = e + f.matrix.scale(c)
        if e.is_zero() or e == ident:
            continue
        if e * e != e:
            continue
        img = column_space_basis(e)
        comp = column_space_basis(ident - e)
        sub1, _ = sub_representation(m, img, trusted=True)
        sub2, _ = sub_representation(m, comp, trusted=True)
        return brute_force_summand_dims(sub1, max_basis) + brute_force_summand_dims(sub2, max_basis)
    return [m.dim]


# -- random instances ---------------------------------------------------------


def product_algebra(a: FinDimAlgebra, b: FinDimAlgebra, name=None) -> FinDimAlgebra:
    dim = a.dim + b.dim
    zero = tuple(ZERO for _ in range(dim))

    def embed(offset, vec):
        out = [ZERO] * dim
        for i, c in enumerate(vec):
            out[offset + i] = c
        return tuple(out)

    table = [[zero] * dim for _ in range(dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            table[i][j] = embed(0, a.table[i][j])
    for i in range(b.dim):
        for j in range(b.dim):
            table[a.dim + i][a.dim + j] = embed(a.dim, b.table[i][j])
    unit = tuple(x + y for x, y in zip(embed(0, a.unit), embed(a.dim, b.unit)))
    labels = [f"a:{l}" for l in a.basis_labels] + [f"b:{l}" for l in b.basis_labels]
    return FinDimAlgebra(name or f"{a.name}x{b.name}", labels, unit, table)


def truncated_polynomial_algebra(k: int) -> FinDimAlgebra:
    """Q[t]/(t^k) on the basis 1, t, ..., t^(k-1)."""
    zero = tuple(ZERO for _ in range(k))

    def e(i):
        return tuple(ONE if j == i else ZERO for j in range(k))

    table = [[e(i + j) if i + j < k else zero for j in range(k)] for i in range(k)]
    return FinDimAlgebra(f"Q[t]/t^{k}", [f"t{i}" for i in range(k)], e(0), table)


def two_by_two_upper_triangular() -> FinDimAlgebra:
    """Upper triangular 2x2 matrices over Q, dim 3, as a triangular algebra."""
    kk = ground_field()
    n = Bimodule(kk, kk, 1, [Matrix.identity(1)], [Matrix.identity(1)])
    return triangular_algebra(kk, kk, n, "upper", name="UT2(Q)")


def algebra_zoo():
    from deloop_kit.algebra import make_lambda

    kk = ground_field()
    return [
        kk,
        product_algebra(kk, kk),
        product_algebra(product_algebra(kk, kk), kk),
        truncated_polynomial_algebra(2),
        truncated_polynomial_algebra(3),
        truncated_polynomial_algebra(4),
        two_by_two_upper_triangular(),
        product_algebra(truncated_polynomial_algebra(2), truncated_polynomial_algebra(3)),
        product_algebra(two_by_two_upper_triangular(), truncated_polynomial_algebra(2)),
        make_lambda(2),
        product_algebra(truncated_polynomial_algebra(4), truncated_polynomial_algebra(4)),
    ]


def random_algebra(rng):
    zoo = algebra_zoo()
    return zoo[rng.randrange(len(zoo))]


def random_module(a: FinDimAlgebra, rng, max_dim: int = 8) -> Representation:
    """Random quotient of a random sum of projectives; always a valid module."""
    projs = regular_and_projectives(a)
    picks = []
    total = 0
    for _ in range(rng.randint(1, 3)):
        p = projs[rng.randrange(len(projs))]
        if total + p.dim > max_dim + 4:
            break
        picks.append(p)
        total += p.dim
    if not picks:
        picks = [projs[0]]
        total = projs[0].dim
    big = direct_sum(picks)
    while big.dim > max_dim:
        gen = Matrix.column([QQ(rng.randint(-2, 2)) for _ in range(big.dim)])
        if gen.is_zero():
            continue
        _, _, quot, _ = submodule_and_quotient(big, [gen])
        if quot.dim == big.dim:
            continue
        big = quot
    return big


def random_submodule_of_projective(a: FinDimAlgebra, rng, max_tries: int = 10):
    """A nonzero proper submodule of a projective (hence torsionless)."""
    projs = regular_and_projectives(a)
    for _ in range(max_tries):
        p = projs[rng.randrange(len(projs))]
        gen = Matrix.column([QQ(rng.randint(-2, 2)) for _ in range(p.dim)])
        if gen.is_zero():
            continue
        sub, incl, _, _ = submodule_and_quotient(p, [gen])
        if 0 < sub.dim:
            return sub, incl, p
    return None

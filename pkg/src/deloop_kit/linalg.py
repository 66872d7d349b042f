"""Exact rational scalars and dense matrices.

Everything downstream (algebras, modules, complexes) runs on the
primitives in this file.  All arithmetic is exact; pivoting is
deterministic (first nonzero entry), so every derived basis is
reproducible across runs.
"""

from __future__ import annotations

import math
import re

# gmpy2's mpq is a drop-in replacement for Fraction and considerably
# faster; fall back to the stdlib when it is not installed.
try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)
_QQ_TYPE = type(ZERO)

_INT_RE = re.compile(r"^(0|-?[1-9][0-9]*)$")
_DEN_RE = re.compile(r"^[1-9][0-9]*$")


class ScalarFormatError(ValueError):
    """Raised for strings that are not canonical "p" / "p/q" scalars."""


def parse_scalar(s: str):
    """Parse a canonical scalar string, rejecting non-canonical forms.

    Canonical means: plain decimal integer, or "p/q" with q >= 2,
    gcd(|p|, q) = 1 and p != 0.  "2/4", "1/-2", "4/1", "0/3", "+1" and
    "007" are all rejected.
    """
    if not isinstance(s, str):
        raise ScalarFormatError(f"scalar must be a string, got {type(s).__name__}")
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        if not _INT_RE.match(num_s) or not _DEN_RE.match(den_s):
            raise ScalarFormatError(f"non-canonical scalar {s!r}")
        num, den = int(num_s), int(den_s)
        if num == 0 or den == 1 or math.gcd(abs(num), den) != 1:
            raise ScalarFormatError(f"non-canonical scalar {s!r}")
        return QQ(num, den)
    if not _INT_RE.match(s):
        raise ScalarFormatError(f"non-canonical scalar {s!r}")
    return QQ(int(s))


def scalar_to_str(x) -> str:
    """Canonical string form: "p" or "p/q" with q >= 2 and reduced."""
    return str(x)


class Matrix:
    """Immutable dense matrix over the rationals.

    Stored row-major as a tuple of row tuples.  Zero-row and zero-column
    shapes are legal; they show up as actions of the zero module.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        entries = entries if isinstance(entries, list) else list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match matrix shape")
        qq = _QQ_TYPE
        data = []
        k = 0
        for _ in range(rows):
            row = entries[k : k + cols]
            data.append(tuple(x if type(x) is qq else QQ(x) for x in row))
            k += cols
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", tuple(data))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def _raw(rows: int, cols: int, data) -> "Matrix":
        """Internal constructor for entries already of the scalar type."""
        m = object.__new__(Matrix)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "data", data)
        return m

    @staticmethod
    def from_rows(rows_list) -> "Matrix":
        rows_list = [list(r) for r in rows_list]
        n = len(rows_list)
        m = len(rows_list[0]) if rows_list else 0
        for r in rows_list:
            if len(r) != m:
                raise ValueError("ragged rows")
        return Matrix(n, m, [x for r in rows_list for x in r])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix._raw(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        zrow = (ZERO,) * cols
        return Matrix._raw(rows, cols, tuple(zrow for _ in range(rows)))

    @staticmethod
    def column(entries) -> "Matrix":
        entries = list(entries)
        return Matrix(len(entries), 1, entries)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int):
        return self.data[i]

    def col(self, j: int):
        return tuple(self.data[i][j] for i in range(self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return Matrix._raw(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in subtraction")
        return Matrix._raw(
            self.rows,
            self.cols,
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(tuple(-a for a in row) for row in self.data))

    def scale(self, c) -> "Matrix":
        c = QQ(c)
        return Matrix._raw(self.rows, self.cols, tuple(tuple(c * a for a in row) for row in self.data))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch in product: {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        odata = other.data
        ocols = other.cols
        out = []
        for i in range(self.rows):
            row_i = self.data[i]
            acc = [ZERO] * ocols
            for k in range(self.cols):
                a = row_i[k]
                if a == 0:
                    continue
                row_k = odata[k]
                for j in range(ocols):
                    b = row_k[j]
                    if b != 0:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(self.rows, ocols, tuple(out))

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix._raw(
            self.rows,
            self.cols + other.cols,
            tuple(ra + rb for ra, rb in zip(self.data, other.data)),
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Matrix._raw(self.rows + other.rows, self.cols, self.data + other.data)

    def col_slice(self, start: int, stop: int) -> "Matrix":
        return Matrix._raw(self.rows, stop - start, tuple(row[start:stop] for row in self.data))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        red, pivots = rref(self.hstack(Matrix.identity(n)))
        if list(pivots) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(n, n, [red[i, n + j] for i in range(n) for j in range(n)])

    def entries_str(self):
        """Row-major nested lists of canonical scalar strings."""
        return [[scalar_to_str(x) for x in row] for row in self.data]


def direct_sum_matrices(blocks) -> Matrix:
    """Block-diagonal matrix from a list of matrices."""
    blocks = list(blocks)
    cols = sum(b.cols for b in blocks)
    out = []
    co = 0
    for b in blocks:
        left = (ZERO,) * co
        right = (ZERO,) * (cols - co - b.cols)
        for row in b.data:
            out.append(left + row + right)
        co += b.cols
    return Matrix._raw(len(out), cols, tuple(out))


def hstack_all(mats) -> Matrix:
    """Single-pass horizontal stack of a nonempty list of matrices."""
    mats = list(mats)
    rows = mats[0].rows
    for m in mats:
        if m.rows != rows:
            raise ValueError("row mismatch in hstack_all")
    data = tuple(tuple(x for m in mats for x in m.data[i]) for i in range(rows))
    return Matrix._raw(rows, sum(m.cols for m in mats), data)


def vstack_all(mats) -> Matrix:
    """Single-pass vertical stack of a nonempty list of matrices."""
    mats = list(mats)
    cols = mats[0].cols
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch in vstack_all")
    data = tuple(row for m in mats for row in m.data)
    return Matrix._raw(len(data), cols, data)


def rref(m: Matrix):
    """Reduced row echelon form via exact Gauss-Jordan elimination.

    Returns (rref_matrix, pivot_columns).  The pivot is always the first
    row with a nonzero entry in the current column, so the result is a
    deterministic function of the input.
    """
    rows = [list(r) for r in m.data]
    n_rows, n_cols = m.rows, m.cols
    pivots = []
    piv_r = 0
    for c in range(n_cols):
        pr = None
        for r in range(piv_r, n_rows):
            if rows[r][c] != 0:
                pr = r
                break
        if pr is None:
            continue
        rows[piv_r], rows[pr] = rows[pr], rows[piv_r]
        inv = ONE / rows[piv_r][c]
        if inv != 1:
            rows[piv_r] = [x * inv for x in rows[piv_r]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            f = rows[r][c]
            if f == 0:
                continue
            prow = rows[piv_r]
            rrow = rows[r]
            for j in range(c, n_cols):
                if prow[j] != 0:
                    rrow[j] -= f * prow[j]
        pivots.append(c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return Matrix._raw(n_rows, n_cols, tuple(tuple(r) for r in rows)), tuple(pivots)


def solve_linear(a: Matrix, b: Matrix):
    """Some exact solution x of a*x = b, or None when inconsistent.

    b may have several columns; free variables are set to zero, so the
    particular solution is deterministic.
    """
    if a.rows != b.rows:
        raise ValueError(f"solve_linear: a has {a.rows} rows but b has {b.rows}")
    red, pivots = rref(a.hstack(b))
    n = a.cols
    # A pivot in the augmented block means an inconsistent row.
    for c in pivots:
        if c >= n:
            return None
    out = [[ZERO] * b.cols for _ in range(n)]
    for r, c in enumerate(pivots):
        row = red.data[r]
        out[c] = list(row[n : n + b.cols])
    return Matrix._raw(n, b.cols, tuple(tuple(r) for r in out))


def kernel_basis(a: Matrix):
    """Canonical basis of {x : a*x = 0} as a list of column vectors.

    Uses the RREF free-variable convention: one vector per free column,
    carrying 1 there and the negated pivot-row coefficients above.
    """
    red, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * a.cols
        v[free] = ONE
        for r, c in enumerate(pivots):
            v[c] = -red[r, free]
        basis.append(Matrix.column(v))
    return basis


def column_space_basis(a: Matrix):
    """Canonical basis of the column space: RREF rows of the transpose."""
    red, pivots = rref(a.transpose())
    return [Matrix.column(red.row(i)) for i in range(len(pivots))]


def span_basis(vectors, dim: int):
    """Canonical (RREF-row) basis of the span of the given column vectors."""
    if not vectors:
        return []
    stacked = Matrix.from_rows([[v[i, 0] for i in range(dim)] for v in vectors])
    red, pivots = rref(stacked)
    return [Matrix.column(red.row(i)) for i in range(len(pivots))]


def in_span(vectors, v: Matrix) -> bool:
    """Whether column vector v lies in the span of the given columns."""
    if not vectors:
        return v.is_zero()
    return solve_linear(hstack_all(vectors), v) is not None


def coords_in_basis(basis, v: Matrix) -> Matrix:
    """Coordinates of v in the given (independent) column basis."""
    x = solve_linear(hstack_all(basis), v)
    if x is None:
        raise ValueError("vector not in span of basis")
    return x


def min_poly(m: Matrix):
    """Monic minimal polynomial of a square matrix, ascending coefficients.

    Returned as [c0, c1, ..., 1] with c0 + c1*x + ... + x^d = 0 at m.
    """
    if m.rows != m.cols:
        raise ValueError("minimal polynomial of non-square matrix")
    n = m.rows
    if n == 0:
        return [ONE]
    flat = []
    power = Matrix.identity(n)
    while True:
        flat.append([power[i, j] for i in range(n) for j in range(n)])
        # Look for the first linear dependence among I, m, m^2, ...
        stacked = Matrix.from_rows(flat).transpose()
        ker = kernel_basis(stacked)
        dep = None
        for v in ker:
            if v[len(flat) - 1, 0] != 0:
                dep = v
                break
        if dep is not None:
            lead = dep[len(flat) - 1, 0]
            return [dep[i, 0] / lead for i in range(len(flat))]
        power = power * m


def poly_eval_matrix(coeffs, m: Matrix) -> Matrix:
    """Evaluate an ascending-coefficient polynomial at a square matrix."""
    n = m.rows
    acc = Matrix.zero(n, n)
    power = Matrix.identity(n)
    for i, c in enumerate(coeffs):
        if c != 0:
            acc = acc + power.scale(c)
        if i + 1 < len(coeffs):
            power = power * m
    return acc


def _divisors(n: int, cap: int = 1_000_000):
    """Positive divisors of |n|, or None when |n| is too big to factor here."""
    n = abs(n)
    if n == 0:
        return None
    if n > cap * cap:
        return None
    divs = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            divs.add(d)
            divs.add(n // d)
        d += 1
        if d > cap:
            return None
    return sorted(divs)


def rational_roots(coeffs):
    """Rational roots (with multiplicity) of an ascending-coefficient poly.

    Returns (roots, remainder_degree) where remainder_degree is the degree
    left after dividing out every rational root found.  The search uses the
    rational root theorem on the integer-cleared polynomial; a None return
    from the divisor enumeration degrades to "no roots found", which
    callers must treat as a loud unsupported case, never as certainty.
    """
    coeffs = [QQ(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    roots = []
    # Strip zero roots first.
    while len(coeffs) > 1 and coeffs[0] == 0:
        roots.append(ZERO)
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots, 0
    # Clear denominators to integers.
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // math.gcd(denom, int(c.denominator))
    ints = [int(c * denom) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]

    def eval_at(poly, x):
        acc = ZERO
        for c in reversed(poly):
            acc = acc * x + c
        return acc

    def deflate(poly, x):
        # Synthetic division by (t - x); poly ascending.
        desc = list(reversed(poly))
        out = [desc[0]]
        for c in desc[1:]:
            out.append(c + out[-1] * x)
        assert out[-1] == 0
        return list(reversed(out[:-1]))

    poly = [QQ(v) for v in ints]
    p_divs = _divisors(int(poly[0].numerator) if poly[0] != 0 else 0)
    q_divs = _divisors(int(poly[-1].numerator))
    if p_divs is None or q_divs is None:
        return roots, len(poly) - 1
    candidates = []
    for p in p_divs:
        for q in q_divs:
            if math.gcd(p, q) == 1:
                candidates.append(QQ(p, q))
                candidates.append(QQ(-p, q))
    candidates = sorted(set(candidates))
    for cand in candidates:
        while len(poly) > 1 and eval_at(poly, cand) == 0:
            roots.append(cand)
            poly = deflate(poly, cand)
            if len(poly) > 1 and poly[0] == 0:
                # New zero roots can appear after deflation.
                while len(poly) > 1 and poly[0] == 0:
                    roots.append(ZERO)
                    poly = poly[1:]
    return roots, len(poly) - 1

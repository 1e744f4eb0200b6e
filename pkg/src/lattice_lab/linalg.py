"""Exact integer/rational matrix helpers used across the package.

Everything here is pure Python over arbitrary-precision ints and
fractions.Fraction; no floating point anywhere.
"""

from fractions import Fraction

from .errors import ParameterError, RankDeficientError

IntRow = list[int]
IntMatrix = list[IntRow]


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def gram_matrix(rows: IntMatrix) -> IntMatrix:
    n = len(rows)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = dot(rows[i], rows[j])
            g[i][j] = s
            g[j][i] = s
    return g


def gram_det(rows: IntMatrix) -> int:
    """det(B * B^T) via fraction-free (Bareiss) elimination on the Gram matrix.

    The Gram matrix of full-rank rows is positive definite, so every pivot
    is positive and no row pivoting is needed. A nonpositive pivot means the
    rows are dependent.
    """
    m = [row[:] for row in gram_matrix(rows)]
    n = len(m)
    prev = 1
    for k in range(n - 1):
        pivot = m[k][k]
        if pivot <= 0:
            raise RankDeficientError(f"rows are linearly dependent (pivot {k})")
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - mik * mk[j]) // prev
        prev = pivot
    det = m[n - 1][n - 1]
    if det <= 0:
        raise RankDeficientError(f"rows are linearly dependent (pivot {n - 1})")
    return det


def is_full_rank(rows: IntMatrix) -> bool:
    try:
        gram_det(rows)
    except RankDeficientError:
        return False
    return True


def det_signed(m: IntMatrix) -> int:
    """Signed determinant of a square integer matrix (Bareiss with pivoting)."""
    a = [row[:] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ParameterError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            ai, ak = a[i], a[k]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * pivot - aik * ak[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


class FractionLU:
    """Exact LU factorization of a nonsingular rational matrix, for solving
    several right-hand sides against the same matrix."""

    def __init__(self, matrix):
        n = len(matrix)
        a = [[Fraction(x) for x in row] for row in matrix]
        perm = list(range(n))
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                raise RankDeficientError("singular matrix in exact LU")
            if p != k:
                a[k], a[p] = a[p], a[k]
                perm[k], perm[p] = perm[p], perm[k]
            inv = 1 / a[k][k]
            for i in range(k + 1, n):
                f = a[i][k] * inv
                a[i][k] = f
                if f:
                    for j in range(k + 1, n):
                        a[i][j] -= f * a[k][j]
        self.n = n
        self.a = a
        self.perm = perm

    def solve(self, rhs) -> list[Fraction]:
        n = self.n
        y = [Fraction(rhs[p]) for p in self.perm]
        for i in range(1, n):
            ai = self.a[i]
            y[i] -= sum(ai[j] * y[j] for j in range(i) if ai[j])
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            ai = self.a[i]
            x[i] = (y[i] - sum(ai[j] * x[j] for j in range(i + 1, n))) / ai[i]
        return x


def coefficients_in_rows(rows: IntMatrix, target) -> list[Fraction] | None:
    """Rational x with x * rows == target, or None when target is outside
    the row span. Uses the Gram system, then verifies the candidate."""
    lu = FractionLU(gram_matrix(rows))
    x = lu.solve([dot(target, r) for r in rows])
    m = len(rows[0])
    for j in range(m):
        if sum(x[i] * rows[i][j] for i in range(len(rows))) != target[j]:
            return None
    return x


def complete_to_unimodular(x: IntRow) -> IntMatrix:
    """A square integer matrix U with det +-1 whose first row is x.

    Requires gcd(x) == 1. Built by reducing x to a unit vector with
    elementary column operations while mirroring the inverse operations
    on an identity matrix.
    """
    n = len(x)
    v = list(x)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def axpy_row(dst, src, q):
        row_d, row_s = u[dst], u[src]
        for j in range(n):
            row_d[j] += q * row_s[j]

    while True:
        nz = [i for i in range(n) if v[i] != 0]
        if not nz:
            raise ParameterError("zero vector cannot start a basis")
        if len(nz) == 1:
            p = nz[0]
            break
        p = min(nz, key=lambda i: abs(v[i]))
        for i in nz:
            if i == p:
                continue
            q = v[i] // v[p]
            v[i] -= q * v[p]
            # column op v[i] -= q*v[p] mirrors as row op u[p] += q*u[i]
            axpy_row(p, i, q)
    if abs(v[p]) != 1:
        raise ParameterError("vector is not primitive (gcd != 1)")
    if p != 0:
        v[0], v[p] = v[p], v[0]
        u[0], u[p] = u[p], u[0]
    if v[0] == -1:
        v[0] = 1
        u[0] = [-a for a in u[0]]
    assert u[0] == list(x)
    return u


def row_lattice_basis(generators: IntMatrix, dim: int) -> IntMatrix:
    """Triangular basis of the integer row lattice spanned by `generators`.

    xgcd-style row reduction; the result has one pivot per column and
    exactly `dim` rows when the generators have full column rank.
    """
    pivots: dict[int, IntRow] = {}
    for gen in generators:
        v = list(gen)
        col = 0
        while True:
            while col < dim and v[col] == 0:
                col += 1
            if col == dim:
                break
            if col not in pivots:
                pivots[col] = v
                break
            row = pivots[col]
            a, b = row[col], v[col]
            if b % a == 0:
                q = b // a
                for j in range(col, dim):
                    v[j] -= q * row[j]
            else:
                g, s, t = xgcd(a, b)
                ag, bg = a // g, b // g
                for j in range(col, dim):
                    rj, vj = row[j], v[j]
                    row[j] = s * rj + t * vj
                    v[j] = -bg * rj + ag * vj
    if len(pivots) != dim:
        raise RankDeficientError("generators do not span the full space")
    return [pivots[c] for c in sorted(pivots)]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b), g matching sign of math.gcd."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def solve_mod_prime(a: IntMatrix, rhs: IntRow, q: int) -> IntRow | None:
    """One solution x of A x == rhs (mod q) for prime q, or None if
    inconsistent. Free variables are set to zero."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[a[i][j] % q for j in range(cols)] + [rhs[i] % q] for i in range(rows)]
    pivot_cols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] % q != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols] % q != 0:
            return None
    x = [0] * cols
    for i, c in enumerate(pivot_cols):
        x[c] = m[i][cols] % q
    return x


def centered_mod(a: int, q: int) -> int:
    """Representative of a mod q in (-q/2, q/2]."""
    r = a % q
    if 2 * r > q:
        r -= q
    return r

"""Exact integer and rational matrix routines.

Everything here is plain lists-of-lists over int or Fraction. The Smith
normal form returns the transforms (U, D, V) with U*M*V = D, which the
quotient-group and kernel computations need; the pivot rule is deterministic
(smallest absolute value, ties row-major) so outputs are reproducible.
"""

from fractions import Fraction


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a, b):
    if not a or not b:
        return []
    n, k, p = len(a), len(b), len(b[0])
    assert all(len(row) == k for row in a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(p)]
            for i in range(n)]


def mat_vec(m, v):
    assert all(len(row) == len(v) for row in m)
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def determinant(m):
    """Bareiss fraction-free elimination; exact for integer input."""
    n = len(m)
    if n == 0:
        return 1
    assert all(len(row) == n for row in m)
    a = [list(row) for row in m]
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m):
    """Gauss-Jordan inverse over Fraction; None if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def solve_unique(a, b):
    """Unique exact solution of a (possibly overdetermined) consistent system.

    Returns the Fraction vector x with a*x = b, or raises ValueError if the
    system is inconsistent or underdetermined.
    """
    rows = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    ncols = len(a[0]) if a else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    if rank < ncols:
        raise ValueError("underdetermined system")
    for r in range(rank, len(rows)):
        if rows[r][ncols] != 0:
            raise ValueError("inconsistent system")
    # after full reduction the first ncols rows are a permuted identity
    sol = [Fraction(0)] * ncols
    for r in range(rank):
        col = next(c for c in range(ncols) if rows[r][c] != 0)
        sol[col] = rows[r][ncols]
    return sol


def _min_pivot(a, t, nr, nc):
    best = None
    for i in range(t, nr):
        for j in range(t, nc):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _swap_rows(a, u, i, j):
    if i != j:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]


def _swap_cols(a, v, i, j):
    if i != j:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]


def _row_sub(a, u, dst, src, q):
    if q:
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]


def _col_sub(a, v, dst, src, q):
    if q:
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]


def _clear_position(a, u, v, t, nr, nc):
    """Euclid at diagonal position t until row t and column t are clean."""
    while True:
        piv = _min_pivot(a, t, nr, nc)
        if piv is None:
            return False
        _swap_rows(a, u, t, piv[0])
        _swap_cols(a, v, t, piv[1])
        p = a[t][t]
        for r in range(t + 1, nr):
            _row_sub(a, u, r, t, a[r][t] // p)
        if any(a[r][t] for r in range(t + 1, nr)):
            continue  # a remainder survived; it is smaller, re-pick the pivot
        for c in range(t + 1, nc):
            _col_sub(a, v, c, t, a[t][c] // p)
        if any(a[t][c] for c in range(t + 1, nc)):
            continue
        return True


def smith_normal_form(m):
    """U, D, V with U*M*V = D diagonal, d_i >= 0 and d_i | d_{i+1}.

    U and V are unimodular. Total function: works for any integer matrix
    including rectangular and zero ones.
    """
    nr = len(m)
    nc = len(m[0]) if nr else 0
    assert all(len(row) == nc for row in m)
    a = [[int(x) for x in row] for row in m]
    u = identity_matrix(nr)
    v = identity_matrix(nc)
    k = min(nr, nc)
    for t in range(k):
        if not _clear_position(a, u, v, t, nr, nc):
            break
    # enforce the divisibility chain; each fix only touches a 2x2 block
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if x == 0 and y != 0:
                _swap_rows(a, u, i, i + 1)
                _swap_cols(a, v, i, i + 1)
                changed = True
            elif x != 0 and y % x != 0:
                _col_sub(a, v, i, i + 1, -1)  # col_i += col_{i+1}
                _clear_position(a, u, v, i, nr, nc)
                changed = True
    for i in range(k):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return u, a, v


def diagonal(m):
    return [m[i][i] for i in range(min(len(m), len(m[0]) if m else 0))]


def integer_kernel_basis(m):
    """Basis of the integer kernel of m, as a list of integer vectors.

    Columns of V at positions past the rank span ker(D), hence V maps them
    onto a (saturated) basis of ker(m).
    """
    _, d, v = smith_normal_form(m)
    nc = len(m[0]) if m else 0
    diag = diagonal(d)
    free = [j for j in range(nc) if j >= len(diag) or diag[j] == 0]
    cols = transpose(v)
    return [list(cols[j]) for j in free]

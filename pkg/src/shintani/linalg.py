"""Exact linear algebra over Q and Z: determinants, solves, HNF and SNF.

Matrices are lists of row lists holding Fractions or ints.  Sizes here are
tiny (d <= 3 for field arithmetic, a handful of rows for group
presentations), so plain fraction-free-ish Gaussian elimination is fine.
"""

from __future__ import annotations

from fractions import Fraction


def mat_copy(a):
    return [list(row) for row in a]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def det(a):
    """Exact determinant by fraction Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[piv], m[col] = m[col], m[piv]
            sign = -sign
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def solve(a, b):
    """Solve a x = b exactly (a square, invertible); returns list of Fractions."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[piv], m[col] = m[col], m[piv]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def inverse(a):
    n = len(a)
    cols = [solve(a, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return transpose(cols)


def rank(a):
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[piv], m[r] = m[r], m[piv]
        for i in range(rows):
            if i != r and m[i][col]:
                f = m[i][col] / m[r][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def solve_general(a, b):
    """One solution x of a x = b over Q, or None if inconsistent.

    a is n x m (any shape).  Returns a list of length m.
    """
    n, mcols = len(a), len(a[0])
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for col in range(mcols):
        piv = next((i for i in range(r, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[piv], m[r] = m[r], m[piv]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(n):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, n):
        if m[i][mcols] != 0:
            return None
    x = [Fraction(0)] * mcols
    for i, col in enumerate(pivots):
        x[col] = m[i][mcols]
    return x


# --- integer matrices ---

def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def row_hnf(a):
    """Row-style Hermite normal form of an integer matrix.

    Returns H with the same row span as a: nonzero rows first, pivots
    positive, entries above each pivot reduced into [0, pivot).
    """
    m = [list(row) for row in a]
    if not m:
        return m
    rows, cols = len(m), len(m[0])
    r = 0
    for col in range(cols):
        # clear column below r by gcd steps
        piv = None
        for i in range(r, rows):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            while m[i][col] != 0:
                q = m[r][col] // m[i][col]
                m[r] = [x - q * y for x, y in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][col] < 0:
            m[r] = [-x for x in m[r]]
        for i in range(r):
            q = m[i][col] // m[r][col]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return [row for row in m[:r] if any(row)] + [row for row in m[r:] if any(row)]


def column_hnf(a):
    """Column-style HNF: returns matrix whose columns span the same lattice."""
    return transpose(row_hnf(transpose(a)))


def smith_normal_form(a):
    """Smith normal form with transforms: returns (u, s, v) with u a v = s.

    u, v unimodular; s diagonal with s[i][i] | s[i+1][i+1].
    """
    s = [list(row) for row in a]
    n = len(s)
    m = len(s[0]) if n else 0
    u = identity(n)
    v = identity(m)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j
        s[i] = [x + q * y for x, y in zip(s[i], s[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, q):
        for row in s:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    t = 0
    while t < min(n, m):
        # find nonzero pivot
        piv = None
        for i in range(t, n):
            for j in range(t, m):
                if s[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, n):
                if s[i][t] != 0:
                    done = False
                    if s[i][t] % s[t][t] == 0:
                        add_row(i, t, -(s[i][t] // s[t][t]))
                    else:
                        g, x, y = _xgcd(s[t][t], s[i][t])
                        # replace row t by x*row_t + y*row_i (gcd row)
                        a_, b_ = s[t][t] // g, s[i][t] // g
                        rt = [x * p + y * q for p, q in zip(s[t], s[i])]
                        ri = [-b_ * p + a_ * q for p, q in zip(s[t], s[i])]
                        s[t], s[i] = rt, ri
                        ut = [x * p + y * q for p, q in zip(u[t], u[i])]
                        ui = [-b_ * p + a_ * q for p, q in zip(u[t], u[i])]
                        u[t], u[i] = ut, ui
            for j in range(t + 1, m):
                if s[t][j] != 0:
                    done = False
                    if s[t][j] % s[t][t] == 0:
                        add_col(j, t, -(s[t][j] // s[t][t]))
                    else:
                        g, x, y = _xgcd(s[t][t], s[t][j])
                        a_, b_ = s[t][t] // g, s[t][j] // g
                        for row in (s, v):
                            for rr in row:
                                ct = x * rr[t] + y * rr[j]
                                cj = -b_ * rr[t] + a_ * rr[j]
                                rr[t], rr[j] = ct, cj
            if done:
                break
        t += 1
    # enforce divisibility chain
    t = min(n, m)
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            if s[i][i] and s[i + 1][i + 1] % s[i][i] != 0:
                add_col(i, i + 1, 1)
                changed = True
                # re-clear the 2x2 block
                g, x, y = _xgcd(s[i][i], s[i + 1][i])
                a_, b_ = s[i][i] // g, s[i + 1][i] // g
                rt = [x * p + y * q for p, q in zip(s[i], s[i + 1])]
                ri = [-b_ * p + a_ * q for p, q in zip(s[i], s[i + 1])]
                s[i], s[i + 1] = rt, ri
                ut = [x * p + y * q for p, q in zip(u[i], u[i + 1])]
                ui = [-b_ * p + a_ * q for p, q in zip(u[i], u[i + 1])]
                u[i], u[i + 1] = ut, ui
                for j in range(i + 1, m):
                    if s[i][j] != 0:
                        add_col(j, i, -(s[i][j] // s[i][i]))
            elif s[i][i] == 0 and s[i + 1][i + 1] != 0:
                swap_rows(i, i + 1)
                swap_cols(i, i + 1)
                changed = True
    for i in range(t):
        if s[i][i] < 0:
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
    return u, s, v


def solve_integer(a, b):
    """One integer solution x of a x = b, or None.

    a is an n x m integer matrix, b an integer vector of length n.
    """
    u, s, v = smith_normal_form(a)
    n, m = len(a), len(a[0])
    c = mat_vec(u, b)
    y = [0] * m
    for i in range(min(n, m)):
        d = s[i][i]
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    for i in range(min(n, m), n):
        if c[i] != 0:
            return None
    return mat_vec(v, y)


def lattice_dual_basis(rows):
    """Basis of {t : r . t in Z for every r in the Z-span of rows}.

    rows is a list of rational vectors spanning Q^m; returns an m x m
    rational matrix whose columns are a basis of the dual lattice.
    """
    m = len(rows[0])
    den = 1
    for row in rows:
        for x in row:
            den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
    ints = [[int(Fraction(x) * den) for x in row] for row in rows]
    h = row_hnf(ints)
    if len(h) != m:
        raise ValueError("rows do not span full rank")
    basis_rows = [[Fraction(x, den) for x in row] for row in h[:m]]
    return inverse(basis_rows)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)

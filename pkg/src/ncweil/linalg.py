"""Dense exact linear algebra over any field type with +, -, *, /, bool.

Used with Fraction entries (preset construction) and GaussRational
entries (window solvers).  Matrices are lists of lists; nothing here
mutates its inputs.
"""

from __future__ import annotations


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns (rref_rows, pivot_columns).  Zero rows are dropped.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    if ncols is None:
        ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, len(m)):
            if m[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[0])


def kernel_basis(rows, ncols, one, zero):
    """Basis of the right kernel of the matrix (rows x ncols)."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for rix, pc in enumerate(pivots):
            v[pc] = -red[rix][fc]
        basis.append(v)
    return basis


def solve(rows, rhs, ncols):
    """One solution x of A x = b, or None if inconsistent.

    ``rows`` is A (list of rows), ``rhs`` the right-hand side list.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    zero = None
    for r in rows:
        for x in r:
            zero = x - x
            break
        if zero is not None:
            break
    if zero is None:
        for b in rhs:
            zero = b - b
            break
    x = [zero] * ncols
    for rix, pc in enumerate(pivots):
        x[pc] = red[rix][ncols]
    return x


def in_row_span(red_rows, pivots, vec):
    """Whether vec lies in the row space given by an existing rref."""
    v = list(vec)
    for rix, pc in enumerate(pivots):
        if v[pc]:
            f = v[pc]
            v = [x - f * y for x, y in zip(v, red_rows[rix])]
    return not any(v)


def span_equal(rows_a, rows_b, ncols):
    ra, pa = rref(rows_a, ncols)
    rb, pb = rref(rows_b, ncols)
    return ra == rb and pa == pb

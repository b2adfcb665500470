"""Exact Gaussian elimination over a NumberField."""


def row_echelon(rows, field):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    A = [[field.element(x) for x in r] for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(A)):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                Ar = A[r]
                A[i] = [x - f * y if y else x for x, y in zip(A[i], Ar)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def nullspace(rows, field, ncols=None):
    """Basis of {v : rows * v = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = row_echelon(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """A solution of rows * v = rhs, or None if the system is inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    R, pivots = row_echelon(aug, field)
    if ncols in pivots:
        return None
    v = [field.zero] * ncols
    for i, p in enumerate(pivots):
        v[p] = R[i][ncols]
    return v


def rank(rows, field):
    return len(row_echelon(rows, field)[1]) if rows else 0

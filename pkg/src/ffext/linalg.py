"""Dense linear algebra modulo a prime, on plain lists of ints."""


def rref(rows, m):
    # returns (reduced rows, pivot column list); rows are copied
    a = [[x % m for x in row] for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], m - 2, m) if m > 2 else a[r][c]
        a[r] = [(x * inv) % m for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % m for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(rows, ncols, m):
    """Basis of {v : A v = 0} over F_m, one vector per free column.

    Deterministic: vectors ordered by free column index, each with a 1
    in its free coordinate.
    """
    if not rows:
        basis = []
        for j in range(ncols):
            v = [0] * ncols
            v[j] = 1
            basis.append(v)
        return basis
    red, pivots = rref(rows, m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][fc]) % m
        basis.append(v)
    return basis


def left_nullspace(rows, m):
    # {v : v A = 0}, i.e. the nullspace of the transpose
    nrows = len(rows)
    if nrows == 0:
        return []
    ncols = len(rows[0])
    tr = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    return nullspace(tr, nrows, m)


def solve(rows, rhs, m):
    """One solution of A x = rhs over F_m, or None."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(nrows)]
    red, pivots = rref(aug, m)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x

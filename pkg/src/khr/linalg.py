"""Sparse exact linear algebra over Q (gmpy2 rationals).

Matrices are lists of sparse rows; a row is a dict mapping column index to a
nonzero mpq.  Everything here is plain Gaussian elimination -- the matrices
arising from graded hom-space and cohomology computations are sparse and of
moderate size, and exactness is non-negotiable.
"""

from __future__ import annotations

from gmpy2 import mpq

Row = dict


def rref(rows: list[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns).

    >>> rows, pivots = rref([{0: mpq(2), 1: mpq(4)}, {0: mpq(1), 1: mpq(2)}])
    >>> rows, pivots
    ([{0: mpq(1,1), 1: mpq(2,1)}], [0])
    """
    work = [dict(r) for r in rows if r]
    done: list[Row] = []
    pivots: list[int] = []
    while work:
        # pick the row whose leading column is smallest
        best = min(range(len(work)), key=lambda i: min(work[i]))
        row = work.pop(best)
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for other in (work, done):
            for i, r in enumerate(other):
                coef = r.get(p)
                if coef is None:
                    continue
                new = dict(r)
                for c, v in row.items():
                    val = new.get(c, mpq(0)) - coef * v
                    if val == 0:
                        new.pop(c, None)
                    else:
                        new[c] = val
                other[i] = new
        work = [r for r in work if r]
        done.append(row)
        pivots.append(p)
    order = sorted(range(len(done)), key=lambda i: pivots[i])
    return [done[i] for i in order], sorted(pivots)


def rank(rows: list[Row]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: list[Row], ncols: int) -> list[Row]:
    """Basis of the right kernel of the matrix, as sparse vectors.

    >>> nullspace([{0: mpq(1), 1: mpq(1)}], 2)
    [{1: mpq(1,1), 0: mpq(-1,1)}]
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = {f: mpq(1)}
        for row, p in zip(reduced, pivots):
            coef = row.get(f)
            if coef:
                vec[p] = -coef
        basis.append(vec)
    return basis


def solve(rows: list[Row], rhs: list, ncols: int) -> Row | None:
    """One solution of A x = b, or None.  ``rhs`` is a dense list of mpq."""
    augmented = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b != 0:
            r[ncols] = mpq(b)
        augmented.append(r)
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    solution: Row = {}
    for row, p in zip(reduced, pivots):
        val = row.get(ncols)
        if val:
            solution[p] = val  # free variables set to 0
    return solution


def invert_dense(m: list[list]) -> list[list] | None:
    """Inverse of a dense square matrix over mpq, or None if singular."""
    n = len(m)
    aug = [[mpq(v) for v in row] + [mpq(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                coef = aug[r][col]
                aug[r] = [a - coef * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]

"""Dense linear algebra over a prime field GF(p).

Matrices are lists of row lists of ints in [0, p).  Everything here is
small and exact; no pivot strategy beyond first nonzero.
"""

from __future__ import annotations


def rref(rows, p):
    """Reduced row echelon form; returns (reduced rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows, p) -> int:
    if not rows:
        return 0
    return len(rref(rows, p)[0])


def solve(rows, rhs, p):
    """One solution x of rows^T... no: solve A x = rhs; None if unsolvable."""
    if not rows:
        return None if any(rhs) else []
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, p)
    n = len(rows[0])
    if n in pivots:
        return None
    x = [0] * n
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return x


def nullspace(rows, p):
    """Basis of the right kernel of A."""
    if not rows:
        return []
    n = len(rows[0])
    red, pivots = rref(rows, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, c in zip(red, pivots):
            v[c] = -row[f] % p
        basis.append(v)
    return basis


class SpanGF:
    """Incremental row space over GF(p) with reduction of new vectors."""

    def __init__(self, n, p):
        self.n = n
        self.p = p
        self.pivots = {}  # column -> reduced row with leading 1 there

    def reduce(self, vec):
        v = list(vec)
        p = self.p
        for c in range(self.n):
            if v[c] and c in self.pivots:
                f = v[c]
                row = self.pivots[c]
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert vec; True if it enlarged the span."""
        v = self.reduce(vec)
        c = next((i for i in range(self.n) if v[i]), None)
        if c is None:
            return False
        inv = pow(v[c], -1, self.p)
        v = [x * inv % self.p for x in v]
        for c2, row in self.pivots.items():
            if row[c]:
                f = row[c]
                self.pivots[c2] = [(x - f * y) % self.p
                                   for x, y in zip(row, v)]
        self.pivots[c] = v
        return True

    @property
    def dim(self) -> int:
        return len(self.pivots)

"""Independent count of disc triangulations with up to two orbifold points.

Root-edge recursion over regions (n boundary sides, r labeled orbifold
points inside).  The triangle on the root side is ordinary with an apex at
any region vertex (loops cut off monogon sub-regions), a digon around one
orbifold point with the pending arc based at either digon vertex, or the
twice-orbifolded monogon when the region is a monogon holding both points.

Checks: r=0 gives Catalan numbers; r=1 gives central binomial coefficients,
the cluster counts of the B/C series.
"""

from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def t(n: int, r: int) -> int:
    if n < 1 or r < 0:
        return 0
    if n == 1:
        # A monogon region: only the twice-orbifolded piece fits, with the
        # two labeled pending arcs in either cyclic order.
        return 2 if r == 2 else 0
    if n == 2 and r == 0:
        # Degenerate empty bigon: the cutting arc coincides with the far
        # side, contributing the empty product in the recursion.
        return 1
    total = 0
    # Ordinary triangle on the root, apex at vertex j (j = n means the
    # root's own start vertex); orbifold points split between both parts.
    for j in range(1, n + 1):
        for r1 in range(r + 1):
            # Evaluate the smaller part first so the zero of an empty or
            # lightly filled monogon short-circuits the self-reference.
            if j <= n - j + 1:
                f = t(j, r1)
                term = f and f * t(n - j + 1, r - r1)
            else:
                f = t(n - j + 1, r - r1)
                term = f and f * t(j, r1)
            total += comb(r, r1) * term
    # Digon around one orbifold point, pending based at either vertex.
    total += 2 * r * t(n, r - 1)
    return total


if __name__ == "__main__":
    assert [t(m, 0) for m in range(3, 8)] == [1, 2, 5, 14, 42]
    assert [t(m, 1) for m in range(2, 6)] == [comb(2 * (m - 1), m - 1)
                                              for m in range(2, 6)]
    for m in range(2, 8):
        print(m, [t(m, o) for o in range(3)])

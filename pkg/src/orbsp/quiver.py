"""Weighted quivers of a triangulation and skew-symmetrizable mutation.

Four quivers are attached to a triangulation: the base quiver with one
arrow for each ordered pair of consecutive arc sides inside a triangle; the
weighted quiver which doubles the arrow between two equal-weight pending
arcs of a monogon; the subquiver spanned by arcs of weight at least 2; and
its extension by one epsilon arrow per weight-1 pending arc.

Arrow ids are stable: (triangle index, slot, copy) for triangle-induced
arrows and ("eps", k) for epsilon arrows, so cochains survive rebuilds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulation import Triangulation, is_arc


class NotTwoAcyclic(ValueError):
    """The quiver has a 2-cycle and no matrix counterpart."""


@dataclass(frozen=True)
class Arrow:
    aid: tuple
    tail: int
    head: int
    kind: str  # plain | double | epsilon


@dataclass(frozen=True)
class WeightedQuiver:
    vertices: tuple[int, ...]
    weights: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def weight(self, v: int) -> int:
        return self.weights[self.vertices.index(v)]

    def arrows_at(self, v: int):
        return [a for a in self.arrows if v in (a.tail, a.head)]

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"arc": v, "weight": w}
                for v, w in zip(self.vertices, self.weights)
            ],
            "arrows": [
                {"id": list(map(str, a.aid)), "tail": a.tail, "head": a.head,
                 "kind": a.kind}
                for a in self.arrows
            ],
        }


def triangle_arrows(tri: Triangulation, ti: int):
    """Arrows induced by one triangle: consecutive arc sides, no doubles."""
    t = tri.triangles[ti]
    triple = t.cyclic()
    out = []
    for i in range(3):
        s, _ = triple[i]
        s2, _ = triple[(i + 1) % 3]
        if is_arc(s) and is_arc(s2):
            out.append(Arrow((ti, i, 0), s[1], s2[1], "plain"))
    return out


def build_quivers(tri: Triangulation) -> dict[str, WeightedQuiver]:
    """The four quivers qbar, q, qprime, qdoubleprime of a triangulation."""
    from .triangulation import TwiceOrbifolded

    verts = tuple(sorted(tri.arc_weights))
    wts = tuple(tri.arc_weights[v] for v in verts)
    base = []
    for ti in range(len(tri.triangles)):
        base.extend(triangle_arrows(tri, ti))
    qbar = WeightedQuiver(verts, wts, tuple(base))

    with_doubles = list(base)
    for ti, t in enumerate(tri.triangles):
        if isinstance(t, TwiceOrbifolded):
            w0 = tri.arc_weights[t.pending[0]]
            w1 = tri.arc_weights[t.pending[1]]
            if w0 == w1:
                with_doubles.append(
                    Arrow((ti, 1, 1), t.pending[0], t.pending[1], "double")
                )
    q = WeightedQuiver(verts, wts, tuple(sorted(with_doubles, key=lambda a: a.aid)))

    heavy = tuple(v for v in verts if tri.arc_weights[v] != 1)
    hw = tuple(tri.arc_weights[v] for v in heavy)
    prime_arrows = tuple(
        a for a in base if a.tail in heavy and a.head in heavy
    )
    qprime = WeightedQuiver(heavy, hw, prime_arrows)

    eps = []
    for k in verts:
        if tri.arc_weights[k] == 1:
            comp = companion_arrow(tri, k)
            if comp is not None:
                eps.append(Arrow(("eps", k), comp.head, comp.tail, "epsilon"))
            else:
                v = _lone_heavy_vertex(tri, k)
                if v is not None:
                    eps.append(Arrow(("eps", k), v, v, "epsilon"))
    qpp = WeightedQuiver(
        heavy, hw, tuple(sorted(prime_arrows + tuple(eps), key=lambda a: str(a.aid)))
    )
    return {"qbar": qbar, "q": q, "qprime": qprime, "qdoubleprime": qpp}


def companion_arrow(tri: Triangulation, k: int):
    """The weight>=2 arrow induced by the triangle holding pending arc k.

    This is the arrow the epsilon arrow of k reverses; None when the
    triangle meets fewer than two weight>=2 arcs.
    """
    ti, _ = tri.arc_slots(k)[0]
    for a in triangle_arrows(tri, ti):
        if k not in (a.tail, a.head):
            if tri.arc_weights[a.tail] != 1 and tri.arc_weights[a.head] != 1:
                return a
    return None


def _lone_heavy_vertex(tri: Triangulation, k: int):
    ti, _ = tri.arc_slots(k)[0]
    cands = {
        s[1]
        for s, _ in tri.triangles[ti].cyclic()
        if is_arc(s) and s[1] != k and tri.arc_weights[s[1]] != 1
    }
    if len(cands) == 1:
        return cands.pop()
    return None


def to_matrix(wq: WeightedQuiver):
    """Matrix pair (B, D): b[x][y] counts arrows y->x scaled by weight ratio.

    b_xy = (#arrows y->x - #arrows x->y) * d_y / min(d_x, d_y), which makes
    diag(D) * B skew-symmetric and matches the bimodule dimension counts.
    """
    idx = {v: i for i, v in enumerate(wq.vertices)}
    n = len(wq.vertices)
    net = [[0] * n for _ in range(n)]
    for a in wq.arrows:
        if a.tail == a.head:
            raise NotTwoAcyclic("loops have no matrix counterpart")
        net[idx[a.head]][idx[a.tail]] += 1
        net[idx[a.tail]][idx[a.head]] -= 1
    for i in range(n):
        for j in range(n):
            if i < j and net[i][j] != 0 and any(
                a.tail == wq.vertices[i] and a.head == wq.vertices[j]
                for a in wq.arrows
            ) and any(
                a.tail == wq.vertices[j] and a.head == wq.vertices[i]
                for a in wq.arrows
            ):
                raise NotTwoAcyclic("2-cycle between "
                                    f"{wq.vertices[i]} and {wq.vertices[j]}")
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if net[i][j]:
                d_i, d_j = wq.weights[i], wq.weights[j]
                B[i][j] = net[i][j] * d_j // min(d_i, d_j)
    return B, list(wq.weights)


def mutate_matrix(B, k: int):
    """Fomin-Zelevinsky matrix mutation at index k."""
    n = len(B)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -B[i][j]
            else:
                s = 1 if B[i][k] > 0 else -1
                out[i][j] = B[i][j] + s * max(0, B[i][k] * B[k][j])
    return out


def from_matrix(vertices, weights, B) -> WeightedQuiver:
    """Realize a skew-symmetrizable matrix as a weighted quiver."""
    arrows = []
    n = len(vertices)
    for i in range(n):
        for j in range(n):
            if B[i][j] > 0:
                d_i, d_j = weights[i], weights[j]
                mult = B[i][j] * min(d_i, d_j) // d_j
                for c in range(mult):
                    arrows.append(
                        Arrow(("m", vertices[j], vertices[i], c),
                              vertices[j], vertices[i], "plain")
                    )
    return WeightedQuiver(tuple(vertices), tuple(weights), tuple(arrows))


def mutate_weighted(wq: WeightedQuiver, k: int) -> WeightedQuiver:
    """Mutation of a weighted quiver at vertex k, weights unchanged."""
    B, D = to_matrix(wq)
    B2 = mutate_matrix(B, wq.vertices.index(k))
    return from_matrix(wq.vertices, wq.weights, B2)


def matrices_equal(wq1: WeightedQuiver, wq2: WeightedQuiver) -> bool:
    """Exact (B, D) equality over the shared vertex order."""
    if wq1.vertices != wq2.vertices:
        return False
    return to_matrix(wq1) == to_matrix(wq2)

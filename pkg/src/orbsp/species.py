"""Species and potentials of colored triangulations.

A colored triangulation (tau, xi) determines a species over a tower
F < L < E of finite fields: each arc carries the subfield of degree equal
to its weight, and the cocycle xi twists every arrow of the weighted quiver
by a Galois automorphism of the intersection field (the modulating
function).  The potential is the sum of one obvious cycle per interior
triangle, with a two-term sum for the twice-orbifolded monogon of weight
(1, 1) and a doubled first factor in weight (4, 4).

Twists are recorded as powers of rho, the generator of Gal(E/F); on the
intersection field L the restriction of rho is theta.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colored import ColoredTriangulation
from .f2complex import NotACocycle, build_complex, cohomology, mask_of
from .fields import FieldTower
from .pathalg import PathElement, SpeciesAlgebra, arrow, basis_keys
from .quiver import WeightedQuiver, build_quivers, to_matrix
from .triangulation import TwiceOrbifolded, Triangulation


def build_tower(p: int) -> FieldTower:
    return FieldTower.make(p)


@dataclass(frozen=True)
class SpeciesData:
    tri: Triangulation
    quiver: WeightedQuiver
    tower: FieldTower
    twists: dict  # arrow id -> power of rho

    def algebra(self) -> SpeciesAlgebra:
        weights = dict(zip(self.quiver.vertices, self.quiver.weights))
        arrows = {a.aid: (a.tail, a.head, self.twists[a.aid])
                  for a in self.quiver.arrows}
        return SpeciesAlgebra(self.tower, weights, arrows)

    def bimodule_dim(self, aid) -> int:
        """F-dimension of the bimodule attached to one arrow."""
        a = next(x for x in self.quiver.arrows if x.aid == aid)
        dt, dh = self.quiver.weight(a.tail), self.quiver.weight(a.head)
        return dt * dh // min(dt, dh)


def _double_pairs(tri: Triangulation):
    """(delta0, delta1) arrow ids of weight-(4,4) monogon doubles."""
    out = []
    for ti, t in enumerate(tri.triangles):
        if isinstance(t, TwiceOrbifolded):
            if tri.arc_weights[t.pending[0]] == 4 == tri.arc_weights[t.pending[1]]:
                out.append(((ti, 1, 0), (ti, 1, 1)))
    return out


def modulating_function(ct: ColoredTriangulation, tower: FieldTower) -> dict:
    """Per-arrow twist as a power of rho, from the cocycle xi."""
    tri = ct.tri
    cx = build_complex(tri, hat=False)
    if not cohomology(cx).is_cocycle(mask_of(cx, ct.xi)):
        raise NotACocycle("the coloring is not a 1-cocycle")
    quiver = build_quivers(tri)["q"]
    doubles = dict(_double_pairs(tri))
    inverse_doubles = {d1: d0 for d0, d1 in doubles.items()}
    twists = {}
    for a in quiver.arrows:
        wt, wh = quiver.weight(a.tail), quiver.weight(a.head)
        if 1 in (wt, wh):
            twists[a.aid] = 0
        elif a.aid in doubles:
            twists[a.aid] = 1 if a.aid in ct.xi else 0
        elif a.aid in inverse_doubles:
            ell = 1 if inverse_doubles[a.aid] in ct.xi else 0
            twists[a.aid] = ell + 2
        else:
            twists[a.aid] = 1 if a.aid in ct.xi else 0
    return twists


def build_species(ct: ColoredTriangulation, tower: FieldTower) -> SpeciesData:
    tri = ct.tri
    quiver = build_quivers(tri)["q"]
    twists = modulating_function(ct, tower)
    sp = SpeciesData(tri, quiver, tower, twists)
    _check_dimensions(sp)
    return sp


def _check_dimensions(sp: SpeciesData) -> None:
    """Bimodule dimensions must reproduce the exchange matrix entries."""
    B, D = to_matrix(sp.quiver)
    verts = sp.quiver.vertices
    alg = sp.algebra()
    for ki, k in enumerate(verts):
        for ji, j in enumerate(verts):
            if B[ki][ji] <= 0:
                continue
            got = len([key for key in basis_keys(alg, 1)
                       if key[0] == j and alg.end_vertex(j, key[1]) == k])
            # dim over F_k: divide the F-dimension by d_k
            assert got // D[ki] == B[ki][ji], (k, j, got, B[ki][ji])


def build_potential(ct: ColoredTriangulation, tower: FieldTower,
                    species: SpeciesData | None = None) -> PathElement:
    """Sum of the obvious cycles over the interior triangles."""
    sp = species if species is not None else build_species(ct, tower)
    alg = sp.algebra()
    S = PathElement(alg)
    for ti, t in enumerate(sp.tri.triangles):
        aids = [(ti, slot, 0) for slot in range(3)]
        if any(aid not in alg.arrows for aid in aids):
            continue  # a boundary side, not an interior triangle
        a0, a1, a2 = (arrow(alg, aid) for aid in aids)
        if isinstance(t, TwiceOrbifolded):
            w0 = sp.tri.arc_weights[t.pending[0]]
            w1 = sp.tri.arc_weights[t.pending[1]]
            d0, b, g = a1, a2, a0  # doubles run p0 -> p1 inside the monogon
            if w0 == 1 == w1:
                d1 = arrow(alg, (ti, 1, 1))
                u = tower.v_power(2)
                S = S + d0 * b * g + d1 * b.rcoef(u) * g
                continue
            if w0 == 4 == w1:
                d1 = arrow(alg, (ti, 1, 1))
                S = S + (d0 + d1) * b * g
                continue
        S = S + a0 * a1 * a2
    return S

"""Mod-2 cochain complexes carried by a triangulation.

Cells: 0-cells are the arcs of weight at least 2; 1-cells are the arrows of
the heavy subquiver (hatted version: plus the epsilon arrows); 2-cells are
the interior triangles all of whose sides are heavy arcs.  A cochain is a
subset of 1-cells, stored as a bit mask over a sorted arrow list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Arrow, build_quivers
from .triangulation import Triangulation, is_arc


class NotACocycle(ValueError):
    """The cochain does not vanish on every 2-cell boundary."""


@dataclass(frozen=True)
class ComplexF2:
    """One of the two complexes (plain or hatted) of a triangulation."""

    arcs: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    faces: tuple[tuple[int, ...], ...]  # per 2-cell: indices into arrows

    def arrow_index(self, aid) -> int:
        for i, a in enumerate(self.arrows):
            if a.aid == aid:
                return i
        raise KeyError(aid)

    def d1_rows(self) -> list[int]:
        """delta1 as one bit row per 2-cell over the arrow basis."""
        out = []
        for f in self.faces:
            r = 0
            for i in f:
                r ^= 1 << i
            out.append(r)
        return out

    def d0_rows(self) -> list[int]:
        """delta0 as one bit row per 0-cell: arrows incident an odd number."""
        out = []
        for v in self.arcs:
            r = 0
            for i, a in enumerate(self.arrows):
                if (a.tail == v) != (a.head == v):
                    r ^= 1 << i
            out.append(r)
        return out


def interior_faces(tri: Triangulation):
    """Indices of triangles with no boundary side and all sides heavy."""
    out = []
    for ti, t in enumerate(tri.triangles):
        sides = [s for s, _ in t.cyclic()]
        if all(is_arc(s) and tri.arc_weights[s[1]] != 1 for s in sides):
            out.append(ti)
    return out


def build_complex(tri: Triangulation, hat: bool = False) -> ComplexF2:
    quivers = build_quivers(tri)
    wq = quivers["qdoubleprime" if hat else "qprime"]
    arrows = tuple(sorted(wq.arrows, key=lambda a: str(a.aid)))
    pos = {a.aid: i for i, a in enumerate(arrows)}
    faces = []
    for ti in interior_faces(tri):
        face = tuple(sorted(pos[(ti, i, 0)] for i in range(3)))
        faces.append(face)
    return ComplexF2(tuple(wq.vertices), arrows, tuple(faces))


def _row_reduce(rows):
    """GF(2) row echelon over bit ints; returns (pivots dict bit->row, basis)."""
    pivots = {}
    for r in rows:
        r = _reduce_vector(r, pivots)
        if r:
            pivots[r.bit_length() - 1] = r
    return pivots


def _reduce_vector(v, pivots):
    """Clear every pivot bit, high to low; the result is the canonical
    coset representative (no pivot bit set) of v modulo the row span."""
    for pb in sorted(pivots, reverse=True):
        if v >> pb & 1:
            v ^= pivots[pb]
    return v


def _kernel_basis(rows, n):
    """Basis of the kernel of the map sending x (n bits) to its row pairings."""
    # Transpose to an n-column system and back-solve for free variables.
    pivots = {}
    cols = {}
    reduced = []
    for r in rows:
        r = _reduce_vector(r, pivots)
        if r:
            pivots[r.bit_length() - 1] = r
            reduced.append(r)
    # Gauss-Jordan: clear pivot bits upward so each pivot column is isolated.
    rows2 = sorted(pivots.values(), key=lambda r: r.bit_length(), reverse=True)
    for i in range(len(rows2)):
        for j in range(len(rows2)):
            if i != j and rows2[j] >> (rows2[i].bit_length() - 1) & 1:
                rows2[j] ^= rows2[i]
    piv_bits = {r.bit_length() - 1: r for r in rows2}
    basis = []
    for free in range(n):
        if free in piv_bits:
            continue
        v = 1 << free
        for pb, row in piv_bits.items():
            if row >> free & 1:
                v ^= 1 << pb
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Cohomology:
    complex: ComplexF2
    cocycle_basis: tuple[int, ...]
    coboundary_basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.cocycle_basis) - len(self.coboundary_basis)

    def is_cocycle(self, mask: int) -> bool:
        return all(bin(row & mask).count("1") % 2 == 0
                   for row in self.complex.d1_rows())

    def class_of(self, mask: int) -> int:
        """Canonical coset representative: reduce against coboundaries."""
        if not self.is_cocycle(mask):
            raise NotACocycle("cochain is nonzero on a 2-cell boundary")
        return _reduce_vector(mask, self._b_pivots())

    def _b_pivots(self):
        return _row_reduce(list(self.coboundary_basis))

    def same_class(self, m1: int, m2: int) -> bool:
        return self.class_of(m1) == self.class_of(m2)

    def all_classes(self):
        """One canonical representative per cohomology class."""
        reps = set()
        hb = [v for v in _complement_basis(self.cocycle_basis,
                                           self.coboundary_basis)]
        for bits in range(1 << len(hb)):
            v = 0
            for i, b in enumerate(hb):
                if bits >> i & 1:
                    v ^= b
            reps.add(self.class_of(v))
        return sorted(reps)


def _complement_basis(space_basis, sub_basis):
    pivots = _row_reduce(list(sub_basis))
    out = []
    for v in space_basis:
        r = _reduce_vector(v, pivots)
        if r:
            pivots[r.bit_length() - 1] = r
            out.append(r)
    return out


def cohomology(cx: ComplexF2) -> Cohomology:
    n = len(cx.arrows)
    z = _kernel_basis(cx.d1_rows(), n)
    b_pivots = _row_reduce(cx.d0_rows())
    return Cohomology(cx, tuple(z), tuple(sorted(b_pivots.values())))


def mask_of(cx: ComplexF2, arrow_ids) -> int:
    m = 0
    for aid in arrow_ids:
        m |= 1 << cx.arrow_index(tuple(aid) if isinstance(aid, list) else aid)
    return m


def arrows_of(cx: ComplexF2, mask: int):
    return [cx.arrows[i].aid for i in range(len(cx.arrows)) if mask >> i & 1]


def hat_lift(tri: Triangulation, xi_mask: int):
    """Lift a cocycle on the plain complex to the hatted complex.

    On shared arrows the lift agrees with the input; on the epsilon arrow of
    a weight-1 pending arc k it takes the value 1 + xi(companion arrow) when
    the triangle of k induces a heavy companion arrow, and 1 otherwise.
    """
    from .quiver import companion_arrow

    cx = build_complex(tri, hat=False)
    cxh = build_complex(tri, hat=True)
    coh = cohomology(cx)
    if not coh.is_cocycle(xi_mask):
        raise NotACocycle("input is not a cocycle on the plain complex")
    out = 0
    for i, a in enumerate(cxh.arrows):
        if a.kind == "epsilon":
            k = a.aid[1]
            comp = companion_arrow(tri, k)
            val = 1
            if comp is not None:
                val ^= xi_mask >> cx.arrow_index(comp.aid) & 1
            if val:
                out |= 1 << i
        else:
            if xi_mask >> cx.arrow_index(a.aid) & 1:
                out |= 1 << i
    return out

"""Ready-made surfaces and triangulations used in tests and the CLI.

Polygon conventions: a disc with m marked points has boundary segments
b0..b(m-1) with bi between vertex i and vertex i+1 (counterclockwise), and
fan arcs a1..a(m-3) from vertex 0 to vertex i+1.
"""

from __future__ import annotations

from .surface import Surface, surface
from .triangulation import (
    OnceOrbifolded,
    Ordinary,
    Triangulation,
    TwiceOrbifolded,
    arc,
    bnd,
    build_triangulation,
)


def disk(m: int, weights=()) -> Triangulation:
    """Fan triangulation of a disc, with 0, 1 or 2 orbifold points.

    With one orbifold point, the last corner is a digon around it; with
    two, the last corner holds a chain of two digons.
    """
    o = len(weights)
    surf = surface(genus=0, boundary=[m], weights=weights)
    if o == 0:
        # fan arcs a0..a(m-4) from vertex 0 to vertices 2..m-2
        sides = [bnd(0)] + [arc(i) for i in range(m - 3)] + [bnd(m - 1)]
        tris = [
            Ordinary((sides[i - 1], bnd(i), sides[i])) for i in range(1, m - 1)
        ]
    elif o == 1:
        # one more fan arc reaching vertex m-1, then a digon around the point
        sides = [bnd(0)] + [arc(i) for i in range(m - 2)]
        tris = [
            Ordinary((sides[i - 1], bnd(i), sides[i])) for i in range(1, m - 1)
        ]
        tris.append(OnceOrbifolded((bnd(m - 1), arc(m - 3)), m - 2, 0))
    elif o == 2:
        # full fan, a second arc a(m-2) parallel to it, two nested digons
        sides = [bnd(0)] + [arc(i) for i in range(m - 2)]
        tris = [
            Ordinary((sides[i - 1], bnd(i), sides[i])) for i in range(1, m - 1)
        ]
        tris.append(OnceOrbifolded((arc(m - 2), arc(m - 3)), m - 1, 0))
        tris.append(OnceOrbifolded((bnd(m - 1), arc(m - 2)), m, 1))
    else:
        raise ValueError("disk helper supports at most two orbifold points")
    return build_triangulation(surf, tris)


def hexagon_one_orb(weight=4) -> Triangulation:
    """Hexagon with one orbifold point, fan plus digon."""
    return disk(6, [weight])


def hexagon_core(weight=4) -> Triangulation:
    """Hexagon with one orbifold point and two interior triangles.

    A central triangle on arcs a0, a3, a2 plus a digon (a1, a3) around the
    orbifold point holding pending arc a4; the two obvious potential cycles
    share the vertex a3.
    """
    surf = surface(genus=0, boundary=[6], weights=[weight])
    tris = [
        Ordinary((bnd(5), bnd(0), arc(0))),
        Ordinary((bnd(1), bnd(2), arc(1))),
        Ordinary((bnd(3), bnd(4), arc(2))),
        Ordinary((arc(0), arc(3), arc(2))),
        OnceOrbifolded((arc(1), arc(3)), 4, 0),
    ]
    return build_triangulation(surf, tris)


def octagon_core() -> Triangulation:
    """Octagon whose two central triangles share the interior arc a2."""
    surf = surface(genus=0, boundary=[8])
    tris = [
        Ordinary((bnd(7), bnd(0), arc(0))),
        Ordinary((bnd(1), bnd(2), arc(1))),
        Ordinary((arc(0), arc(1), arc(2))),
        Ordinary((bnd(3), bnd(4), arc(3))),
        Ordinary((bnd(5), bnd(6), arc(4))),
        Ordinary((arc(2), arc(3), arc(4))),
    ]
    return build_triangulation(surf, tris)


def hexagon_two_orb_chain(weights=(1, 1)) -> Triangulation:
    """Hexagon with a chain of two once-orbifolded digons inside.

    Arcs a2, a0, a3 are parallel; each of the two digons (a2, a0) and
    (a0, a3) holds one orbifold point, so both once-orbifolded triangles
    are interior and share the arc a0.
    """
    surf = surface(genus=0, boundary=[6], weights=weights)
    tris = [
        Ordinary((bnd(0), bnd(1), arc(1))),
        Ordinary((arc(1), bnd(2), arc(2))),
        OnceOrbifolded((arc(2), arc(0)), 5, 0),
        OnceOrbifolded((arc(0), arc(3)), 6, 1),
        Ordinary((arc(3), bnd(3), arc(4))),
        Ordinary((arc(4), bnd(4), bnd(5))),
    ]
    return build_triangulation(surf, tris)


def pentagon_core(weights=(4, 4)) -> Triangulation:
    """Pentagon with two orbifold points and two interior triangles.

    A loop a3 around the twice-orbifolded monogon, enclosed in a digon of
    parallel arcs a1, a2; the interior ordinary triangle (a1, a3, a2) and
    the monogon cycle share the vertex a3.
    """
    surf = surface(genus=0, boundary=[5], weights=weights)
    tris = [
        Ordinary((bnd(2), bnd(3), arc(0))),
        Ordinary((arc(0), bnd(4), arc(1))),
        Ordinary((arc(1), arc(3), arc(2))),
        Ordinary((arc(2), bnd(0), bnd(1))),
        TwiceOrbifolded(arc(3), (4, 5), (0, 1)),
    ]
    return build_triangulation(surf, tris)


def pentagon_two_orb_monogon(weights=(4, 4)) -> Triangulation:
    """Pentagon with two orbifold points: loop plus twice-orbifolded monogon."""
    surf = surface(genus=0, boundary=[5], weights=weights)
    tris = [
        Ordinary((bnd(0), bnd(1), arc(1))),
        Ordinary((arc(1), bnd(2), arc(2))),
        Ordinary((arc(2), bnd(3), arc(3))),
        Ordinary((arc(3), bnd(4), arc(0))),
        TwiceOrbifolded(arc(0), (4, 5), (0, 1)),
    ]
    return build_triangulation(surf, tris)


def pentagon_two_orb_digons(weights=(4, 4)) -> Triangulation:
    """Pentagon with two orbifold points: two nested once-orbifolded digons."""
    surf = surface(genus=0, boundary=[5], weights=weights)
    tris = [
        Ordinary((bnd(0), bnd(1), arc(1))),
        Ordinary((arc(1), bnd(2), arc(2))),
        Ordinary((arc(2), bnd(3), arc(3))),
        OnceOrbifolded((arc(0), arc(3)), 4, 0),
        OnceOrbifolded((bnd(4), arc(0)), 5, 1),
    ]
    return build_triangulation(surf, tris)


def annulus_11() -> Triangulation:
    """Annulus with one marked point on each boundary component."""
    surf = surface(genus=0, boundary=[1, 1])
    tris = [
        Ordinary((bnd(0), arc(0), arc(1))),
        Ordinary((bnd(1), arc(0), arc(1))),
    ]
    return build_triangulation(surf, tris)


def torus_one_orb(weight=1) -> Triangulation:
    """Once-punctured torus with a single orbifold point.

    Arcs 0..4 with 4 pending; two ordinary triangles and one digon.
    """
    surf = surface(genus=1, punctured_closed=True, weights=[weight])
    tris = [
        Ordinary((arc(0), arc(2), arc(1))),
        Ordinary((arc(0), arc(3), arc(1))),
        OnceOrbifolded((arc(2), arc(3)), 4, 0),
    ]
    return build_triangulation(surf, tris)


def torus_plain() -> Triangulation:
    """Once-punctured torus without orbifold points."""
    surf = surface(genus=1, punctured_closed=True)
    tris = [
        Ordinary((arc(0), arc(1), arc(2))),
        Ordinary((arc(0), arc(1), arc(2))),
    ]
    return build_triangulation(surf, tris)


TEST_SURFACES = {
    "hexagon1orb4": lambda: hexagon_one_orb(4),
    "hexagon1orb1": lambda: hexagon_one_orb(1),
    "hexagoncore4": lambda: hexagon_core(4),
    "hexagoncore1": lambda: hexagon_core(1),
    "pentagoncore44": lambda: pentagon_core((4, 4)),
    "pentagoncore11": lambda: pentagon_core((1, 1)),
    "pentagoncore14": lambda: pentagon_core((1, 4)),
    "pentagon44": lambda: pentagon_two_orb_monogon((4, 4)),
    "pentagon11": lambda: pentagon_two_orb_monogon((1, 1)),
    "pentagon14": lambda: pentagon_two_orb_monogon((1, 4)),
    "pentagon41": lambda: pentagon_two_orb_monogon((4, 1)),
    "octagoncore": octagon_core,
    "hexchain11": lambda: hexagon_two_orb_chain((1, 1)),
    "hexchain44": lambda: hexagon_two_orb_chain((4, 4)),
    "annulus11": annulus_11,
    "torus1orb1": lambda: torus_one_orb(1),
    "torus1orb4": lambda: torus_one_orb(4),
}

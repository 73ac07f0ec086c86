"""Surface descriptors: genus, boundary marked points, weighted orbifold points.

A surface here is either unpunctured with non-empty boundary and all marked
points on the boundary, or a closed surface with exactly one puncture.  Each
orbifold point has order 2 and carries a weight in {1, 4}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class Excluded(ValueError):
    """The surface is one of the eight excluded low-complexity cases."""


class Malformed(ValueError):
    """The descriptor fields are contradictory or out of range."""


@dataclass(frozen=True)
class Surface:
    genus: int
    boundary_marked: tuple[int, ...]
    punctured_closed: bool
    orbifold_weights: tuple[int, ...]
    validated: bool = field(default=False, compare=False)

    @property
    def b(self) -> int:
        return len(self.boundary_marked)

    @property
    def m(self) -> int:
        return 1 if self.punctured_closed else sum(self.boundary_marked)

    @property
    def o(self) -> int:
        return len(self.orbifold_weights)

    @property
    def u(self) -> int:
        return sum(1 for w in self.orbifold_weights if w == 1)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "boundary": list(self.boundary_marked),
            "punctured_closed": self.punctured_closed,
            "orbifold_weights": list(self.orbifold_weights),
        }

    @staticmethod
    def from_json(obj: dict) -> "Surface":
        return Surface(
            genus=int(obj["genus"]),
            boundary_marked=tuple(int(x) for x in obj.get("boundary", [])),
            punctured_closed=bool(obj.get("punctured_closed", False)),
            orbifold_weights=tuple(int(w) for w in obj.get("orbifold_weights", [])),
        )


def surface(genus=0, boundary=(), punctured_closed=False, weights=()) -> Surface:
    """Build and validate a surface in one call."""
    return validate_surface(
        Surface(genus, tuple(boundary), punctured_closed, tuple(weights))
    )


def validate_surface(spec: Surface) -> Surface:
    """Check well-formedness and reject the eight excluded surfaces.

    Excluded: once-punctured closed spheres with fewer than four orbifold
    points, the unpunctured disc with one marked point and one orbifold
    point, and unpunctured discs with one, two or three marked points and
    no orbifold point.
    """
    if spec.genus < 0:
        raise Malformed("genus must be nonnegative")
    if any(n < 1 for n in spec.boundary_marked):
        raise Malformed("every boundary component needs at least one marked point")
    if any(w not in (1, 4) for w in spec.orbifold_weights):
        raise Malformed("orbifold weights must be 1 or 4")
    if spec.punctured_closed:
        if spec.boundary_marked:
            raise Malformed("a once-punctured closed surface has no boundary")
        if spec.genus == 0 and spec.o < 4:
            raise Excluded(
                "once-punctured closed sphere with fewer than 4 orbifold points"
            )
    else:
        if not spec.boundary_marked:
            raise Malformed("an unpunctured surface needs non-empty boundary")
        if spec.genus == 0 and spec.b == 1:
            if spec.m == 1 and spec.o == 1:
                raise Excluded("unpunctured disc with m=1 and one orbifold point")
            if spec.m in (1, 2, 3) and spec.o == 0:
                raise Excluded(f"unpunctured disc with m={spec.m} and no orbifold point")
    return Surface(
        spec.genus,
        spec.boundary_marked,
        spec.punctured_closed,
        spec.orbifold_weights,
        validated=True,
    )


@dataclass(frozen=True)
class CountRecord:
    e: int
    h: int
    dimH1: int
    dimH1hat: int
    flip_graph_components: int

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "h": self.h,
            "dimH1": self.dimH1,
            "dimH1hat": self.dimH1hat,
            "flip_graph_components": self.flip_graph_components,
        }


def closed_form_counts(spec: Surface) -> CountRecord:
    """Arc count e, triangle count h, cohomology dimensions, component count.

    For surfaces with boundary: e = 6(g-1)+3b+m+2o and h = 4(g-1)+2b+m+o.
    For the once-punctured closed case, Euler-characteristic bookkeeping
    (chi = (1+o) - e + h = 2-2g together with slot counting 2e = 3h + o)
    gives e = 6g+2o-3 and h = 4g+o-2.
    """
    if not spec.validated:
        spec = validate_surface(spec)
    g, b, m, o, u = spec.genus, spec.b, spec.m, spec.o, spec.u
    if spec.punctured_closed:
        e = 6 * g + 2 * o - 3
        h = 4 * g + o - 2
    else:
        e = 6 * (g - 1) + 3 * b + m + 2 * o
        h = 4 * (g - 1) + 2 * b + m + o
    if spec.punctured_closed:
        dim_h1 = 2 * g
        dim_h1_hat = 2 * g + u
    else:
        dim_h1 = 2 * g + b - 1
        dim_h1_hat = 2 * g + b + u - 1
    return CountRecord(e, h, dim_h1, dim_h1_hat, 2**dim_h1)


def load_surface(path: str) -> Surface:
    with open(path) as fh:
        return validate_surface(Surface.from_json(json.load(fh)))

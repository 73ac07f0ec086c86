"""Gluing complexes, flips, census identities and canonical keys."""

import pytest

from orbsp.examples import TEST_SURFACES, annulus_11, disk, hexagon_one_orb
from orbsp.triangulation import (
    NotAnArc,
    canonical_key,
    census,
    flip,
    max_valency,
    triangulation_from_json,
)


def test_census_matches_closed_form():
    from orbsp.surface import closed_form_counts

    for name, factory in TEST_SURFACES.items():
        tri = factory()
        rec = closed_form_counts(tri.surface)
        assert len(tri.arcs) == rec.e, name
        assert len(tri.triangles) == rec.h, name
        c = census(tri)
        assert sum(c.values()) == rec.h, name


def test_flip_changes_one_arc():
    tri = hexagon_one_orb(4)
    for k in tri.arcs:
        sigma, arc_map = flip(tri, k)
        assert set(sigma.arcs) == set(tri.arcs)
        assert set(arc_map) == set(tri.arcs)
        assert arc_map[k] in sigma.arcs


def test_flip_is_involutive_up_to_relabeling():
    for factory in (annulus_11, lambda: disk(5), lambda: hexagon_one_orb(1)):
        tri = factory()
        for k in tri.arcs:
            sigma, _ = flip(tri, k)
            back, _ = flip(sigma, k)
            assert canonical_key(back) == canonical_key(tri)


def test_flip_rejects_non_arcs():
    tri = disk(5)
    with pytest.raises(NotAnArc):
        flip(tri, 99)


def test_json_round_trip():
    for factory in TEST_SURFACES.values():
        tri = factory()
        back = triangulation_from_json(tri.surface, tri.to_json())
        assert back == tri


def test_max_valency_is_positive():
    for factory in TEST_SURFACES.values():
        tri = factory()
        if not tri.surface.punctured_closed:
            assert max_valency(tri) >= 2

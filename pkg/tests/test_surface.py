"""Surface validation, closed-form counts and JSON round-trips."""

import pytest

from orbsp.surface import (
    Excluded,
    Malformed,
    Surface,
    closed_form_counts,
    surface,
    validate_surface,
)


def test_valid_examples():
    surface(boundary=(6,), weights=(4,))
    surface(genus=1, punctured_closed=True, weights=(1,))
    surface(boundary=(1, 1))


def test_excluded_surfaces():
    with pytest.raises(Excluded):
        surface(boundary=(3,))
    with pytest.raises(Excluded):
        surface(boundary=(1,), weights=(4,))
    with pytest.raises(Excluded):
        surface(punctured_closed=True, weights=(1, 1, 1))


def test_malformed_surfaces():
    with pytest.raises(Malformed):
        surface(genus=-1, boundary=(4,))
    with pytest.raises(Malformed):
        surface(boundary=(0,))
    with pytest.raises(Malformed):
        surface(boundary=(4,), weights=(3,))
    with pytest.raises(Malformed):
        surface(genus=1, boundary=(2,), punctured_closed=True)


def test_counts_hexagon_one_orb():
    rec = closed_form_counts(surface(boundary=(6,), weights=(4,)))
    assert (rec.e, rec.h) == (5, 5)
    assert (rec.dimH1, rec.dimH1hat) == (0, 0)
    assert rec.flip_graph_components == 1


def test_counts_torus_orbifold():
    rec = closed_form_counts(surface(genus=1, punctured_closed=True,
                                     weights=(1,)))
    assert (rec.e, rec.h) == (5, 3)
    assert (rec.dimH1, rec.dimH1hat) == (2, 3)
    assert rec.flip_graph_components == 4


def test_json_round_trip():
    s = surface(genus=2, boundary=(3, 1), weights=(1, 4))
    back = validate_surface(Surface.from_json(s.to_json()))
    assert back == s

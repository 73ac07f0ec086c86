"""Path algebra quotients: derivatives, dimensions and centers."""

import pytest

from orbsp.colored import make_colored
from orbsp.examples import annulus_11, hexagon_core, torus_one_orb
from orbsp.jacobian import (
    CutoffRequired,
    center_dimension,
    cyclic_derivative,
    cyclically_equal,
    ideal_contains_power,
    jacobian_dimension,
    sp_of,
)
from orbsp.pathalg import arrow
from orbsp.species import build_tower

TOWER = build_tower(5)


def _sp(factory, xi=()):
    return sp_of(make_colored(factory(), list(xi)), TOWER)


def test_hexagon_derivatives_are_two_paths():
    sp = _sp(lambda: hexagon_core(4))
    for ti in (3, 4):
        for i in range(3):
            d = cyclic_derivative(sp.potential, (ti, i, 0))
            expect = arrow(sp.alg, (ti, (i + 1) % 3, 0)) \
                * arrow(sp.alg, (ti, (i + 2) % 3, 0))
            assert d.terms == expect.terms


def test_cyclic_equality():
    sp = _sp(lambda: hexagon_core(4))
    a, b, c = (arrow(sp.alg, (3, i, 0)) for i in range(3))
    rest = sp.potential + (a * b * c).scale(-1)
    assert cyclically_equal(a * b * c + rest, b * c * a + rest)
    assert not cyclically_equal(sp.potential, sp.potential + a * b * c)


def test_oracle_dimensions():
    assert jacobian_dimension(_sp(annulus_11)) == \
        {"dim": 8, "certified": True}
    assert jacobian_dimension(_sp(lambda: hexagon_core(1)))["dim"] == 29
    assert jacobian_dimension(_sp(lambda: hexagon_core(4)))["dim"] == 38


def test_annulus_centers():
    assert center_dimension(_sp(annulus_11)) == 2
    assert center_dimension(_sp(annulus_11, [(0, 1, 0)])) == 1


def test_power_containment_certifies_the_cutoff():
    sp = _sp(lambda: hexagon_core(4))
    assert ideal_contains_power(sp, sp.tmax)
    assert jacobian_dimension(sp, sp.tmax + 1)["dim"] == \
        jacobian_dimension(sp)["dim"]


def test_closed_surface_needs_explicit_cutoff():
    sp = _sp(lambda: torus_one_orb(1))
    with pytest.raises(CutoffRequired):
        jacobian_dimension(sp)
    dims = [jacobian_dimension(sp, c)["dim"] for c in (6, 9)]
    assert dims[0] < dims[1]

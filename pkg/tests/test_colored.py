"""Colored triangulations: transport, colored flips and flip graphs."""

import pytest

from orbsp.colored import (
    class_coordinates,
    colored_flip,
    flip_graph_explore,
    flip_phi,
    make_colored,
    pullback,
    transported_key,
)
from orbsp.examples import annulus_11, disk, hexagon_core, torus_one_orb
from orbsp.f2complex import NotACocycle, build_complex, cohomology


def test_make_colored_rejects_non_cocycles():
    tri = hexagon_core(4)
    with pytest.raises(NotACocycle):
        make_colored(tri, [(3, 0, 0)])


def test_transport_round_trip():
    tri = hexagon_core(1)
    coh = cohomology(build_complex(tri, hat=True))
    for k in tri.arcs:
        sigma, pull_ts, pull_st = flip_phi(tri, k)
        for z in coh.cocycle_basis:
            z2 = pullback(tri, pull_ts, z, sigma)
            assert pullback(sigma, pull_st, z2, tri) == z


def test_colored_flip_preserves_class_under_double_flip():
    tri = annulus_11()
    cx = build_complex(tri)
    coh = cohomology(cx)
    for rep in coh.all_classes():
        from orbsp.f2complex import arrows_of

        ct = make_colored(tri, arrows_of(cx, rep))
        back = colored_flip(colored_flip(ct, 0), 0)
        assert transported_key(back) == transported_key(ct)
        assert class_coordinates(back) == class_coordinates(ct)


def test_torus_weight1_flip_rule():
    tri = torus_one_orb(1)
    ct = make_colored(tri, [])
    out = colored_flip(ct, 4)
    assert out.xi == {(2, 2, 0)}


def test_disk_flip_graph_is_catalan():
    ct = make_colored(disk(5), [])
    keys, overflow = flip_graph_explore(ct, limit=100, quotient=True)
    assert not overflow and len(keys) == 5


def test_flip_graph_overflow_flag():
    ct = make_colored(torus_one_orb(1), [])
    keys, overflow = flip_graph_explore(ct, limit=3, quotient=False,
                                        canonical=False)
    assert overflow and len(keys) == 3

"""Species, modulating functions and potentials."""

from orbsp.colored import make_colored
from orbsp.examples import (
    TEST_SURFACES,
    hexagon_core,
    pentagon_two_orb_monogon,
)
from orbsp.species import (
    build_potential,
    build_species,
    build_tower,
    modulating_function,
)

TOWER = build_tower(5)


def test_trivial_cocycle_gives_flat_twists_off_doubles():
    tri = hexagon_core(4)
    ct = make_colored(tri, [])
    tw = modulating_function(ct, TOWER)
    assert set(tw.values()) == {0}


def test_double_arrow_twists():
    tri = pentagon_two_orb_monogon((4, 4))
    ti = next(i for i, t in enumerate(tri.triangles)
              if type(t).__name__ == "TwiceOrbifolded")
    ct = make_colored(tri, [])
    tw = modulating_function(ct, TOWER)
    assert tw[(ti, 1, 0)] == 0 and tw[(ti, 1, 1)] == 2
    from orbsp.f2complex import arrows_of, build_complex, cohomology

    cx = build_complex(tri)
    i = cx.arrow_index((ti, 1, 0))
    z = next(m for m in cohomology(cx).cocycle_basis if m >> i & 1)
    ct2 = make_colored(tri, arrows_of(cx, z))
    tw2 = modulating_function(ct2, TOWER)
    assert tw2[(ti, 1, 0)] == 1 and tw2[(ti, 1, 1)] == 3


def test_species_builds_on_every_example():
    # build_species internally asserts the bimodule dimension counts
    for name, factory in TEST_SURFACES.items():
        ct = make_colored(factory(), [])
        sp = build_species(ct, TOWER)
        assert set(sp.twists) == {a.aid for a in sp.quiver.arrows}, name


def test_potential_has_one_cycle_per_interior_triangle():
    tri = hexagon_core(4)
    ct = make_colored(tri, [])
    S = build_potential(ct, TOWER)
    assert len(S.terms) == 2
    assert all(len(key[1]) == 3 for key in S.terms)

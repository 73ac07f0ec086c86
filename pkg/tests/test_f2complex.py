"""Mod-2 complexes, cohomology and the canonical coset representative."""

from orbsp.examples import TEST_SURFACES, hexagon_core, torus_one_orb
from orbsp.f2complex import (
    _reduce_vector,
    _row_reduce,
    arrows_of,
    build_complex,
    cohomology,
    hat_lift,
    mask_of,
)


def test_dimensions_match_closed_form():
    from orbsp.surface import closed_form_counts

    for name, factory in TEST_SURFACES.items():
        tri = factory()
        rec = closed_form_counts(tri.surface)
        assert cohomology(build_complex(tri)).dim == rec.dimH1, name
        assert cohomology(build_complex(tri, hat=True)).dim == \
            rec.dimH1hat, name


def test_canonical_reduction_clears_every_pivot_bit():
    # regression: reduction must not stop at the first non-pivot leading
    # bit, otherwise cohomologous masks get distinct representatives
    pivots = _row_reduce([0b0011, 0b0110])
    for v in range(16):
        r = _reduce_vector(v, pivots)
        assert all(not r >> pb & 1 for pb in pivots)
        assert _reduce_vector(r, pivots) == r


def test_class_of_is_constant_on_cosets():
    tri = torus_one_orb(1)
    coh = cohomology(build_complex(tri))
    z = coh.cocycle_basis[0]
    for b in coh.coboundary_basis:
        assert coh.class_of(z ^ b) == coh.class_of(z)
        assert coh.same_class(z, z ^ b)
    assert len(coh.all_classes()) == 1 << coh.dim


def test_hat_lift_restricts_to_input():
    tri = hexagon_core(1)
    cx = build_complex(tri)
    cxh = build_complex(tri, hat=True)
    coh = cohomology(cx)
    for z in coh.cocycle_basis:
        lifted = hat_lift(tri, z)
        assert cohomology(cxh).is_cocycle(lifted)
        shared = [a.aid for a in cx.arrows]
        restricted = [aid for aid in arrows_of(cxh, lifted) if aid in shared]
        assert mask_of(cx, restricted) == z

"""End-to-end verification of the package's headline properties.

Twelve independent checks cover counting formulas, flip/mutation coherence,
cocycle transport, flip graphs, the field tower, species golden values,
Jacobian finiteness against frozen oracle dimensions, cohomology invariance
of the algebras, the premutation golden formulas on nine reference
configurations, and the infinite-dimensional torus witness.  The CLI and
the acceptance test both run through this module.

Randomized checks draw from ORBSP_SEED (default fixed) so runs reproduce.
"""

from __future__ import annotations

import os
import random

from . import jacobian as J
from .colored import (
    class_coordinates,
    colored_flip,
    flip_graph_explore,
    flip_phi,
    make_colored,
    pullback,
)
from .examples import (
    TEST_SURFACES,
    annulus_11,
    disk,
    hexagon_core,
    hexagon_one_orb,
    hexagon_two_orb_chain,
    octagon_core,
    pentagon_core,
    pentagon_two_orb_monogon,
    torus_one_orb,
)
from .f2complex import arrows_of, build_complex, cohomology, hat_lift, mask_of
from .pathalg import PathElement, arrow
from .quiver import NotTwoAcyclic, build_quivers, mutate_matrix, to_matrix
from .species import build_species, build_tower
from .surface import closed_form_counts
from .triangulation import canonical_key, census, flip

SEED = int(os.environ.get("ORBSP_SEED", "20260817"))

# frozen by tools/oracles before the package tests were written
ORACLE_DISK_COUNTS = {
    (2, 0): 1, (2, 1): 2, (2, 2): 12,
    (3, 0): 1, (3, 1): 6, (3, 2): 60,
    (4, 0): 2, (4, 1): 20, (4, 2): 280,
    (5, 0): 5, (5, 1): 70, (5, 2): 1260,
    (6, 0): 14, (6, 1): 252, (6, 2): 5544,
    (7, 0): 42, (7, 1): 924, (7, 2): 24024,
}
ORACLE_JACOBIAN_DIMS = {
    "hexagoncore4": 38,
    "hexagoncore1": 29,
    "pentagoncore44": 74,
    "pentagoncore11": 46,
    "pentagoncore14": 59,
    "annulus11": 8,
}
ORACLE_ANNULUS_CENTER = {0: 2, 1: 1}  # H1 class bit -> center dimension


def _tower(p: int = 5):
    return build_tower(p)


def _span(basis, bits):
    m = 0
    for i, b in enumerate(basis):
        if bits >> i & 1:
            m ^= b
    return m


def _all_cocycles(tri):
    """The plain complex, its cohomology, and every cocycle mask."""
    cx = build_complex(tri)
    coh = cohomology(cx)
    masks = sorted({_span(coh.cocycle_basis, bits)
                    for bits in range(1 << len(coh.cocycle_basis))})
    return cx, coh, masks


def _colored(tri, cx, mask):
    return make_colored(tri, arrows_of(cx, mask))


def _flip_sample(seed_tri, limit):
    """Up to `limit` distinct triangulations reachable from the seed."""
    seen = {canonical_key(seed_tri)}
    queue = [seed_tri]
    out = [seed_tri]
    while queue and len(out) < limit:
        t = queue.pop()
        for k in t.arcs:
            nxt, _ = flip(t, k)
            key = canonical_key(nxt)
            if key not in seen and len(out) < limit:
                seen.add(key)
                out.append(nxt)
                queue.append(nxt)
    return out


def criterion_1():
    """Arc/triangle counts and the census identities on flip samples."""
    seeds = [hexagon_one_orb(4), hexagon_one_orb(1),
             pentagon_two_orb_monogon((4, 1)), annulus_11()]
    for m in range(4, 8):
        for w in ((), (4,), (1, 4)):
            seeds.append(disk(m, w))
    checked = 0
    for seed in seeds:
        for tri in _flip_sample(seed, 40):
            surf = tri.surface
            rec = closed_form_counts(surf)
            if len(tri.arc_weights) != rec.e or len(tri.triangles) != rec.h:
                return False, f"count mismatch on {surf}"
            tab = census(tri)
            ok = (sum(tab.values()) == rec.h
                  and sum(p * v for (p, _), v in tab.items()) == surf.m
                  and sum(q * v for (_, q), v in tab.items()) == surf.u)
            if not ok:
                return False, f"census identity failed on {surf}"
            checked += 1
    return True, f"{checked} triangulations over {len(seeds)} surfaces"


def criterion_2():
    """Flip commutes with matrix mutation on random (tau, k) pairs."""
    rng = random.Random(SEED + 2)
    names = sorted(TEST_SURFACES)
    done = skipped = 0
    while done < 200:
        tri = TEST_SURFACES[rng.choice(names)]()
        for _ in range(rng.randrange(4)):
            tri, _ = flip(tri, rng.choice(tri.arcs))
        k = rng.choice(tri.arcs)
        wq = build_quivers(tri)["q"]
        tri2, _ = flip(tri, k)
        wq2 = build_quivers(tri2)["q"]
        try:
            B, D = to_matrix(wq)
            B2, D2 = to_matrix(wq2)
        except NotTwoAcyclic:
            skipped += 1
            continue
        if D != D2 or mutate_matrix(B, wq.vertices.index(k)) != B2:
            return False, f"mutation mismatch at arc {k}"
        done += 1
    return True, f"200 exact (B, D) matches, {skipped} 2-cyclic pairs skipped"


def criterion_3():
    """Cohomology dimension formulas plus the explicit torus bases."""
    for name in sorted(TEST_SURFACES):
        tri = TEST_SURFACES[name]()
        rec = closed_form_counts(tri.surface)
        if cohomology(build_complex(tri)).dim != rec.dimH1:
            return False, f"plain H1 dimension wrong on {name}"
        if cohomology(build_complex(tri, hat=True)).dim != rec.dimH1hat:
            return False, f"hatted H1 dimension wrong on {name}"
    for w, second in ((1, [(2, 2, 0)]), (4, [(2, 2, 0), (2, 1, 0)])):
        tri = torus_one_orb(w)
        cx = build_complex(tri)
        coh = cohomology(cx)
        m1 = mask_of(cx, [(0, 2, 0), (0, 1, 0)])
        m2 = mask_of(cx, second)
        if not (coh.is_cocycle(m1) and coh.is_cocycle(m2)):
            return False, f"torus basis not a cocycle at weight {w}"
        classes = {coh.class_of(x) for x in (0, m1, m2, m1 ^ m2)}
        if coh.dim != 2 or len(classes) != 4:
            return False, f"torus basis not independent at weight {w}"
    return True, f"{len(TEST_SURFACES)} surfaces plus both torus bases"


# expected transport rows: pull_ts entries after flipping arc k;
# when full is true every unlisted hatted arrow must map to itself
TRANSPORT_ROWS = [
    ("I", lambda: hexagon_core(1), 4,
     {(4, 2, 0): [("eps", 4)], ("eps", 4): [(4, 2, 0)]}, True),
    ("II", lambda: pentagon_two_orb_monogon((1, 1)), 4, {}, True),
    ("III", lambda: pentagon_two_orb_monogon((4, 1)), 4,
     {(4, 2, 0): [(4, 0, 0)], ("eps", 5): [("eps", 5)]}, True),
    ("IV", lambda: hexagon_core(4), 4,
     {(4, 0, 0): [(4, 1, 0)], (4, 1, 0): [(4, 0, 0)],
      (4, 2, 0): [(4, 0, 0), (4, 1, 0)]}, True),
    ("V", octagon_core, 2,
     {(2, 0, 0): [(2, 1, 0)], (2, 2, 0): [(5, 0, 0)],
      (5, 0, 0): [(5, 2, 0)], (5, 2, 0): [(2, 2, 0)],
      (2, 1, 0): [(2, 1, 0), (5, 0, 0)],
      (5, 1, 0): [(5, 2, 0), (2, 2, 0)]}, True),
    ("VI", lambda: pentagon_core((4, 4)), 3,
     {(2, 1, 0): [(4, 0, 0)], (2, 2, 0): [(2, 0, 0)],
      (4, 0, 0): [(4, 2, 0)], (4, 2, 0): [(2, 1, 0)],
      (2, 0, 0): [(2, 0, 0), (4, 0, 0)],
      (4, 1, 0): [(4, 2, 0), (2, 1, 0)]}, True),
    ("VII", lambda: hexagon_core(1), 3,
     {("eps", 4): [("eps", 4), (4, 2, 0), (3, 1, 0)]}, False),
    ("VIII", lambda: hexagon_two_orb_chain((1, 1)), 0,
     {("eps", 5): [("eps", 5), (2, 2, 0)],
      ("eps", 6): [("eps", 6), (3, 2, 0)]}, False),
    ("IX", lambda: pentagon_core((1, 1)), 3,
     {("eps", 4): [("eps", 4), (2, 0, 0)],
      ("eps", 5): [("eps", 5), (2, 1, 0)]}, False),
]


def _involutive(ct, back):
    """Whether back equals ct up to re-reading the triangle list.

    A double flip restores the arc system but may permute the triangle
    order and rotate the stored side order of a triangle; arrow ids move
    along with the triangles.
    """
    if back.tri == ct.tri:
        return back.xi == ct.xi
    if back.tri.surface != ct.tri.surface or back.tri.arcs != ct.tri.arcs:
        return False
    n = len(back.tri.triangles)
    cand = []
    for t1 in back.tri.triangles:
        c1 = t1.cyclic()
        opts = []
        for tj, t2 in enumerate(ct.tri.triangles):
            c2 = t2.cyclic()
            for r in range(3):
                if all(c1[i] == c2[(i + r) % 3] for i in range(3)):
                    opts.append((tj, r))
        cand.append(opts)

    def matchings(i, used, assign):
        if i == n:
            yield list(assign)
            return
        for tj, r in cand[i]:
            if tj not in used:
                yield from matchings(i + 1, used | {tj}, assign + [(tj, r)])

    for assign in matchings(0, frozenset(), []):
        remapped = set()
        for aid in back.xi:
            if aid[0] == "eps":
                remapped.add(aid)
            else:
                ti, slot, copy = aid
                tj, r = assign[ti]
                remapped.add((tj, (slot + r) % 3, copy))
        if remapped == ct.xi:
            return True
    return False


def criterion_4():
    """Transport round trips, involutivity, torus maps, reference rows."""
    trips = 0
    for name in sorted(TEST_SURFACES):
        tri = TEST_SURFACES[name]()
        cxh = build_complex(tri, hat=True)
        cocycles = cohomology(cxh).cocycle_basis
        for k in tri.arcs:
            sigma, pull_ts, pull_st = flip_phi(tri, k)
            for z in cocycles:
                z2 = pullback(tri, pull_ts, z, sigma)
                if pullback(sigma, pull_st, z2, tri) != z:
                    return False, f"round trip failed on {name} arc {k}"
                trips += 1
    for name in sorted(TEST_SURFACES):
        tri = TEST_SURFACES[name]()
        cx, coh, _ = _all_cocycles(tri)
        masks = sorted({0, *coh.cocycle_basis, *coh.all_classes()})
        for m in masks:
            ct = _colored(tri, cx, m)
            for k in tri.arcs:
                back = colored_flip(colored_flip(ct, k), k)
                if not _involutive(ct, back):
                    return False, f"flip not involutive on {name} arc {k}"
    for w in (1, 4):
        tri = torus_one_orb(w)
        cx, _, masks = _all_cocycles(tri)
        for m in masks:
            ct = _colored(tri, cx, m)
            out = colored_flip(ct, 4)
            if w == 1:
                ok = out.xi == ct.xi ^ {(2, 2, 0)}
            else:
                cxs = build_complex(out.tri)
                ok = cohomology(cxs).same_class(mask_of(cxs, out.xi),
                                                mask_of(cxs, ct.xi))
            if not ok:
                return False, f"torus weight-{w} transport map wrong"
    for label, factory, k, expected, full in TRANSPORT_ROWS:
        tri = factory()
        _, pull_ts, _ = flip_phi(tri, k)
        for aid, image in expected.items():
            if set(pull_ts[aid]) != set(image):
                return False, f"transport row {label}: {aid} -> {pull_ts[aid]}"
        if full:
            for aid, image in pull_ts.items():
                if aid not in expected and image != [aid]:
                    return False, f"transport row {label}: {aid} not fixed"
    return True, f"{trips} round trips, 9 reference rows, both torus maps"


def criterion_5():
    """Transported classes stay cohomologous; the class map is injective."""
    rng = random.Random(SEED + 5)
    names = sorted(TEST_SURFACES)
    for _ in range(100):
        tri = TEST_SURFACES[rng.choice(names)]()
        cx, coh, _ = _all_cocycles(tri)
        m = _span(coh.cocycle_basis, rng.getrandbits(len(coh.cocycle_basis)))
        cb = _span(coh.coboundary_basis,
                   rng.getrandbits(len(coh.coboundary_basis)) | 1)
        ct1 = _colored(tri, cx, m)
        ct2 = _colored(tri, cx, m ^ cb)
        for _ in range(30):
            k = rng.choice(ct1.tri.arcs)
            ct1 = colored_flip(ct1, k)
            ct2 = colored_flip(ct2, k)
            if ct1.tri != ct2.tri:
                return False, "walk diverged"
            if class_coordinates(ct1) != class_coordinates(ct2):
                return False, f"classes split after flipping {k}"
    for name in names:
        tri = TEST_SURFACES[name]()
        cx, coh, _ = _all_cocycles(tri)
        reps = coh.all_classes()
        coords = {class_coordinates(_colored(tri, cx, r)) for r in reps}
        if len(coords) != len(reps):
            return False, f"class map not injective on {name}"
    return True, "100 walks of length 30; injective on all surfaces"


def criterion_6():
    """Disk flip graphs are one exact component; seeds separate elsewhere."""
    for m, w, want in ((5, (), 5), (6, (), 14), (4, (4,), 20),
                       (4, (1,), 20), (5, (4,), 70)):
        tri = disk(m, w)
        ct = make_colored(tri, [])
        keys, overflow = flip_graph_explore(ct, limit=5000, quotient=True)
        if overflow or len(keys) != want:
            return False, f"disk({m},{w}) component {len(keys)} != {want}"
    separated = []
    for factory in (annulus_11, lambda: torus_one_orb(1),
                    lambda: torus_one_orb(4)):
        tri = factory()
        cx, coh, _ = _all_cocycles(tri)
        comps = []
        for rep in coh.all_classes():
            keys, _ = flip_graph_explore(_colored(tri, cx, rep), limit=60,
                                         quotient=False, canonical=False)
            comps.append(keys)
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if comps[i] & comps[j]:
                    return False, "seed components joined"
        separated.append(len(comps))
    return True, f"5 exact disk counts; separations {separated}"


def criterion_7():
    """Field tower structure constants and invariants at p = 5 and 13."""
    tw5 = _tower(5)
    v = (0, 1, 0, 0)
    u = (0, 0, 1, 0)
    if tw5.z != 2 or tw5.rho(v) != (0, 2, 0, 0) or tw5.theta(u) != (0, 0, 4, 0):
        return False, "p=5 structure constants wrong"
    rng = random.Random(SEED + 7)
    for p in (5, 13):
        tw = _tower(p)
        squares = {pow(a, 2, p) for a in range(1, p)}
        if tw.z in squares or any(a not in squares for a in range(2, tw.z)):
            return False, f"z is not the smallest non-residue at p={p}"
        lam = tw.rho_scalar
        if pow(lam, 2, p) != p - 1 or pow(lam, 4, p) != 1:
            return False, f"rho_scalar not a primitive 4th root at p={p}"
        if tw.rho(v, 4) != v or tw.rho(v, 2) == v:
            return False, f"rho does not have order 4 at p={p}"
        if tw.theta(tw.theta(u)) != u or tw.theta(u) == u:
            return False, f"theta not an involution on u at p={p}"
        if (tw.degree(tw.one()) != 1 or tw.degree(u) != 2
                or tw.degree(v) != 4):
            return False, f"subfield degrees wrong at p={p}"
        for _ in range(50):
            a = tuple(rng.randrange(p) for _ in range(4))
            b = tuple(rng.randrange(p) for _ in range(4))
            if tw.rho(tw.mul(a, b)) != tw.mul(tw.rho(a), tw.rho(b)):
                return False, f"rho not multiplicative at p={p}"
            if any(a) and tw.mul(a, tw.inv(a)) != tw.one():
                return False, f"inverse failed at p={p}"
    return True, "structure constants and invariants at p=5, 13"


def criterion_8():
    """Species golden identities and bimodule dimension checks."""
    tower = _tower()
    V = tower.v_power
    tri = pentagon_core((4, 4))
    cx, _, masks = _all_cocycles(tri)
    for m in masks:
        ct = _colored(tri, cx, m)
        alg = J.sp_of(ct, tower).alg
        ell = 1 if (4, 1, 0) in ct.xi else 0
        d0, d1 = arrow(alg, (4, 1, 0)), arrow(alg, (4, 1, 1))
        c0 = pow(tower.z, ell * tower.q, tower.p)
        c1 = pow(tower.z, (ell + 2) * tower.q, tower.p)
        if d0.rcoef(V(1)) != d0.lcoef(V(1)).scale(c0):
            return False, f"delta0 commutation failed at xi={m}"
        if d1.rcoef(V(1)) != d1.lcoef(V(1)).scale(c1):
            return False, f"delta1 commutation failed at xi={m}"
    tri = hexagon_core(4)
    cx, _, masks = _all_cocycles(tri)
    cycles = {(3, 0, 0): ((3, 1, 0), (3, 2, 0)),
              (3, 1, 0): ((3, 2, 0), (3, 0, 0)),
              (3, 2, 0): ((3, 0, 0), (3, 1, 0)),
              (4, 0, 0): ((4, 1, 0), (4, 2, 0)),
              (4, 1, 0): ((4, 2, 0), (4, 0, 0)),
              (4, 2, 0): ((4, 0, 0), (4, 1, 0))}
    for m in masks:
        ct = _colored(tri, cx, m)
        sp = J.sp_of(ct, tower)
        for aid, (x, y) in cycles.items():
            if J.cyclic_derivative(sp.potential, aid) != \
                    arrow(sp.alg, x) * arrow(sp.alg, y):
                return False, f"derivative of {aid} wrong at xi={m}"
        keys, index, span, coords = J._ideal_span(sp, sp.tmax)
        for k in keys:
            if len(k[1]) == sp.tmax:
                span.add(coords(PathElement(sp.alg, {k: 1})))
        witness = arrow(sp.alg, (4, 0, 0)).rcoef(V(1)) * arrow(sp.alg, (4, 1, 0))
        if not any(span.reduce(coords(witness))):
            return False, f"eta v nu vanished in the quotient at xi={m}"
    for name in sorted(TEST_SURFACES):
        tri = TEST_SURFACES[name]()
        build_species(make_colored(tri, []), tower)  # asserts dims internally
    return True, "monogon commutation, six derivatives, eta v nu, dims"


def criterion_9():
    """Finiteness certificates and the frozen oracle dimensions."""
    tower = _tower()
    stable = 0
    for name in sorted(TEST_SURFACES):
        tri = TEST_SURFACES[name]()
        if tri.surface.punctured_closed:
            continue
        sp = J.sp_of(make_colored(tri, []), tower)
        if not J.ideal_contains_power(sp, sp.tmax):
            return False, f"paths of length {sp.tmax} escape the ideal: {name}"
        auto = J.jacobian_dimension(sp)
        if not auto["certified"]:
            return False, f"dimension not certified on {name}"
        above = J.jacobian_dimension(sp, sp.tmax + 1)
        if above["dim"] != auto["dim"]:
            return False, f"dimension moved above the cutoff on {name}"
        want = ORACLE_JACOBIAN_DIMS.get(name)
        if want is not None and auto["dim"] != want:
            return False, f"{name}: dim {auto['dim']} != oracle {want}"
        stable += 1
    return True, f"{stable} surfaces certified; {len(ORACLE_JACOBIAN_DIMS)}" \
                 " oracle dimensions matched"


def criterion_10():
    """Cohomologous colorings agree; annulus classes are distinguished."""
    tower = _tower()
    tri = annulus_11()
    cx, coh, _ = _all_cocycles(tri)
    centers = []
    for rep in coh.all_classes():
        sp = J.sp_of(_colored(tri, cx, rep), tower)
        res = J.jacobian_dimension(sp)
        if not res["certified"] or res["dim"] != ORACLE_JACOBIAN_DIMS["annulus11"]:
            return False, "annulus dimension off"
        centers.append(J.center_dimension(sp))
    want = [ORACLE_ANNULUS_CENTER[0], ORACLE_ANNULUS_CENTER[1]]
    if sorted(centers, reverse=True) != sorted(want, reverse=True):
        return False, f"annulus centers {centers} != oracle {want}"
    if len(set(centers)) != 2:
        return False, "annulus classes not distinguished"
    pairs = 0
    for factory in (annulus_11, lambda: hexagon_core(4), octagon_core):
        tri = factory()
        cx, coh, masks = _all_cocycles(tri)
        if not coh.coboundary_basis:
            continue
        cb = coh.coboundary_basis[0]
        for m in (masks[0], masks[-1]):
            sp1 = J.sp_of(_colored(tri, cx, m), tower)
            sp2 = J.sp_of(_colored(tri, cx, m ^ cb), tower)
            r1, r2 = J.jacobian_dimension(sp1), J.jacobian_dimension(sp2)
            if r1 != r2 or not r1["certified"]:
                return False, "cohomologous dimensions differ"
            if J.center_dimension(sp1) != J.center_dimension(sp2):
                return False, "cohomologous centers differ"
            pairs += 1
    return True, f"annulus centers {centers}; {pairs} cohomologous pairs"


def _star(nalg, aid):
    return arrow(nalg, ("star", aid))


def _seg_fn(alg, nalg, tower):
    """Segment expander b v^s c -> decorated composite arrows of nalg."""
    cache = {}

    def comps_of(b, c):
        if (b, c) not in cache:
            cache[(b, c)] = J._composites(alg, b, c)
        return cache[(b, c)][0]

    def seg(b, s, c):
        comps_of(b, c)
        _, expansion = cache[(b, c)]
        i = alg.arrows[b][0]
        scal, key = alg.normalize(1, i, (b, c), (0, s, 0))
        out = PathElement(nalg)
        for (aid, t, r), cf in expansion[key].items():
            out = out + (arrow(nalg, aid).lcoef(tower.v_power(t))
                         .rcoef(tower.v_power(r)).scale(cf * scal))
        return out

    return seg, comps_of


def _rest_of(sp, k, nalg):
    """Potential terms whose cycles never visit the mutated vertex."""
    alg = sp.alg
    out = PathElement(nalg)
    for key, coef in sp.potential.terms.items():
        start, arrows, _ = key
        if not any(alg.vertex_at(start, arrows, n) == k
                   for n in range(len(arrows) + 1)):
            out = out + PathElement(nalg, {key: coef})
    return out


def _formula_1(sp, pre, seg, comps_of, k, tower):
    # weight-1 pending arc in a digon: the composite of matching parity
    # couples to the reversed star pair through an order-2 projection
    alg, nalg = sp.alg, pre.alg
    b, g, a = (4, 0, 0), (4, 1, 0), (4, 2, 0)
    ja = alg.arrows[a][2] % 2
    comps = {t % 2: arrow(nalg, aid) for aid, t in comps_of(b, g)}
    al = arrow(nalg, a)
    gs, bs = _star(nalg, g), _star(nalg, b)
    return (al * comps[ja]
            + J.pi_projection(gs * bs, ja, 2) * comps[ja]
            + gs * bs * comps[(ja + 1) % 2])


def _formula_2(sp, pre, seg, comps_of, k, tower):
    alg, nalg = sp.alg, pre.alg
    b, g, a = (4, 0, 0), (4, 1, 0), (4, 2, 0)
    jb, jg = alg.arrows[b][2], alg.arrows[g][2]
    inv2 = pow(2, -1, tower.p)
    al = arrow(nalg, a)
    gs, bs = _star(nalg, g), _star(nalg, b)
    return (al * seg(b, 0, g)
            + (J.pi_projection(gs * bs, jb + jg, 2) * seg(b, 0, g)
               + (gs.rcoef(tower.v_power(-1)) * bs) * seg(b, 1, g))
            .scale(inv2))


def _formula_4(sp, pre, seg, comps_of, k, tower):
    alg, nalg = sp.alg, pre.alg
    a, b, g = (4, 0, 0), (4, 1, 0), (4, 2, 0)
    jg = alg.arrows[g][2] % 2
    comps = {t % 2: arrow(nalg, aid) for aid, t in comps_of(a, b)}
    gl = arrow(nalg, g)
    bs, as_ = _star(nalg, b), _star(nalg, a)
    return (gl * comps[jg]
            + J.pi_projection(bs * as_, jg, 2) * comps[jg]
            + bs * as_ * comps[(jg + 1) % 2])


def _formula_5(sp, pre, seg, comps_of, k, tower):
    alg, nalg = sp.alg, pre.alg
    a, b, g = (4, 0, 0), (4, 1, 0), (4, 2, 0)
    inv2 = pow(2, -1, tower.p)
    gl = arrow(nalg, g)
    bs, as_ = _star(nalg, b), _star(nalg, a)
    return (gl * seg(a, 0, b)
            + (bs * as_ * seg(a, 0, b)
               + (bs.rcoef(tower.v_power(-1)) * as_) * seg(a, 1, b))
            .scale(inv2))


def _formula_11(sp, pre, seg, comps_of, k, tower):
    alg, nalg = sp.alg, pre.alg
    a, b, g = (2, 0, 0), (2, 1, 0), (2, 2, 0)
    e, h, d = (5, 2, 0), (5, 0, 0), (5, 1, 0)
    jb, jg = alg.arrows[b][2], alg.arrows[g][2]
    je, jh = alg.arrows[e][2], alg.arrows[h][2]
    al, dl = arrow(nalg, a), arrow(nalg, d)
    gs, bs = _star(nalg, g), _star(nalg, b)
    hs, es = _star(nalg, h), _star(nalg, e)
    return (al * seg(b, 0, g) + dl * seg(e, 0, h)
            + J.pi_projection(gs * bs, jb + jg, 2) * seg(b, 0, g)
            + J.pi_projection(hs * es, je + jh, 2) * seg(e, 0, h)
            + gs * es * seg(e, 0, g)
            + hs * bs * seg(b, 0, h))


def _formula_20(sp, pre, seg, comps_of, k, tower):
    alg, nalg = sp.alg, pre.alg
    a, b, g = (3, 2, 0), (3, 0, 0), (3, 1, 0)
    e, d, h = (2, 1, 0), (2, 2, 0), (2, 0, 0)
    gl, hl = arrow(nalg, g), arrow(nalg, h)
    bs, as_ = _star(nalg, b), _star(nalg, a)
    ds, es = _star(nalg, d), _star(nalg, e)
    u_inv = tower.v_power(-2)
    return (gl * seg(a, 0, b) + hl * seg(e, 0, d)
            + bs * as_ * seg(a, 0, b)
            + ds * es * seg(e, 0, d)
            + bs * es * seg(e, 0, b)
            + (bs.rcoef(u_inv) * es) * seg(e, 2, b)
            + ds * as_ * seg(a, 0, d))


def _formula_24(sp, pre, seg, comps_of, k, tower):
    alg, nalg = sp.alg, pre.alg
    a, b, g = (3, 2, 0), (3, 0, 0), (3, 1, 0)
    d, h, e = (2, 1, 0), (2, 2, 0), (2, 0, 0)
    gl, el = arrow(nalg, g), arrow(nalg, e)
    bs, as_ = _star(nalg, b), _star(nalg, a)
    hs, ds = _star(nalg, h), _star(nalg, d)
    return (gl * seg(a, 0, b) + el * seg(d, 0, h)
            + bs * as_ * seg(a, 0, b)
            + hs * ds * seg(d, 0, h)
            + hs * as_ * seg(a, 0, h)
            + bs * ds * seg(d, 0, b))


def _formula_32(sp, pre, seg, comps_of, k, tower):
    # the two-term display around the weight-(1,1) monogon is redundant:
    # its second term is cyclically equal to the first, so the formula
    # carries only one of them; the redundancy itself is checked below
    alg, nalg = sp.alg, pre.alg
    g, d0, d1, b = (4, 0, 0), (4, 1, 0), (4, 1, 1), (4, 2, 0)
    a, e, h = (2, 0, 0), (2, 1, 0), (2, 2, 0)
    d0l, d1l, hl = arrow(nalg, d0), arrow(nalg, d1), arrow(nalg, h)
    gs, bs = _star(nalg, g), _star(nalg, b)
    es, as_ = _star(nalg, e), _star(nalg, a)
    u_inv = tower.v_power(-2)
    term_a = seg(b, 0, e) * es * bs
    term_b = seg(b, 2, e) * (es.rcoef(u_inv) * bs)
    if not J.cyclically_equal(term_a, term_b):
        raise AssertionError("the two monogon coupling terms differ")
    return (d0l * seg(b, 0, g) + d1l * seg(b, 2, g)
            + hl * seg(a, 0, e)
            + gs * bs * seg(b, 0, g)
            + (gs.rcoef(u_inv) * bs) * seg(b, 2, g)
            + es * as_ * seg(a, 0, e)
            + as_ * seg(a, 0, g) * gs
            + term_a)


def _formula_38(sp, pre, seg, comps_of, k, tower):
    alg, nalg = sp.alg, pre.alg
    g, d0, d1, b = (4, 0, 0), (4, 1, 0), (4, 1, 1), (4, 2, 0)
    a, e, h = (2, 0, 0), (2, 1, 0), (2, 2, 0)
    j = (alg.arrows[b][2] + alg.arrows[g][2]) % 2
    comps = {t % 4: arrow(nalg, aid) for aid, t in comps_of(b, g)}
    d0l, d1l, hl = arrow(nalg, d0), arrow(nalg, d1), arrow(nalg, h)
    gs, bs = _star(nalg, g), _star(nalg, b)
    es, as_ = _star(nalg, e), _star(nalg, a)
    cj, cj2 = comps[(-j) % 4], comps[(-j - 2) % 4]
    return (d0l * cj + d1l * cj2
            + hl * seg(a, 0, e)
            + J.pi_projection(gs * bs, -j, 4) * cj
            + J.pi_projection(gs * bs, -(j + 2), 4) * cj2
            + es * as_ * seg(a, 0, e)
            + bs * seg(b, 0, e) * es
            + as_ * seg(a, 0, g) * gs)


# reference configurations for the mutation theorem: id -> (factory, arc,
# expected premutated potential as a function of the original species)
GOLDEN_CONFIGS = {
    1: (lambda: hexagon_core(1), 4, _formula_1),
    2: (lambda: hexagon_core(4), 4, _formula_2),
    4: (lambda: pentagon_two_orb_monogon((1, 4)), 4, _formula_4),
    5: (lambda: pentagon_two_orb_monogon((4, 1)), 4, _formula_5),
    11: (octagon_core, 2, _formula_11),
    20: (lambda: hexagon_two_orb_chain((1, 1)), 0, _formula_20),
    24: (lambda: hexagon_two_orb_chain((4, 4)), 0, _formula_24),
    32: (lambda: pentagon_core((1, 1)), 3, _formula_32),
    38: (lambda: pentagon_core((4, 4)), 3, _formula_38),
}


def _reduced_samples(masks, reps, cap=6):
    picked = sorted(set(reps))
    step = max(1, len(masks) // cap)
    for m in masks[::step][:cap]:
        if m not in picked:
            picked.append(m)
    return picked


def verify_config(num: int, p: int = 5, full: bool = True):
    """Run the three mutation checks on one reference configuration.

    (a) the premutated potential cyclically equals the expected formula for
    every cocycle; (b) after reduction the quiver and twist signature match
    the species of the flipped colored triangulation; (c) the certified
    Jacobian dimensions agree.  With full=False only (a) runs.
    """
    factory, k, formula = GOLDEN_CONFIGS[num]
    tower = _tower(p)
    tri = factory()
    cx, coh, masks = _all_cocycles(tri)
    for m in masks:
        ct = _colored(tri, cx, m)
        sp = J.sp_of(ct, tower)
        pre = J.premutate(sp, k)
        seg, comps_of = _seg_fn(sp.alg, pre.alg, tower)
        expected = formula(sp, pre, seg, comps_of, k, tower) \
            + _rest_of(sp, k, pre.alg)
        if not J.cyclically_equal(pre.potential, expected):
            return False, f"config {num}: formula mismatch at xi={m}"
    if not full:
        return True, f"config {num}: {len(masks)} cocycles, formula only"
    for m in _reduced_samples(masks, coh.all_classes()):
        ct = _colored(tri, cx, m)
        sp = J.sp_of(ct, tower)
        red = J.reduce_sp(J.premutate(sp, k))
        ct2 = colored_flip(ct, k)
        sp2 = J.sp_of(ct2, tower)
        if red.alg.weights != sp2.alg.weights or \
                J.twist_signature(red.alg) != J.twist_signature(sp2.alg):
            return False, f"config {num}: reduced quiver mismatch at xi={m}"
        red2 = J.SP(red.alg, red.potential, red.provenance, sp2.tmax)
        r1 = J.jacobian_dimension(red2)
        r2 = J.jacobian_dimension(sp2)
        if not (r1["certified"] and r2["certified"] and r1["dim"] == r2["dim"]):
            return False, f"config {num}: dimensions {r1} vs {r2} at xi={m}"
    return True, f"config {num}: {len(masks)} cocycles, reductions agree"


def criterion_11():
    """Premutation, reduction and dimension checks on all nine configs."""
    details = []
    for num in sorted(GOLDEN_CONFIGS):
        ok, detail = verify_config(num)
        if not ok:
            return False, detail
        details.append(str(num))
    return True, f"configs {{{', '.join(details)}}} pass (a), (b) and (c)"


def criterion_12():
    """Torus truncated dimensions grow strictly with the cutoff."""
    tower = _tower()
    grown = []
    for w in (1, 4):
        ct = make_colored(torus_one_orb(w), [])
        sp = J.sp_of(ct, tower)
        dims = [J.jacobian_dimension(sp, c)["dim"] for c in (6, 9, 12)]
        if not dims[0] < dims[1] < dims[2]:
            return False, f"weight {w}: dims {dims} not increasing"
        grown.append(dims)
    return True, f"weight 1: {grown[0]}, weight 4: {grown[1]}"


CRITERIA = [
    (1, "counting formulas and census identities", criterion_1),
    (2, "flip commutes with matrix mutation", criterion_2),
    (3, "cohomology dimensions and torus bases", criterion_3),
    (4, "cocycle transport and colored flips", criterion_4),
    (5, "flip-invariant cohomology classes", criterion_5),
    (6, "flip graph components", criterion_6),
    (7, "field tower invariants", criterion_7),
    (8, "species and potential golden values", criterion_8),
    (9, "Jacobian finiteness against the oracle", criterion_9),
    (10, "cohomologous colorings and centers", criterion_10),
    (11, "mutation theorem on reference configs", criterion_11),
    (12, "torus infinite-dimensionality witness", criterion_12),
]


def run_all(nums=None):
    """Run the selected criteria; returns one result record per criterion."""
    results = []
    for num, name, fn in CRITERIA:
        if nums is not None and num not in nums:
            continue
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append({"criterion": num, "name": name, "ok": ok,
                        "detail": detail})
    return results

"""Colored triangulations, colored flips and flip graphs.

A coloring is a 1-cocycle on the plain complex of a triangulation, stored
as a frozenset of arrow ids.  Flipping an arc transports the hatted lift of
the coloring through an explicit chain homotopy equivalence between the
hatted complexes of the two triangulations, then restricts it back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2complex import (
    NotACocycle,
    arrows_of,
    build_complex,
    cohomology,
    hat_lift,
    mask_of,
)
from .quiver import companion_arrow
from .triangulation import (
    OnceOrbifolded,
    Triangulation,
    TwiceOrbifolded,
    _rotate,
    canonical_key,
    canonical_relabelings,
    flip,
    is_arc,
)


class LiftMismatch(ValueError):
    """The transported hatted cocycle is not the lift of its restriction."""


@dataclass(frozen=True)
class ColoredTriangulation:
    tri: Triangulation
    xi: frozenset  # arrow ids of the plain complex where the cocycle is 1

    def mask(self, cx=None) -> int:
        cx = cx or build_complex(self.tri)
        return mask_of(cx, self.xi)


def make_colored(tri: Triangulation, arrow_ids) -> ColoredTriangulation:
    cx = build_complex(tri)
    m = mask_of(cx, arrow_ids)
    if not cohomology(cx).is_cocycle(m):
        raise NotACocycle("coloring is not a 1-cocycle")
    return ColoredTriangulation(tri, frozenset(tuple(a) for a in
                                               (tuple(x) if isinstance(x, list) else x
                                                for x in arrow_ids)))


def _triangle_sides(tri, ti):
    return [s for s, _ in tri.triangles[ti].cyclic()]


def _interior(tri, ti) -> bool:
    return all(is_arc(s) for s in _triangle_sides(tri, ti))


def _exceptional(tri, ti) -> bool:
    """Interior triangle with exactly one weight-1 arc among its sides."""
    if not _interior(tri, ti):
        return False
    ones = {s[1] for s in _triangle_sides(tri, ti) if tri.arc_weights[s[1]] == 1}
    return len(ones) == 1


def _slot_of(tri, ti, side_k):
    for i, (s, _) in enumerate(tri.triangles[ti].cyclic()):
        if s == side_k:
            return i
    raise KeyError(side_k)


def _plain_aid(tri, ti, frm, to):
    """Arrow id for the triangle arrow slot frm -> slot (frm+1); sanity tied
    to the quiver convention that slot i induces the arrow to slot i+1."""
    assert (frm + 1) % 3 == to
    return (ti, frm, 0)


def _heavy_arrow_exists(tri, ti, slot) -> bool:
    cyc = tri.triangles[ti].cyclic()
    s1, _ = cyc[slot]
    s2, _ = cyc[(slot + 1) % 3]
    return (is_arc(s1) and is_arc(s2)
            and tri.arc_weights[s1[1]] != 1 and tri.arc_weights[s2[1]] != 1)


def flip_phi(tau: Triangulation, k: int):
    """Flip arc k and compute both cochain transports.

    Returns (sigma, pull_ts, pull_st) where pull_ts maps each hatted arrow
    id of sigma to the list of hatted arrow ids of tau whose indicator sum
    gives the transported value, and pull_st is the map in the opposite
    direction.
    """
    sigma, _ = flip(tau, k)
    slots = tau.arc_slots(k)
    flipped = sorted({ti for ti, _ in slots})
    roles_fw, roles_bw = _flip_roles(tau, sigma, k, slots)
    pull_ts = _phi_map(sigma, tau, k, flipped, roles_fw)
    pull_st = _phi_map(tau, sigma, k, flipped, roles_bw)
    return sigma, pull_ts, pull_st


def _flip_roles(tau, sigma, k, slots):
    """Slot bookkeeping for both transport directions.

    Each direction lists, per source triangle written cyclically (k, X, Y),
    the tuple (triangle, slot of k, destination arrow X -> k, destination
    arrow k -> Y).
    """
    if len(slots) == 1:
        # One triangle: tau reads (k, P, Q) around k, sigma reads (k, Q, P).
        (ti, i) = slots[0]
        j = _slot_of(sigma, ti, ("a", k))
        fw = [(ti, j, (ti, (i + 2) % 3, 0), (ti, i, 0))]
        bw = [(ti, i, (ti, (j + 2) % 3, 0), (ti, j, 0))]
        return fw, bw
    # tau: T1 = (k, A, B) at t1, T2 = (k, C, D) at t2;
    # sigma: t1 = (k, B, C), t2 = (k, D, A).
    (t1, i1), (t2, i2) = slots
    s1 = _slot_of(sigma, t1, ("a", k))
    s2 = _slot_of(sigma, t2, ("a", k))
    fw = [
        (t1, s1, (t1, (i1 + 2) % 3, 0), (t2, i2, 0)),
        (t2, s2, (t2, (i2 + 2) % 3, 0), (t1, i1, 0)),
    ]
    bw = [
        (t1, i1, (t2, (s2 + 2) % 3, 0), (t1, s1, 0)),
        (t2, i2, (t1, (s1 + 2) % 3, 0), (t2, s2, 0)),
    ]
    return fw, bw


def _phi_map(src, dst, k, flipped, roles):
    """Images in dst of the hatted arrows of src under the transport.

    Arrows not induced by a triangle containing k map to themselves; the
    exceptional pending cases swap the epsilon arrow of a weight-1 arc with
    the unique heavy arrow of its triangle; otherwise arrows incident to k
    reverse, other triangle arrows go to the sum of the two reversals, and
    epsilon arrows pick up connecting correction arrows.
    """
    cxs = build_complex(src, hat=True)
    kweight = src.arc_weights[k]
    pending = len(src.arc_slots(k)) == 1

    if pending:
        ti = flipped[0]
        if kweight == 1 and _exceptional(src, ti):
            special = {
                companion_arrow(src, k).aid: [("eps", k)],
                ("eps", k): [companion_arrow(dst, k).aid],
            }
            return _fill_identity(cxs, special)
        if kweight == 4 and _exceptional(src, ti):
            t = src.triangles[ti]
            if isinstance(t, TwiceOrbifolded):
                other = [p for p in t.pending if p != k]
                if other and src.arc_weights[other[0]] == 1:
                    ell = other[0]
                    special = {
                        companion_arrow(src, ell).aid:
                            [companion_arrow(dst, ell).aid],
                        ("eps", ell): [("eps", ell)],
                    }
                    return _fill_identity(cxs, special)

    special = {}
    for sti, sk, x_rev, y_rev in roles:
        sx, sy = (sk + 1) % 3, (sk + 2) % 3
        if _heavy_arrow_exists(src, sti, sk):
            special[(sti, sk, 0)] = [x_rev]
        if _heavy_arrow_exists(src, sti, sy):
            special[(sti, sy, 0)] = [y_rev]
        if _heavy_arrow_exists(src, sti, sx):
            special[(sti, sx, 0)] = [x_rev, y_rev]

    have = {a.aid for a in cxs.arrows}
    for ell in _local_weight1_pendings(src, k, flipped):
        if ("eps", ell) in have:
            special[("eps", ell)] = _eps_image(dst, src, k, flipped, ell)
    return _fill_identity(cxs, special)


def _fill_identity(cxs, special):
    out = {}
    for a in cxs.arrows:
        out[a.aid] = special.get(a.aid, [a.aid])
    return out


def _local_weight1_pendings(tri, k, flipped):
    out = []
    for ti in flipped:
        t = tri.triangles[ti]
        if isinstance(t, OnceOrbifolded):
            ps = [t.pending]
        elif isinstance(t, TwiceOrbifolded):
            ps = list(t.pending)
        else:
            ps = []
        out.extend(p for p in ps if tri.arc_weights[p] == 1)
    return out


def _eps_endpoints(tri, ell):
    from .quiver import build_quivers

    for a in build_quivers(tri)["qdoubleprime"].arrows:
        if a.aid == ("eps", ell):
            return a.tail, a.head
    return None


def _eps_image(dst, src, k, flipped, ell):
    """General rule: epsilon of ell, plus a connecting arrow at each end
    where the source and destination epsilon endpoints differ."""
    es = _eps_endpoints(src, ell)
    et = _eps_endpoints(dst, ell)
    if es is None or et is None:
        raise LiftMismatch(f"epsilon arrow of {ell} lost in the flip")
    image = [("eps", ell)]
    if es[0] != et[0]:
        image.append(_connecting_arrow(dst, flipped, es[0], et[0]))
    if es[1] != et[1]:
        image.append(_connecting_arrow(dst, flipped, et[1], es[1]))
    return image


def _connecting_arrow(tau, flipped, tail, head):
    from .quiver import triangle_arrows

    hits = []
    for ti in flipped:
        for a in triangle_arrows(tau, ti):
            if (a.tail, a.head) == (tail, head) and \
                    tau.arc_weights[a.tail] != 1 and tau.arc_weights[a.head] != 1:
                hits.append(a.aid)
    if len(hits) != 1:
        raise LiftMismatch(
            f"no unique connecting arrow {tail} -> {head} near the flip"
        )
    return hits[0]


def pullback(tri_from, pull, hat_mask_from, tri_to):
    """Apply a pullback map to a hatted cochain mask on tri_from."""
    cx_from = build_complex(tri_from, hat=True)
    cx_to = build_complex(tri_to, hat=True)
    out = 0
    for i, a in enumerate(cx_to.arrows):
        val = 0
        for aid in pull[a.aid]:
            val ^= hat_mask_from >> cx_from.arrow_index(aid) & 1
        if val:
            out |= 1 << i
    return out


def colored_flip(ct: ColoredTriangulation, k: int) -> ColoredTriangulation:
    """Flip arc k and transport the coloring through the hatted complexes."""
    tau = ct.tri
    cx = build_complex(tau)
    xi_mask = mask_of(cx, ct.xi)
    xhat = hat_lift(tau, xi_mask)
    sigma, pull_ts, _ = flip_phi(tau, k)
    zhat = pullback(tau, pull_ts, xhat, sigma)
    cxs_hat = build_complex(sigma, hat=True)
    cxs = build_complex(sigma)
    zeta = 0
    for i, a in enumerate(cxs.arrows):
        if zhat >> cxs_hat.arrow_index(a.aid) & 1:
            zeta |= 1 << i
    if not cohomology(cxs).is_cocycle(zeta):
        raise LiftMismatch("transported restriction is not a cocycle")
    if hat_lift(sigma, zeta) != zhat:
        raise LiftMismatch("transported cocycle is not a lifted coloring")
    return ColoredTriangulation(sigma, frozenset(arrows_of(cxs, zeta)))


def class_coordinates(ct: ColoredTriangulation):
    """Cohomology class of the lifted coloring, as a canonical bit mask."""
    tri = ct.tri
    cx = build_complex(tri)
    ch = cohomology(build_complex(tri, hat=True))
    return ch.class_of(hat_lift(tri, mask_of(cx, ct.xi)))


def transported_key(ct: ColoredTriangulation):
    """Isomorphism-invariant key of a colored triangulation.

    Combines the canonical triangulation key with the minimal relabeled
    coloring over all label maps realizing that key.
    """
    tri = ct.tri
    key = canonical_key(tri)
    best = None
    for arc_map, order in canonical_relabelings(tri):
        tpos = {ti: new_ti for new_ti, (ti, _) in enumerate(order)}
        rots = {ti: rot for ti, rot in order}
        relabeled = []
        for aid in ct.xi:
            if aid[0] == "eps":
                relabeled.append(("eps", arc_map[aid[1]]))
            else:
                ti, slot, copy = aid
                relabeled.append((tpos[ti], (slot - rots[ti]) % 3, copy))
        cand = tuple(sorted(map(str, relabeled)))
        if best is None or cand < best:
            best = cand
    return (key, best)


def class_key(ct: ColoredTriangulation):
    """Isomorphism-invariant key of (triangulation, cohomology class).

    Minimum of transported_key over every coloring cohomologous to xi, so
    two colored triangulations get equal keys iff they are related by a
    relabeling plus a coboundary.
    """
    tri = ct.tri
    cx = build_complex(tri)
    coh = cohomology(cx)
    base = mask_of(cx, ct.xi)
    best = None
    for bits in range(1 << len(coh.coboundary_basis)):
        m = base
        for i, v in enumerate(coh.coboundary_basis):
            if bits >> i & 1:
                m ^= v
        cand = transported_key(ColoredTriangulation(
            tri, frozenset(arrows_of(cx, m))))
        if best is None or cand < best:
            best = cand
    return best


def exact_key(ct: ColoredTriangulation):
    """On-the-nose key: labeled triangles plus the coloring itself."""
    return (ct.tri.triangles, tuple(sorted(map(str, ct.xi))))


def exact_class_key(ct: ColoredTriangulation):
    """Labeled triangles plus the canonical coset of the coloring."""
    cx = build_complex(ct.tri)
    rep = cohomology(cx).class_of(mask_of(cx, ct.xi))
    return (ct.tri.triangles, rep)


def flip_graph_explore(seed: ColoredTriangulation, limit: int = 100000,
                       quotient: bool = False, canonical: bool = True):
    """Connected component of the colored flip graph.

    With canonical=True vertices are identified up to arc relabeling,
    otherwise kept as labeled gluing complexes; with quotient=True
    cohomologous colorings are identified.  Returns (set of keys,
    overflow flag).
    """
    if canonical:
        keyf = class_key if quotient else transported_key
    else:
        keyf = exact_class_key if quotient else exact_key
    start = keyf(seed)
    seen = {start: seed}
    queue = [seed]
    while queue:
        ct = queue.pop()
        for k in sorted(ct.tri.arc_weights):
            nxt = colored_flip(ct, k)
            key = keyf(nxt)
            if key not in seen:
                if len(seen) >= limit:
                    return set(seen), True
                seen[key] = nxt
                queue.append(nxt)
    return set(seen), False

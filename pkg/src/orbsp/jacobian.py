"""Jacobian algebras of species with potential, premutation and reduction.

Cyclic derivatives follow the twisted convention: each occurrence of an
arrow in a cycle contributes the rotated remainder projected by
pi_{g^{-1}}(x) = (1/d) sum_s g^{-1}(v^{-s}) x v^s over the eigenbasis of the
arrow's intersection field.  Jacobian dimensions are computed by truncated
linear algebra over GF(p); the cutoff is certified exact when it equals the
maximal marked-point valency and every path of that length falls into the
ideal.

Premutation at a vertex k replaces incident arrows by reversed star arrows
and decomposes every composite bimodule through k into twisted simple
summands via isotypic projection; the new potential is the rewritten old
one plus a pairing term between star paths and composites.  Reduction then
eliminates the degree-2 part by iterated substitution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colored import ColoredTriangulation
from .fields import FieldTower
from .linalg import SpanGF, nullspace, solve
from .pathalg import (
    EXPS,
    PathElement,
    SpeciesAlgebra,
    arrow,
    basis_keys,
    coset_reps,
    unit,
)
from .species import SpeciesData, build_potential, build_species
from .triangulation import max_valency

AUTO = "auto"


class CutoffRequired(ValueError):
    """Automatic cutoffs exist only for unpunctured surfaces."""


class NotCertified(ValueError):
    """The requested invariant needs a certified finite dimension."""


class ShortCycleThroughK(ValueError):
    """Premutation requires no potential cycle of length < 3 through k."""


class NonInvertiblePairing(ValueError):
    """The degree-2 part of the potential cannot be eliminated."""


@dataclass
class SP:
    alg: SpeciesAlgebra
    potential: PathElement
    provenance: str  # built-from-triangulation | premutated | reduced
    tmax: int | None  # certified cutoff, None for once-punctured closed


def sp_of(ct: ColoredTriangulation, tower: FieldTower,
          species: SpeciesData | None = None) -> SP:
    sp = species if species is not None else build_species(ct, tower)
    pot = build_potential(ct, tower, sp)
    t = None if ct.tri.surface.punctured_closed else max_valency(ct.tri)
    return SP(sp.algebra(), pot, "built-from-triangulation", t)


def pi_projection(x: PathElement, twist: int, d: int) -> PathElement:
    """pi_{rho^{-twist}} on paths whose endpoints share the degree-d field."""
    alg = x.alg
    tw = alg.tower
    acc = PathElement(alg)
    for s in EXPS[d]:
        acc = acc + (x.lcoef(tw.v_power(-s))
                     .rcoef(tw.v_power(s))
                     .scale(pow(tw.rho_scalar, twist * s, tw.p)))
    return acc.scale(pow(d, -1, tw.p))


def cyclic_derivative(S: PathElement, aid) -> PathElement:
    alg = S.alg
    _, head, j = alg.arrows[aid]
    d = alg.cross_weight(aid)
    out = PathElement(alg)
    for (start, arrows, exps), c in S.terms.items():
        for i, a in enumerate(arrows):
            if a != aid:
                continue
            back = PathElement(
                alg, {(head, arrows[i + 1:], exps[i + 1:]): c})
            front = PathElement(
                alg, {(start, arrows[:i], exps[:i + 1]): 1})
            out = out + pi_projection(back * front, j, d)
    return out


def cyclically_equal(S1: PathElement, S2: PathElement) -> bool:
    """True iff all cyclic derivatives of the difference vanish."""
    alg = S1.alg
    diff = S1 + PathElement(alg, S2.terms).scale(-1)
    return all(cyclic_derivative(diff, aid).is_zero() for aid in alg.arrows)


def _truncate(x: PathElement, top: int) -> PathElement:
    kept = {k: c for k, c in x.terms.items() if len(k[1]) <= top}
    return PathElement(x.alg, kept)


def _ideal_span(sp: SP, top: int):
    """Keys of degree <= top, their index, and the span of the ideal slice."""
    alg = sp.alg
    p = alg.tower.p
    keys = []
    for n in range(top + 1):
        keys.extend(basis_keys(alg, n))
    index = {k: i for i, k in enumerate(keys)}
    span = SpanGF(len(keys), p)

    def coords(x: PathElement):
        vec = [0] * len(keys)
        for k, c in x.terms.items():
            vec[index[k]] = c
        return vec

    ders = []
    for aid in alg.arrows:
        D = cyclic_derivative(sp.potential, aid)
        if not D.is_zero():
            tail, head, _ = alg.arrows[aid]
            ders.append((head, tail, D, min(len(k[1]) for k in D.terms)))
    for src, dst, D, dmin in ders:
        for u in keys:
            if alg.end_vertex(u[0], u[1]) != src:
                continue
            if len(u[1]) + dmin > top:
                continue
            left = PathElement(alg, {u: 1}) * D
            for w in keys:
                if w[0] != dst or len(u[1]) + dmin + len(w[1]) > top:
                    continue
                elem = _truncate(left * PathElement(alg, {w: 1}), top)
                if not elem.is_zero():
                    span.add(coords(elem))
    return keys, index, span, coords


def _is_homogeneous(S: PathElement) -> bool:
    lens = {len(k[1]) for k in S.terms}
    return len(lens) == 0 or (len(lens) == 1 and min(lens) >= 3)


def _lmul_key(alg, s, key, scal=1):
    x = PathElement(alg, {key: scal}).lcoef(alg.tower.v_power(s))
    (k2, c2), = x.terms.items()
    return c2, k2


def _rmul_key(alg, s, key, scal=1):
    x = PathElement(alg, {key: scal}).rcoef(alg.tower.v_power(s))
    (k2, c2), = x.terms.items()
    return c2, k2


def _graded_dims(sp: SP, top: int):
    """Graded quotient dimensions per degree for a homogeneous potential.

    Level n is built as pairs (length-1 key, class of level n-1) modulo the
    junction-field tensor relations and the images of the degree-2 cyclic
    derivatives, which keeps every computation in quotient coordinates.
    """
    from .linalg import rref

    alg = sp.alg
    p = alg.tower.p
    z = alg.tower.z
    keys1 = basis_keys(alg, 1)
    k1index = {k: i for i, k in enumerate(keys1)}
    ders = []
    for aid in alg.arrows:
        D = cyclic_derivative(sp.potential, aid)
        if not D.is_zero():
            ders.append((aid, D))
    levels = []
    for n in (0, 1):
        basis = basis_keys(alg, n)
        levels.append({
            "basis": basis,
            "index": {k: i for i, k in enumerate(basis)},
            "start": [k[0] for k in basis],
            "pair_class": None,
        })

    def act_coef(L, s, vec):
        lev = levels[L]
        out = [0] * len(lev["basis"])
        for idx, c in enumerate(vec):
            if not c:
                continue
            if L <= 1:
                c2, k2 = _lmul_key(alg, s, lev["basis"][idx], c)
                pos = lev["index"][k2]
                out[pos] = (out[pos] + c2) % p
            else:
                i1, qi = lev["basis"][idx]
                c2, k2 = _lmul_key(alg, s, keys1[i1], c)
                pc = lev["pair_class"][(k1index[k2], qi)]
                out = [(o + c2 * w) % p for o, w in zip(out, pc)]
        return out

    def act_arrow(L, aid, lead, vec, pair_space, pindex=None, npairs=0):
        """Apply v^lead * arrow on classes at level L (lead reduced mod 4)."""
        tail = alg.arrows[aid][0]
        out = [0] * (npairs if pair_space else len(levels[L + 1]["basis"]))
        if L == 0:
            for idx, c in enumerate(vec):
                if not c:
                    continue
                _, _, (t0,) = levels[0]["basis"][idx]
                got = alg.normalize(c, tail, (aid,), (lead, t0))
                if got is None:
                    continue
                c2, k2 = got
                pos = levels[1]["index"][k2]
                out[pos] = (out[pos] + c2) % p
            return out
        _, k1 = alg.normalize(1, tail, (aid,), (lead, 0))
        i1 = k1index[k1]
        for qi, c in enumerate(vec):
            if not c:
                continue
            if pair_space:
                pos = pindex[(i1, qi)]
                out[pos] = (out[pos] + c) % p
            else:
                pc = levels[L + 1]["pair_class"][(i1, qi)]
                out = [(o + c * w) % p for o, w in zip(out, pc)]
        return out

    dims = [len(levels[0]["basis"]), len(levels[1]["basis"])]
    for n in range(2, top + 1):
        prev, prev2 = levels[n - 1], levels[n - 2]
        pairs = []
        for i1, k1 in enumerate(keys1):
            hv = alg.end_vertex(k1[0], k1[1])
            for qi, sv in enumerate(prev["start"]):
                if sv == hv:
                    pairs.append((i1, qi))
        pindex = {pr: m for m, pr in enumerate(pairs)}
        rows = []
        for i1, qi in pairs:
            k1 = keys1[i1]
            hv = alg.end_vertex(k1[0], k1[1])
            for s in alg.exps(hv)[1:]:
                row = [0] * len(pairs)
                c2, k2 = _rmul_key(alg, s, k1)
                pos = pindex[(k1index[k2], qi)]
                row[pos] = (row[pos] + c2) % p
                unitv = [0] * len(prev["basis"])
                unitv[qi] = 1
                shifted = act_coef(n - 1, s, unitv)
                for qj, c in enumerate(shifted):
                    if c:
                        pos = pindex[(i1, qj)]
                        row[pos] = (row[pos] - c) % p
                if any(row):
                    rows.append(row)
        for aid, D in ders:
            dtail, dhead, _ = alg.arrows[aid]
            for t in alg.exps(dhead):
                for qi, sv in enumerate(prev2["start"]):
                    if sv != dtail:
                        continue
                    row = [0] * len(pairs)
                    unitv = [0] * len(prev2["basis"])
                    unitv[qi] = 1
                    for (st, arrs, exps), c in D.terms.items():
                        x, y = arrs
                        e0, e1, e2 = exps
                        vec1 = act_coef(n - 2, e2, unitv)
                        vec2 = act_arrow(n - 2, y, e1, vec1, False)
                        lead = t + e0
                        cc = c * pow(z, lead // 4, p) % p
                        vec3 = act_arrow(n - 1, x, lead % 4, vec2, True,
                                         pindex, len(pairs))
                        row = [(r + cc * v3) % p for r, v3 in zip(row, vec3)]
                    if any(row):
                        rows.append(row)
        red, pivots = rref(rows, p) if rows else ([], [])
        free = [m for m in range(len(pairs)) if m not in pivots]
        fpos = {m: i for i, m in enumerate(free)}
        pair_class = {}
        for m in free:
            vec = [0] * len(free)
            vec[fpos[m]] = 1
            pair_class[pairs[m]] = vec
        for rrow, pc in zip(red, pivots):
            pair_class[pairs[pc]] = [-rrow[m] % p for m in free]
        levels.append({
            "basis": [pairs[m] for m in free],
            "index": None,
            "start": [keys1[pairs[m][0]][0] for m in free],
            "pair_class": pair_class,
        })
        dims.append(len(free))
        if not free:
            dims.extend([0] * (top - n))
            break
    return dims[:top + 1]


def jacobian_dimension(sp: SP, cutoff=AUTO) -> dict:
    """Dimension of paths below the cutoff modulo the Jacobian ideal."""
    if cutoff == AUTO:
        if sp.tmax is None:
            raise CutoffRequired("no automatic cutoff on a closed surface")
        top = sp.tmax
    else:
        top = int(cutoff)
    if _is_homogeneous(sp.potential):
        dims = _graded_dims(sp, top)
        certified = cutoff == AUTO and dims[top] == 0
        return {"dim": sum(dims[:top]), "certified": certified}
    keys, index, span, coords = _ideal_span(sp, top)
    certified = cutoff == AUTO
    for k in keys:
        if len(k[1]) == top:
            if certified and any(span.reduce(coords(PathElement(sp.alg, {k: 1})))):
                certified = False
            span.add(coords(PathElement(sp.alg, {k: 1})))
    return {"dim": len(keys) - span.dim, "certified": certified}


def ideal_contains_power(sp: SP, t: int) -> bool:
    """Whether every path of length t lies in the Jacobian ideal."""
    keys, index, span, coords = _ideal_span(sp, t)
    return all(
        not any(span.reduce(coords(PathElement(sp.alg, {k: 1}))))
        for k in keys if len(k[1]) == t
    )


def center_dimension(sp: SP, cutoff=AUTO) -> int:
    """F-dimension of the center of the certified Jacobian quotient."""
    res = jacobian_dimension(sp, cutoff)
    if not res["certified"]:
        raise NotCertified("center needs a certified finite quotient")
    top = sp.tmax
    alg = sp.alg
    p = alg.tower.p
    keys, index, span, coords = _ideal_span(sp, top)
    for k in keys:
        if len(k[1]) == top:
            span.add(coords(PathElement(alg, {k: 1})))
    quotient = [k for i, k in enumerate(keys) if i not in span.pivots]
    gens = []
    for aid in alg.arrows:
        gens.append(arrow(alg, aid))
    for v in alg.weights:
        gens.append(unit(alg, v))
        if alg.weights[v] > 1:
            gens.append(unit(alg, v).lcoef(alg.tower.v_power(4 // alg.weights[v])))
    rows = []
    for g in gens:
        cols = []
        for q in quotient:
            qe = PathElement(alg, {q: 1})
            comm = _truncate(qe * g, top) + _truncate(g * qe, top).scale(-1)
            cols.append(span.reduce(coords(comm)))
        for pos in range(len(keys)):
            row = [col[pos] for col in cols]
            if any(row):
                rows.append(row)
    if not rows:
        return len(quotient)
    return len(nullspace(rows, p))


def _h_step(d1: int, d2: int) -> int:
    """Step of the subgroup generated by EXPS[d1] and EXPS[d2]."""
    return 4 // max(d1, d2)


def _composites(alg: SpeciesAlgebra, b, c):
    """Decompose the through-k bimodule of the pair (b, c).

    Returns (list of (aid, twist), expansion) where expansion maps each
    normal-form key of the pair's monomial space to its coefficients over
    the keys (composite, left exponent, right coset representative).
    """
    tw = alg.tower
    p = tw.p
    i, k, _ = alg.arrows[b]
    _, j, _ = alg.arrows[c]
    d_i, d_k, d_j = alg.weights[i], alg.weights[k], alg.weights[j]
    d_ik, d_kj = alg.cross_weight(b), alg.cross_weight(c)
    d_ij = min(d_i, d_j)
    pkeys = [(i, (b, c), (t, m, r))
             for t in EXPS[d_i]
             for m in coset_reps(d_k, d_ik)
             for r in coset_reps(d_j, d_kj)]
    index = {key: n for n, key in enumerate(pkeys)}

    def coords(x: PathElement):
        vec = [0] * len(pkeys)
        for key, cf in x.terms.items():
            vec[index[key]] = cf
        return vec

    span = SpanGF(len(pkeys), p)
    comps = []
    gens = {}
    for m in coset_reps(d_k, d_ik):
        base = PathElement(alg, {(i, (b, c), (0, m, 0)): 1})
        for twist in coset_reps(4, 4 // d_ij) if d_ij > 1 else (0,):
            g = pi_projection(base, -twist, d_ij)
            if g.is_zero() or not any(span.reduce(coords(g))):
                continue
            aid = ("comp", b, c, len(comps))
            comps.append((aid, twist))
            gens[aid] = g
            for t in EXPS[d_i]:
                for r in EXPS[d_j]:
                    span.add(coords(g.lcoef(tw.v_power(t)).rcoef(tw.v_power(r))))
    assert span.dim == len(pkeys), "composite decomposition is incomplete"
    newkeys = [(aid, t, r)
               for aid, _ in comps
               for t in EXPS[d_i]
               for r in coset_reps(d_j, d_ij)]
    cols = [coords(gens[aid].lcoef(tw.v_power(t)).rcoef(tw.v_power(r)))
            for aid, t, r in newkeys]
    mat = [[cols[n][row] for n in range(len(newkeys))]
           for row in range(len(pkeys))]
    expansion = {}
    for key in pkeys:
        rhs = [0] * len(pkeys)
        rhs[index[key]] = 1
        x = solve(mat, rhs, p)
        expansion[key] = {newkeys[n]: x[n] for n in range(len(newkeys)) if x[n]}
    return comps, expansion


def _rotate_from_k(alg: SpeciesAlgebra, key, coef, k):
    """Rotate a cyclic term until its base vertex differs from k."""
    start, arrows, exps = key
    p = alg.tower.p
    z = alg.tower.z
    for _ in range(len(arrows)):
        if start != k:
            break
        a = arrows[0]
        joined = exps[-1] + exps[0]
        coef = coef * pow(z, joined // 4, p) % p
        start = alg.arrows[a][1]
        arrows = arrows[1:] + (a,)
        exps = exps[1:-1] + (joined % 4, 0)
    if start == k:
        raise ShortCycleThroughK(f"cycle never leaves vertex {k}")
    return (start, arrows, exps), coef


def premutate(sp: SP, k) -> SP:
    alg = sp.alg
    tw = alg.tower
    for (start, arrows, exps), _ in sp.potential.terms.items():
        if len(arrows) < 3 and any(
            alg.vertex_at(start, arrows, n) == k for n in range(len(arrows))
        ):
            raise ShortCycleThroughK(f"potential cycle of length < 3 at {k}")
    if any(t == k == h for t, h, _ in alg.arrows.values()):
        raise ShortCycleThroughK(f"loop at {k}")
    incoming = [a for a, (t, h, _) in alg.arrows.items() if h == k]
    outgoing = [a for a, (t, h, _) in alg.arrows.items() if t == k]
    new_arrows = {}
    for a, (t, h, j) in alg.arrows.items():
        if k in (t, h):
            new_arrows[("star", a)] = (h, t, (-j) % 4)
        else:
            new_arrows[a] = (t, h, j)
    comp_data = {}
    for b in sorted(incoming, key=str):
        for c in sorted(outgoing, key=str):
            comps, expansion = _composites(alg, b, c)
            comp_data[(b, c)] = (comps, expansion)
            i = alg.arrows[b][0]
            j = alg.arrows[c][1]
            for aid, twist in comps:
                new_arrows[aid] = (i, j, twist)
    nalg = SpeciesAlgebra(tw, alg.weights, new_arrows)

    def expand_segment(b, s, c):
        """The segment b v^s c as a sum of decorated composite arrows."""
        i = alg.arrows[b][0]
        scal, key = alg.normalize(1, i, (b, c), (0, s, 0))
        out = PathElement(nalg)
        for (aid, t, r), cf in comp_data[(b, c)][1][key].items():
            out = out + (arrow(nalg, aid)
                         .lcoef(tw.v_power(t))
                         .rcoef(tw.v_power(r))
                         .scale(cf * scal))
        return out

    bracket = PathElement(nalg)
    for key, coef in sp.potential.terms.items():
        start, arrows, exps = key
        touches = any(alg.vertex_at(start, arrows, n) == k
                      for n in range(len(arrows) + 1))
        if not touches:
            bracket = bracket + PathElement(nalg, {key: coef})
            continue
        (start, arrows, exps), coef = _rotate_from_k(alg, key, coef, k)
        acc = PathElement(nalg, {(start, (), (exps[0],)): coef})
        n = 0
        while n < len(arrows):
            a = arrows[n]
            if alg.arrows[a][1] == k:
                acc = acc * expand_segment(a, exps[n + 1], arrows[n + 1])
                acc = acc.rcoef(tw.v_power(exps[n + 2]))
                n += 2
            else:
                acc = (acc * arrow(nalg, a)).rcoef(tw.v_power(exps[n + 1]))
                n += 1
        bracket = bracket + acc

    delta = PathElement(nalg)
    d_k = alg.weights[k]
    for b in incoming:
        for c in outgoing:
            d_ik, d_kj = alg.cross_weight(b), alg.cross_weight(c)
            step = _h_step(d_ik, d_kj)
            reps = [s for s in EXPS[d_k] if s < step]
            f = pow(2, -1, tw.p) if d_k == 4 and max(d_ik, d_kj) == 2 else 1
            cstar = arrow(nalg, ("star", c))
            bstar = arrow(nalg, ("star", b))
            for s in reps:
                term = (cstar.rcoef(tw.v_power(-s)) * bstar
                        * expand_segment(b, s, c)).scale(f)
                delta = delta + term
    return SP(nalg, bracket + delta, "premutated", sp.tmax)


def _substitute(S: PathElement, alg: SpeciesAlgebra, mapping) -> PathElement:
    """Replace arrows by path elements throughout a potential."""
    tw = alg.tower
    out = PathElement(alg)
    for (start, arrows, exps), coef in S.terms.items():
        acc = PathElement(alg, {(start, (), (exps[0],)): coef})
        for n, a in enumerate(arrows):
            acc = acc * mapping.get(a, arrow(alg, a))
            acc = acc.rcoef(tw.v_power(exps[n + 1]))
        out = out + acc
    return out


def _high_part(x: PathElement) -> PathElement:
    return PathElement(x.alg, {k: c for k, c in x.terms.items()
                               if len(k[1]) >= 2})


def reduce_sp(sp: SP, max_rounds: int = 10) -> SP:
    """Eliminate the degree-2 part of the potential by substitution."""
    alg = sp.alg
    tw = alg.tower
    p = tw.p
    S = PathElement(alg, sp.potential.terms)
    removed = set()
    while True:
        # quadratic terms pairing arrows of mismatched twists are
        # cyclically trivial and may simply be dropped
        triv = {k: c for k, c in S.terms.items() if len(k[1]) == 2 and all(
            cyclic_derivative(PathElement(alg, {k: c}), a).is_zero()
            for a in k[1])}
        S = S + PathElement(alg, triv).scale(-1)
        deg2 = sorted(k for k in S.terms if len(k[1]) == 2)
        deg2 = [k for k in deg2 if not set(k[1]) & removed]
        if not deg2:
            break
        x0, y0 = min(deg2, key=str)[1]
        i, j = alg.arrows[x0][0], alg.arrows[x0][1]
        group_x = sorted({a for key in deg2 for a in key[1]
                          if alg.arrows[a][:2] == (i, j)}, key=str)
        group_y = sorted({a for key in deg2 for a in key[1]
                          if alg.arrows[a][:2] == (j, i)}, key=str)
        S, gone = _eliminate_group(S, alg, group_x, group_y, max_rounds)
        removed.update(gone)
    for key in S.terms:
        assert not set(key[1]) & removed
    kept = {a: v for a, v in alg.arrows.items() if a not in removed}
    nalg = SpeciesAlgebra(tw, alg.weights, kept)
    return SP(nalg, PathElement(nalg, S.terms), "reduced", sp.tmax)


def _eff_twist(alg: SpeciesAlgebra, aid) -> int:
    j = alg.arrows[aid][2]
    d = alg.cross_weight(aid)
    return j % 4 if d == 4 else j % 2 if d == 2 else 0


def _decouple(S, alg, group):
    """Mix parallel same-twist arrows so fewer appear quadratically.

    When the quadratic pairing is degenerate, part of a parallel family
    survives reduction; substituting a |-> a + sum c v^t b v^r removes b
    from the quadratic part while keeping it as an arrow.
    """
    tw = alg.tower
    p = tw.p
    while True:
        quad_keys = [k for k in S.terms
                     if len(k[1]) == 2 and set(k[1]) & set(group)]
        active = sorted({a for k in quad_keys for a in k[1] if a in group},
                        key=str)
        progressed = False
        for b in active:
            others = [a for a in active
                      if a != b and alg.arrows[a][:2] == alg.arrows[b][:2]
                      and _eff_twist(alg, a) == _eff_twist(alg, b)]
            if not others:
                continue
            ti, hi = alg.arrows[b][0], alg.arrows[b][1]
            d_ij = alg.cross_weight(b)
            cands = []
            probes = []
            for a in others:
                aquad = PathElement(alg, {k: S.terms[k] for k in quad_keys
                                          if a in k[1]})
                for t in EXPS[alg.weights[ti]]:
                    for r in coset_reps(alg.weights[hi], d_ij):
                        deco = (arrow(alg, b).lcoef(tw.v_power(t))
                                .rcoef(tw.v_power(r)))
                        cands.append((a, deco))
                        probes.append(_substitute(aquad, alg, {a: deco}))
            bkeys = sorted({k for k in quad_keys if b in k[1]}
                           | {k for pr in probes for k in pr.terms}, key=str)
            kindex = {k: n for n, k in enumerate(bkeys)}
            mat = [[pr.terms.get(k, 0) for pr in probes] for k in bkeys]
            rhs = [-S.terms.get(k, 0) % p for k in bkeys]
            sol = solve(mat, rhs, p)
            if sol is None:
                continue
            mapping = {}
            for lam, (a, deco) in zip(sol, cands):
                if lam:
                    cur = mapping.setdefault(a, arrow(alg, a))
                    mapping[a] = cur + deco.scale(lam)
            if not mapping:
                continue
            S = _substitute(S, alg, mapping)
            progressed = True
            break
        if not progressed:
            return S, active


def _eliminate_group(S, alg, group_x, group_y, max_rounds):
    p = alg.tower.p
    S, group_x = _decouple(S, alg, group_x)
    S, group_y = _decouple(S, alg, group_y)
    both = set(group_x) | set(group_y)
    for _ in range(max_rounds):
        targets = {a: _high_part(cyclic_derivative(S, a))
                   for a in group_x + group_y}
        if all(t.is_zero() for t in targets.values()):
            S2 = PathElement(alg, {k: c for k, c in S.terms.items()
                                   if set(k[1]) & both})
            rest = PathElement(alg, {k: c for k, c in S2.terms.items()
                                     if len(k[1]) != 2})
            if not all(cyclic_derivative(rest, a).is_zero()
                       for a in alg.arrows):
                raise NonInvertiblePairing(
                    "leftover group terms are not cyclically trivial")
            return S + S2.scale(-1), both
        quad = PathElement(alg, {k: c for k, c in S.terms.items()
                                 if len(k[1]) == 2 and set(k[1]) <= both})
        mapping = {}
        for solve_for, via in ((group_y, group_x), (group_x, group_y)):
            degrees = {len(k[1]) for a in via for k in targets[a].terms}
            if not degrees:
                continue
            cands = []
            for a in solve_for:
                t0, h0 = alg.arrows[a][0], alg.arrows[a][1]
                for d in sorted(degrees):
                    for w in basis_keys(alg, d):
                        if (w[0] == t0 and alg.end_vertex(w[0], w[1]) == h0
                                and not set(w[1]) & both):
                            cands.append((a, w))
            tkeys = sorted({k for a in via for k in targets[a].terms})
            rows_index = [(a, k) for a in via for k in tkeys]
            rindex = {ak: n for n, ak in enumerate(rows_index)}
            mat = [[0] * len(cands) for _ in rows_index]
            for col, (a, w) in enumerate(cands):
                probe = _substitute(quad, alg,
                                    {a: PathElement(alg, {w: 1})})
                for va in via:
                    eff = cyclic_derivative(probe, va)
                    for k, c in eff.terms.items():
                        if (va, k) in rindex:
                            mat[rindex[(va, k)]][col] = c
            rhs = [0] * len(rows_index)
            for va in via:
                for k, c in targets[va].terms.items():
                    rhs[rindex[(va, k)]] = c
            sol = solve(mat, rhs, p)
            if sol is None:
                raise NonInvertiblePairing(
                    f"cannot eliminate the pair near {group_x[0]}")
            for col, (a, w) in enumerate(cands):
                if sol[col]:
                    corr = mapping.setdefault(a, PathElement(alg))
                    mapping[a] = corr + PathElement(alg, {w: sol[col]})
        full = {a: arrow(alg, a) + corr.scale(-1)
                for a, corr in mapping.items()}
        S = _substitute(S, alg, full)
    raise NonInvertiblePairing("degree-2 elimination did not converge")


def twist_signature(alg: SpeciesAlgebra):
    """Multiset of effective twists per vertex pair, order-insensitive."""
    sig = {}
    for t, h, j in alg.arrows.values():
        d = min(alg.weights[t], alg.weights[h])
        eff = j % 4 if d == 4 else j % 2 if d == 2 else 0
        sig.setdefault((t, h), []).append(eff)
    return {k: tuple(sorted(v)) for k, v in sig.items()}

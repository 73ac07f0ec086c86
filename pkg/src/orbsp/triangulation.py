"""Gluing complexes of the three puzzle-piece triangle types, and flips.

A triangulation is a list of typed triangles over a validated surface.
Sides are tagged arcs or boundary segments.  Slot order encodes the surface
orientation: an ordinary triangle stores its three sides in cyclic order, a
once-orbifolded triangle has cyclic order (outer[0], pending, outer[1]) and
a twice-orbifolded one (outer, pending[0], pending[1]).  The ordered outer
pair of a once-orbifolded triangle determines which digon vertex the pending
arc is based at, so flipping a pending arc swaps the pair.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass

from .surface import Surface, closed_form_counts, validate_surface

Side = tuple[str, int]


def arc(i: int) -> Side:
    return ("a", i)


def bnd(i: int) -> Side:
    return ("b", i)


def is_arc(s: Side) -> bool:
    return s[0] == "a"


class BadIncidence(ValueError):
    """An arc or boundary id fills the wrong number of slots."""


class BadCounts(ValueError):
    """Arc or triangle totals disagree with the closed-form counts."""


class Disconnected(ValueError):
    """The gluing complex is not connected."""


class BadOrbifold(ValueError):
    """An orbifold id is reused or missing."""


class NotAnArc(ValueError):
    """The requested flip target is a boundary segment or unknown."""


@dataclass(frozen=True)
class Ordinary:
    sides: tuple[Side, Side, Side]

    def cyclic(self):
        return tuple((s, None) for s in self.sides)


@dataclass(frozen=True)
class OnceOrbifolded:
    outer: tuple[Side, Side]
    pending: int
    orb: int

    def cyclic(self):
        return (
            (self.outer[0], None),
            (arc(self.pending), self.orb),
            (self.outer[1], None),
        )


@dataclass(frozen=True)
class TwiceOrbifolded:
    outer: Side
    pending: tuple[int, int]
    orbs: tuple[int, int]

    def cyclic(self):
        return (
            (self.outer, None),
            (arc(self.pending[0]), self.orbs[0]),
            (arc(self.pending[1]), self.orbs[1]),
        )


Triangle = Ordinary | OnceOrbifolded | TwiceOrbifolded


def from_cyclic(triple) -> Triangle:
    """Rebuild a typed triangle from three (side, orb-or-None) slots."""
    pend = [i for i, (_, q) in enumerate(triple) if q is not None]
    if not pend:
        return Ordinary(tuple(s for s, _ in triple))
    if len(pend) == 1:
        i = pend[0]
        before, (p, q), after = triple[i - 1], triple[i], triple[(i + 1) % 3]
        return OnceOrbifolded((before[0], after[0]), p[1], q)
    if len(pend) == 2:
        i = next(i for i in range(3) if triple[i][1] is None)
        (s, _), (p0, q0), (p1, q1) = triple[i], triple[(i + 1) % 3], triple[(i + 2) % 3]
        return TwiceOrbifolded(s, (p0[1], p1[1]), (q0, q1))
    raise BadOrbifold("a triangle cannot contain three orbifold points")


class Triangulation:
    """Validated gluing complex with per-arc weights."""

    def __init__(self, surface: Surface, triangles: tuple[Triangle, ...],
                 arc_weights: dict[int, int], _token=None):
        if _token is not _BUILD_TOKEN:
            raise TypeError("use build_triangulation")
        self.surface = surface
        self.triangles = triangles
        self.arc_weights = arc_weights
        self._key = None

    @property
    def arcs(self) -> list[int]:
        return sorted(self.arc_weights)

    def pending_orb(self, k: int):
        """Orbifold id on pending arc k, or None."""
        for t in self.triangles:
            for s, q in t.cyclic():
                if q is not None and s == arc(k):
                    return q
        return None

    def arc_slots(self, k: int):
        """All (triangle index, cyclic slot) pairs holding arc k."""
        out = []
        for ti, t in enumerate(self.triangles):
            for i, (s, _) in enumerate(t.cyclic()):
                if s == arc(k):
                    out.append((ti, i))
        return out

    def to_json(self) -> dict:
        out = []
        for t in self.triangles:
            if isinstance(t, Ordinary):
                out.append({"kind": "ord", "sides": [_side_name(s) for s in t.sides]})
            elif isinstance(t, OnceOrbifolded):
                out.append({
                    "kind": "once",
                    "outer": [_side_name(s) for s in t.outer],
                    "pending": _side_name(arc(t.pending)),
                    "orb": f"q{t.orb}",
                })
            else:
                out.append({
                    "kind": "twice",
                    "outer": _side_name(t.outer),
                    "pending": [_side_name(arc(p)) for p in t.pending],
                    "orbs": [f"q{q}" for q in t.orbs],
                })
        return {"triangles": out}

    def __eq__(self, other):
        return (isinstance(other, Triangulation)
                and self.surface == other.surface
                and self.triangles == other.triangles)

    def __hash__(self):
        return hash((self.surface, self.triangles))


_BUILD_TOKEN = object()


def _side_name(s: Side) -> str:
    return f"{s[0]}{s[1]}"


def _parse_side(name: str) -> Side:
    return (name[0], int(name[1:]))


def triangulation_from_json(surface: Surface, obj: dict) -> Triangulation:
    tris = []
    for t in obj["triangles"]:
        if t["kind"] == "ord":
            tris.append(Ordinary(tuple(_parse_side(s) for s in t["sides"])))
        elif t["kind"] == "once":
            tris.append(OnceOrbifolded(
                tuple(_parse_side(s) for s in t["outer"]),
                _parse_side(t["pending"])[1],
                int(t["orb"][1:]),
            ))
        else:
            tris.append(TwiceOrbifolded(
                _parse_side(t["outer"]),
                tuple(_parse_side(s)[1] for s in t["pending"]),
                tuple(int(q[1:]) for q in t["orbs"]),
            ))
    return build_triangulation(surface, tris)


def _corners(triangles):
    """Union-find over triangle corners; corner (ti, i) follows slot i.

    Gluing a non-pending arc identifies corners crosswise; the two sides of
    a pending arc meet at its base vertex, identifying the corners around
    its single slot.
    """
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    slots = defaultdict(list)
    for ti, t in enumerate(triangles):
        for i, (s, q) in enumerate(t.cyclic()):
            find((ti, i))
            if is_arc(s):
                if q is None:
                    slots[s[1]].append((ti, i))
                else:
                    union((ti, i), (ti, (i - 1) % 3))
    for k, occ in slots.items():
        if len(occ) == 2:
            (t1, i1), (t2, i2) = occ
            union((t1, i1), (t2, (i2 - 1) % 3))
            union((t1, (i1 - 1) % 3), (t2, i2))
    return find


def marked_point_data(tri: Triangulation):
    """Vertex classes, arc valencies, and boundary cycle lengths."""
    find = _corners(tri.triangles)
    valency = Counter()
    classes = set()
    for ti in range(len(tri.triangles)):
        for i in range(3):
            classes.add(find((ti, i)))
    for k in tri.arc_weights:
        ti, i = tri.arc_slots(k)[0]
        _, q = tri.triangles[ti].cyclic()[i]
        if q is None:
            valency[find((ti, i))] += 1
            valency[find((ti, (i - 1) % 3))] += 1
        else:
            valency[find((ti, i))] += 1
    # boundary segments form a disjoint union of cycles through the classes
    bedges = []
    for ti, t in enumerate(tri.triangles):
        for i, (s, _) in enumerate(t.cyclic()):
            if not is_arc(s):
                bedges.append((find((ti, (i - 1) % 3)), find((ti, i))))
    comp = {}

    def root(x):
        while comp.setdefault(x, x) != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for a, b in bedges:
        comp[root(a)] = root(b)
    sizes = Counter(root(a) for a, _ in bedges)
    return classes, valency, sorted(sizes.values())


def max_valency(tri: Triangulation) -> int:
    """Largest number of arc ends at a marked point (loops count twice)."""
    _, valency, _ = marked_point_data(tri)
    return max(valency.values()) if valency else 0


def build_triangulation(surface: Surface, triangles) -> Triangulation:
    surface = surface if surface.validated else validate_surface(surface)
    triangles = tuple(triangles)
    counts = closed_form_counts(surface)

    arc_plain = Counter()
    arc_pend = Counter()
    bnd_seen = Counter()
    orb_seen = Counter()
    pend_orb = {}
    for t in triangles:
        plain_sides = [s for s, q in t.cyclic() if is_arc(s) and q is None]
        if len(set(plain_sides)) < len(plain_sides):
            raise BadIncidence("self-folded triangle: repeated arc in one triangle")
        for s, q in t.cyclic():
            if is_arc(s):
                if q is None:
                    arc_plain[s[1]] += 1
                else:
                    arc_pend[s[1]] += 1
                    orb_seen[q] += 1
                    pend_orb[s[1]] = q
            else:
                bnd_seen[s[1]] += 1
        if isinstance(t, TwiceOrbifolded):
            if t.orbs[0] == t.orbs[1]:
                raise BadOrbifold("orbifold id repeated inside one triangle")
            if t.pending[0] == t.pending[1]:
                raise BadIncidence("pending arc repeated inside one triangle")

    for k in arc_pend:
        if arc_pend[k] != 1 or arc_plain.get(k, 0) != 0:
            raise BadIncidence(f"pending arc {k} must fill exactly one pending slot")
    for k in arc_plain:
        if arc_plain[k] != 2:
            raise BadIncidence(f"arc {k} fills {arc_plain[k]} slots, expected 2")
    arcs = set(arc_plain) | set(arc_pend)
    if arcs and sorted(arcs) != list(range(len(arcs))):
        raise BadIncidence("arc ids must be dense 0..e-1")
    m = surface.m if not surface.punctured_closed else 0
    if sorted(bnd_seen) != list(range(m)) or any(v != 1 for v in bnd_seen.values()):
        raise BadIncidence("each boundary id must fill exactly one slot")
    if sorted(orb_seen) != list(range(surface.o)) or any(v != 1 for v in orb_seen.values()):
        raise BadOrbifold("each orbifold id must fill exactly one pending slot")

    if len(arcs) != counts.e or len(triangles) != counts.h:
        raise BadCounts(
            f"got {len(arcs)} arcs / {len(triangles)} triangles, "
            f"expected e={counts.e}, h={counts.h}"
        )

    # connectivity of the gluing complex through shared arcs
    adj = defaultdict(set)
    where = defaultdict(list)
    for ti, t in enumerate(triangles):
        for s, _ in t.cyclic():
            if is_arc(s):
                where[s[1]].append(ti)
    for occ in where.values():
        for x in occ:
            for y in occ:
                adj[x].add(y)
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(triangles):
        raise Disconnected("gluing complex is not connected")

    weights = {}
    for k in arcs:
        if k in pend_orb:
            weights[k] = surface.orbifold_weights[pend_orb[k]]
        else:
            weights[k] = 2

    tri = Triangulation(surface, triangles, weights, _token=_BUILD_TOKEN)

    classes, _, bcycles = marked_point_data(tri)
    expected_m = 1 if surface.punctured_closed else surface.m
    if len(classes) != expected_m:
        raise BadIncidence(
            f"found {len(classes)} marked points, expected {expected_m}"
        )
    if not surface.punctured_closed:
        if sorted(bcycles) != sorted(surface.boundary_marked):
            raise BadIncidence(
                f"boundary cycles {bcycles} do not match {surface.boundary_marked}"
            )
    return tri


def census(tri: Triangulation) -> dict[tuple[int, int], int]:
    """Table h_pq: triangles by boundary-side count p and weight-1 orb count q."""
    table = Counter()
    for t in tri.triangles:
        p = sum(1 for s, _ in t.cyclic() if not is_arc(s))
        q = sum(
            1 for s, orb in t.cyclic()
            if orb is not None and tri.surface.orbifold_weights[orb] == 1
        )
        table[(p, q)] += 1
    return dict(table)


def flip(tri: Triangulation, k: int):
    """Flip arc k; returns (new triangulation, arc correspondence).

    The replacement arc reuses id k, so the correspondence is the identity.
    """
    if k not in tri.arc_weights:
        raise NotAnArc(f"{k} is not an arc of this triangulation")
    slots = tri.arc_slots(k)
    triangles = list(tri.triangles)
    if len(slots) == 1:
        ti, i = slots[0]
        t = triangles[ti]
        if isinstance(t, OnceOrbifolded):
            triangles[ti] = OnceOrbifolded((t.outer[1], t.outer[0]), k, t.orb)
        else:
            triangles[ti] = TwiceOrbifolded(
                t.outer, (t.pending[1], t.pending[0]), (t.orbs[1], t.orbs[0])
            )
    else:
        (t1, i1), (t2, i2) = slots
        c1 = _rotate(tri.triangles[t1].cyclic(), i1)
        c2 = _rotate(tri.triangles[t2].cyclic(), i2)
        _, a_, b_ = c1
        _, c_, d_ = c2
        new1 = from_cyclic(((arc(k), None), b_, c_))
        new2 = from_cyclic(((arc(k), None), d_, a_))
        triangles[t1], triangles[t2] = new1, new2
    out = build_triangulation(tri.surface, triangles)
    corr = {a: a for a in tri.arc_weights}
    return out, corr


def _rotate(triple, i):
    return (triple[i], triple[(i + 1) % 3], triple[(i + 2) % 3])


def canonical_key(tri: Triangulation) -> bytes:
    """Deterministic key, equal iff triangulations are isomorphic by an
    arc/orbifold relabeling that fixes boundary ids and preserves weights."""
    if tri._key is not None:
        return tri._key
    best = None
    n = len(tri.triangles)
    where = defaultdict(list)
    for ti, t in enumerate(tri.triangles):
        for i, (s, q) in enumerate(t.cyclic()):
            if is_arc(s) and q is None:
                where[s[1]].append((ti, i))
    for start in range(n):
        rots = range(3) if isinstance(tri.triangles[start], Ordinary) else (0,)
        for r in rots:
            key, _, _ = _traverse(tri, start, r, where)
            if best is None or key < best:
                best = key
    tri._key = best
    return best


def _traverse(tri, start, rot, where):
    """BFS labeling from one anchor; returns (key, arc relabel map, order).

    The order lists (triangle index, rotation) in traversal sequence; two
    traversals with equal keys define an isomorphism of gluing complexes.
    Boundary segment and orbifold ids are fixed points of the surface and
    are never relabeled; only arcs are.
    """
    arc_map = {}
    out = []
    order = []
    seen = {start}
    queue = deque([(start, rot)])
    while queue:
        ti, r = queue.popleft()
        t = tri.triangles[ti]
        triple = t.cyclic()
        if isinstance(t, Ordinary):
            triple = _rotate(triple, r)
        order.append((ti, r))
        rec = [type(t).__name__[:2]]
        for s, q in triple:
            if is_arc(s):
                a = arc_map.setdefault(s[1], len(arc_map))
                rec.append(f"a{a}")
                if q is not None:
                    rec.append(f"q{q}w{tri.surface.orbifold_weights[q]}")
            else:
                rec.append(f"b{s[1]}")
        out.append(",".join(rec))
        for s, q in triple:
            if is_arc(s) and q is None:
                for tj, j in where[s[1]]:
                    if tj not in seen:
                        seen.add(tj)
                        rj = j if isinstance(tri.triangles[tj], Ordinary) else 0
                        queue.append((tj, rj))
    return ";".join(out).encode(), arc_map, order


def canonical_relabelings(tri: Triangulation):
    """All (arc map, traversal order) pairs realizing the canonical key."""
    best = canonical_key(tri)
    n = len(tri.triangles)
    where = defaultdict(list)
    for ti, t in enumerate(tri.triangles):
        for i, (s, q) in enumerate(t.cyclic()):
            if is_arc(s) and q is None:
                where[s[1]].append((ti, i))
    maps = []
    for start in range(n):
        rots = range(3) if isinstance(tri.triangles[start], Ordinary) else (0,)
        for r in rots:
            key, arc_map, order = _traverse(tri, start, r, where)
            if key == best:
                maps.append((arc_map, order))
    return maps


def enumerate_flip_orbit(seed: Triangulation, limit: int):
    """BFS closure of the flip move, deduplicated by canonical key."""
    if limit <= 0:
        raise ValueError("limit must be positive")
    seen = {canonical_key(seed)}
    queue = deque([seed])
    overflow = False
    while queue:
        t = queue.popleft()
        for k in t.arcs:
            nxt, _ = flip(t, k)
            key = canonical_key(nxt)
            if key not in seen:
                if len(seen) >= limit:
                    overflow = True
                    continue
                seen.add(key)
                queue.append(nxt)
    return seen, overflow

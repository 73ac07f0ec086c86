"""Monomial path algebra of a species over a finite-field tower.

Vertices carry subfields of E = GF(p^4) by weight (1, 2, 4 for F, L, E) and
every arrow carries a twist, a power j of the Frobenius generator rho.  A
coefficient v^t crossing an arrow from right to left picks up the eigenvalue
rho_scalar^(j*t).  Elements are kept in a normal form where coefficients are
pushed maximally left; what remains in the middle slots are canonical coset
representatives, so equality is a dict comparison.

Paths compose left to right: in a product a b, the head of a is the tail
of b.  A term is (start vertex, arrow tuple, exponent tuple), the exponent
tuple holding one v-exponent per slot including the leading slot.
"""

from __future__ import annotations

from .fields import FieldTower

EXPS = {1: (0,), 2: (0, 2), 4: (0, 1, 2, 3)}


def coset_reps(big: int, small: int):
    """Representatives of EXPS[big] modulo the subgroup EXPS[small]."""
    if small == 1:
        return EXPS[big]
    if small == big:
        return (0,)
    return (0, 1)  # big 4 over small 2


def _split(t: int, small: int):
    """t = rep + movable with movable in EXPS[small]; no mod-4 carry."""
    if small == 1:
        return t, 0
    if small == 4:
        return 0, t
    return t % 2, t - t % 2


class SpeciesAlgebra:
    """Quiver data with twists, shared by path elements."""

    def __init__(self, tower: FieldTower, weights: dict, arrows: dict):
        """arrows: aid -> (tail, head, twist power of rho)."""
        self.tower = tower
        self.weights = dict(weights)
        self.arrows = dict(arrows)

    def exps(self, v):
        return EXPS[self.weights[v]]

    def cross_weight(self, aid) -> int:
        t, h, _ = self.arrows[aid]
        return min(self.weights[t], self.weights[h])

    def vertex_at(self, start, arrows, i):
        return start if i == 0 else self.arrows[arrows[i - 1]][1]

    def end_vertex(self, start, arrows):
        return self.vertex_at(start, arrows, len(arrows))

    def normalize(self, scalar, start, arrows, exps):
        """Push movable exponents left; returns (scalar, key) or None."""
        tw = self.tower
        p = tw.p
        lam = tw.rho_scalar
        e = list(exps)
        for i in range(len(arrows), 0, -1):
            rep, mov = _split(e[i], self.cross_weight(arrows[i - 1]))
            if mov:
                j = self.arrows[arrows[i - 1]][2]
                scalar = scalar * pow(lam, (j % 4) * mov, p) % p
                e[i] = rep
                s = e[i - 1] + mov
                scalar = scalar * pow(tw.z, s // 4, p) % p
                e[i - 1] = s % 4
        scalar %= p
        if not scalar:
            return None
        return scalar, (start, tuple(arrows), tuple(e))

    def eigen(self, aid, t) -> int:
        """Scalar picked up by v^t crossing arrow aid right to left."""
        j = self.arrows[aid][2]
        return pow(self.tower.rho_scalar, (j % 4) * t, self.tower.p)


class PathElement:
    """F-linear combination of normal-form terms."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: SpeciesAlgebra, terms=None):
        self.alg = alg
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c %= alg.tower.p
                if c:
                    self.terms[key] = c

    def _acc(self, scalar, start, arrows, exps):
        out = self.alg.normalize(scalar, start, arrows, exps)
        if out is None:
            return
        c, key = out
        c = (self.terms.get(key, 0) + c) % self.alg.tower.p
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)

    def copy(self):
        return PathElement(self.alg, dict(self.terms))

    def __add__(self, other):
        out = self.copy()
        for key, c in other.terms.items():
            out._acc(c, *key)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int):
        p = self.alg.tower.p
        return PathElement(self.alg,
                           {k: v * c % p for k, v in self.terms.items()})

    def __mul__(self, other):
        alg = self.alg
        tw = alg.tower
        out = PathElement(alg)
        for (s1, a1, e1), c1 in self.terms.items():
            end = alg.end_vertex(s1, a1)
            for (s2, a2, e2), c2 in other.terms.items():
                if s2 != end:
                    continue
                j = e1[-1] + e2[0]
                c = c1 * c2 * pow(tw.z, j // 4, tw.p) % tw.p
                out._acc(c, s1, a1 + a2, e1[:-1] + (j % 4,) + e2[1:])
        return out

    def lcoef(self, vec):
        """Left multiply by a field element at the start vertex."""
        alg = self.alg
        tw = alg.tower
        out = PathElement(alg)
        for (s, a, e), c in self.terms.items():
            allowed = set(alg.exps(s))
            for t, x in enumerate(vec):
                if not x:
                    continue
                if t not in allowed:
                    raise ValueError(f"v^{t} not in the field at {s}")
                j = t + e[0]
                cc = c * x * pow(tw.z, j // 4, tw.p) % tw.p
                out._acc(cc, s, a, (j % 4,) + e[1:])
        return out

    def rcoef(self, vec):
        """Right multiply by a field element at the end vertex."""
        alg = self.alg
        tw = alg.tower
        out = PathElement(alg)
        for (s, a, e), c in self.terms.items():
            allowed = set(alg.exps(alg.end_vertex(s, a)))
            for t, x in enumerate(vec):
                if not x:
                    continue
                if t not in allowed:
                    raise ValueError("coefficient outside the endpoint field")
                j = e[-1] + t
                cc = c * x * pow(tw.z, j // 4, tw.p) % tw.p
                out._acc(cc, s, a, e[:-1] + (j % 4,))
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, PathElement) and self.terms == other.terms

    def __repr__(self):
        bits = []
        for (s, a, e), c in sorted(self.terms.items(), key=str):
            word = [f"{c}*e_{s}"] if e[0] == 0 else [f"{c}*e_{s} v^{e[0]}"]
            for aid, t in zip(a, e[1:]):
                word.append(str(aid))
                if t:
                    word.append(f"v^{t}")
            bits.append(" ".join(word))
        return " + ".join(bits) if bits else "0"


def unit(alg: SpeciesAlgebra, vertex) -> PathElement:
    return PathElement(alg, {(vertex, (), (0,)): 1})


def arrow(alg: SpeciesAlgebra, aid) -> PathElement:
    tail = alg.arrows[aid][0]
    return PathElement(alg, {(tail, (aid,), (0, 0)): 1})


def element(alg: SpeciesAlgebra, vertex, vec) -> PathElement:
    """A field coefficient sitting at a vertex, as a length-0 path."""
    return unit(alg, vertex).lcoef(vec)


def path(alg: SpeciesAlgebra, *factors) -> PathElement:
    """Product of arrow ids and coefficient 4-vectors, left to right."""
    out = None
    for f in factors:
        cur = arrow(alg, f) if f in alg.arrows else None
        if cur is None:
            if out is None:
                raise ValueError("path cannot start with a bare coefficient")
            out = out.rcoef(f)
            continue
        out = cur if out is None else out * cur
    return out


def basis_keys(alg: SpeciesAlgebra, length: int):
    """All normal-form term keys with exactly `length` arrows."""
    outs = []

    def walk(start, arrows, exps):
        if len(arrows) == length:
            outs.append((start, tuple(arrows), tuple(exps)))
            return
        end = alg.end_vertex(start, tuple(arrows))
        for aid, (t, h, _) in alg.arrows.items():
            if t != end:
                continue
            w = alg.weights[h]
            for r in coset_reps(w, alg.cross_weight(aid)):
                walk(start, arrows + [aid], exps + [r])

    for v in alg.weights:
        for t0 in alg.exps(v):
            walk(v, [], [t0])
    return outs


def all_basis_keys(alg: SpeciesAlgebra, below: int):
    out = []
    for n in range(below):
        out.extend(basis_keys(alg, n))
    return out

"""Independent truncated-linear-algebra oracle for Jacobian dimensions.

Standalone: no package imports.  Quivers, twists and potentials are written
out by hand for the trivial cocycle; the monomial engine here pushes
v-exponents to the RIGHT (the package pushes left), so agreement is a real
cross-check and not a shared normal form.

Conventions: p = 5, z = 2 (smallest non-residue), E = GF(5)[v]/(v^4 - 2),
lam = z^((p-1)/4) = 2, and an arrow with twist j satisfies
v^s a = lam^(-j*s) a v^s.  Weights 1, 2, 4 carry F, L = F(v^2), E.
"""

P = 5
Z = 2
LAM = 2

EXPS = {1: (0,), 2: (0, 2), 4: (0, 1, 2, 3)}


def coset_reps(big, small):
    if small == 1:
        return EXPS[big]
    if small == big:
        return (0,)
    return (0, 1)


def split_right(t, small):
    """t = rep + movable with movable in the subgroup EXPS[small]."""
    if small == 1:
        return t, 0
    if small == 4:
        return 0, t
    return t % 2, t - t % 2


class Quiver:
    def __init__(self, weights, arrows):
        """weights: vertex -> 1|2|4; arrows: name -> (tail, head, twist)."""
        self.weights = weights
        self.arrows = arrows

    def cross(self, a):
        t, h, _ = self.arrows[a]
        return min(self.weights[t], self.weights[h])

    def end(self, start, arrows):
        return self.arrows[arrows[-1]][1] if arrows else start

    def normalize(self, scalar, start, arrows, exps):
        """Push movable exponents right; returns (scalar, key) or None."""
        e = list(exps)
        for i in range(len(arrows)):
            rep, mov = split_right(e[i], self.cross(arrows[i]))
            if mov:
                j = self.arrows[arrows[i]][2]
                scalar = scalar * pow(LAM, (-j % 4) * mov, P) % P
                e[i] = rep
                s = e[i + 1] + mov
                scalar = scalar * pow(Z, s // 4, P) % P
                e[i + 1] = s % 4
        scalar %= P
        if not scalar:
            return None
        return scalar, (start, tuple(arrows), tuple(e))


def acc(q, terms, scalar, start, arrows, exps):
    out = q.normalize(scalar, start, arrows, exps)
    if out is None:
        return
    c, key = out
    c = (terms.get(key, 0) + c) % P
    if c:
        terms[key] = c
    else:
        terms.pop(key, None)


def mul(q, t1, t2):
    out = {}
    for (s1, a1, e1), c1 in t1.items():
        for (s2, a2, e2), c2 in t2.items():
            if s2 != q.end(s1, a1):
                continue
            j = e1[-1] + e2[0]
            c = c1 * c2 * pow(Z, j // 4, P) % P
            acc(q, out, c, s1, a1 + a2, e1[:-1] + (j % 4,) + e2[1:])
    return out


def vmul(q, terms, s, side):
    """Multiply by v^s on the left or right (s may be negative)."""
    c0 = 1
    if s < 0:
        c0 = pow(pow(Z, (-s + 3) // 4, P), -1, P)
        s %= 4
    out = {}
    for (st, a, e), c in terms.items():
        if side == "l":
            j = s + e[0]
            acc(q, out, c * c0 * pow(Z, j // 4, P), st, a, (j % 4,) + e[1:])
        else:
            j = e[-1] + s
            acc(q, out, c * c0 * pow(Z, j // 4, P), st, a, e[:-1] + (j % 4,))
    return out


def pi(q, terms, twist, d):
    """pi_{rho^-twist}: average of lam^(twist*s) v^-s x v^s over EXPS[d]."""
    out = {}
    for s in EXPS[d]:
        mid = vmul(q, vmul(q, terms, -s, "l"), s, "r")
        f = pow(LAM, (twist % 4) * s, P)
        for k, c in mid.items():
            c = (out.get(k, 0) + c * f) % P
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    dinv = pow(d, -1, P)
    return {k: c * dinv % P for k, c in out.items()}


def cyclic_derivative(q, S, aid):
    _, head, j = q.arrows[aid]
    d = q.cross(aid)
    out = {}
    for (start, arrows, exps), c in S.items():
        for i, a in enumerate(arrows):
            if a != aid:
                continue
            back = {(head, arrows[i + 1:], exps[i + 1:]): c}
            front = {(start, arrows[:i], exps[:i + 1]): 1}
            for k, cc in pi(q, mul(q, back, front), j, d).items():
                v = (out.get(k, 0) + cc) % P
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return out


def basis(q, length):
    outs = []

    def walk(start, arrows, exps):
        if len(arrows) == length:
            v = q.end(start, arrows)
            for t in EXPS[q.weights[v]]:
                outs.append((start, tuple(arrows), tuple(exps) + (t,)))
            return
        here = q.end(start, arrows)
        for aid, (t, h, _) in q.arrows.items():
            if t != here:
                continue
            for r in coset_reps(q.weights[here], q.cross(aid)):
                walk(start, arrows + [aid], exps + [r])

    for v in q.weights:
        if length == 0:
            for t in EXPS[q.weights[v]]:
                outs.append((v, (), (t,)))
        else:
            walk(v, [], [])
    return outs


class Span:
    def __init__(self, n):
        self.n = n
        self.pivots = {}

    def add(self, vec):
        v = list(vec)
        for c, row in self.pivots.items():
            if v[c]:
                f = v[c]
                v = [(x - f * y) % P for x, y in zip(v, row)]
        lead = next((i for i in range(self.n) if v[i]), None)
        if lead is None:
            return False
        inv = pow(v[lead], -1, P)
        self.pivots[lead] = [x * inv % P for x in v]
        return True

    @property
    def dim(self):
        return len(self.pivots)


def jacobian_dims(q, S, top):
    keys = []
    for n in range(top + 1):
        keys.extend(basis(q, n))
    index = {k: i for i, k in enumerate(keys)}

    def coords(terms):
        vec = [0] * len(keys)
        for k, c in terms.items():
            vec[index[k]] = c
        return vec

    span = Span(len(keys))
    ders = [cyclic_derivative(q, S, a) for a in q.arrows]
    ders = [d for d in ders if d]
    for D in ders:
        dmin = min(len(k[1]) for k in D)
        for u in keys:
            if len(u[1]) + dmin > top:
                continue
            left = mul(q, {u: 1}, D)
            if not left:
                continue
            for w in keys:
                if len(u[1]) + dmin + len(w[1]) > top:
                    continue
                el = mul(q, left, {w: 1})
                el = {k: c for k, c in el.items() if len(k[1]) <= top}
                if el:
                    span.add(coords(el))
    for k in keys:
        if len(k[1]) == top:
            span.add(coords({k: 1}))
    return len(keys) - span.dim


def center_dim(q, S, top):
    keys = []
    for n in range(top + 1):
        keys.extend(basis(q, n))
    index = {k: i for i, k in enumerate(keys)}

    def coords(terms):
        vec = [0] * len(keys)
        for k, c in terms.items():
            vec[index[k]] = c
        return vec

    span = Span(len(keys))
    for a in q.arrows:
        D = cyclic_derivative(q, S, a)
        if D:
            for u in keys:
                for w in keys:
                    el = mul(q, mul(q, {u: 1}, D), {w: 1})
                    el = {k: c for k, c in el.items() if len(k[1]) <= top}
                    if el:
                        span.add(coords(el))
    for k in keys:
        if len(k[1]) == top:
            span.add(coords({k: 1}))
    quot = [k for i, k in enumerate(keys) if i not in span.pivots]
    gens = []
    for a, (t, h, j) in q.arrows.items():
        gens.append({(t, (a,), (0, 0)): 1})
    for v, w in q.weights.items():
        gens.append({(v, (), (0,)): 1})
        if w > 1:
            gens.append({(v, (), (4 // w,)): 1})

    def reduce_vec(vec):
        v = list(vec)
        for c, row in span.pivots.items():
            if v[c]:
                f = v[c]
                v = [(x - f * y) % P for x, y in zip(v, row)]
        return v

    rows = []
    for g in gens:
        cols = []
        for k in quot:
            lhs = mul(q, {k: 1}, g)
            rhs = mul(q, g, {k: 1})
            comm = {kk: c for kk, c in lhs.items() if len(kk[1]) <= top}
            for kk, c in rhs.items():
                if len(kk[1]) <= top:
                    comm[kk] = (comm.get(kk, 0) - c) % P
            cols.append(reduce_vec(coords(comm)))
        for pos in range(len(keys)):
            row = [col[pos] for col in cols]
            if any(row):
                rows.append(row)
    if not rows:
        return len(quot)
    sp = Span(len(quot))
    for r in rows:
        sp.add(r)
    return len(quot) - sp.dim


def hexagon_core(w):
    weights = {0: 2, 1: 2, 2: 2, 3: 2, 4: w}
    arrows = {
        "al": (0, 3, 0), "be": (3, 2, 0), "ga": (2, 0, 0),
        "de": (1, 4, 0), "et": (4, 3, 0), "nu": (3, 1, 0),
    }
    q = Quiver(weights, arrows)
    S = {}
    for cyc in (("al", "be", "ga"), ("de", "et", "nu")):
        start = arrows[cyc[0]][0]
        acc(q, S, 1, start, cyc, (0, 0, 0, 0))
    return q, S, 4


def pentagon_core(w0, w1):
    weights = {0: 2, 1: 2, 2: 2, 3: 2, 4: w0, 5: w1}
    arrows = {
        "ka": (1, 0, 0),
        "al": (1, 3, 0), "be": (3, 2, 0), "ga": (2, 1, 0),
        "g0": (3, 4, 0), "d0": (4, 5, 0), "b0": (5, 3, 0),
    }
    if w0 == w1:
        arrows["d1"] = (4, 5, 0 if w0 == 1 else 2)
    q = Quiver(weights, arrows)
    S = {}
    acc(q, S, 1, 1, ("al", "be", "ga"), (0, 0, 0, 0))
    if w0 == 1 == w1:
        acc(q, S, 1, 4, ("d0", "b0", "g0"), (0, 0, 0, 0))
        acc(q, S, 1, 4, ("d1", "b0", "g0"), (0, 0, 2, 0))
    elif w0 == 4 == w1:
        acc(q, S, 1, 4, ("d0", "b0", "g0"), (0, 0, 0, 0))
        acc(q, S, 1, 4, ("d1", "b0", "g0"), (0, 0, 0, 0))
    else:
        acc(q, S, 1, 3, ("g0", "d0", "b0"), (0, 0, 0, 0))
    return q, S, 6


def annulus(j2):
    weights = {0: 2, 1: 2}
    arrows = {"a1": (0, 1, 0), "a2": (0, 1, j2)}
    return Quiver(weights, arrows), {}, 2


def main():
    print("jacobian dimensions (p=5, trivial cocycle):")
    for name, (q, S, top) in {
        "hexagoncore4": hexagon_core(4),
        "hexagoncore1": hexagon_core(1),
        "pentagoncore44": pentagon_core(4, 4),
        "pentagoncore11": pentagon_core(1, 1),
        "pentagoncore14": pentagon_core(1, 4),
        "annulus11": annulus(0),
    }.items():
        print(f"  {name}: {jacobian_dims(q, S, top)}")
    print("annulus center dimensions:")
    for j2 in (0, 1):
        q, S, top = annulus(j2)
        print(f"  twists (0,{j2}): {center_dim(q, S, top)}")


if __name__ == "__main__":
    main()

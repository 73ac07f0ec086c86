"""Towers of finite fields F < L < E with a cyclic degree-4 extension.

For a prime p = 1 (mod 4), take the smallest quadratic non-residue z of
GF(p) and build E = GF(p)[x] / (x^4 - z) with generator v.  Then u = v^2
generates the intermediate field L, and the map rho sending v to
z^((p-1)/4) v

generates Gal(E/F) of order 4, and rho restricts to the nontrivial
automorphism theta of L over F with theta(u) = -u, while rho^2 fixes L and
generates Gal(E/L).  Elements are stored as length-4 coefficient vectors
over GF(p) in the basis (1, v, v^2, v^3); each v^t is a simultaneous
eigenvector for the Galois action, which keeps all arithmetic
monomial-friendly.
"""

from __future__ import annotations

from dataclasses import dataclass


class BadPrime(ValueError):
    """The prime is not congruent to 1 modulo 4."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldTower:
    p: int
    z: int  # smallest quadratic non-residue; x^4 - z is irreducible
    q: int  # (p - 1) / 4; rho scales v by z^q

    @staticmethod
    def make(p: int) -> "FieldTower":
        if not _is_prime(p) or p % 4 != 1:
            raise BadPrime(f"{p} is not a prime congruent to 1 mod 4")
        squares = {pow(a, 2, p) for a in range(1, p)}
        z = next(a for a in range(2, p) if a not in squares)
        return FieldTower(p, z, (p - 1) // 4)

    @property
    def rho_scalar(self) -> int:
        """rho(v) = rho_scalar * v; a primitive 4th root of unity mod p."""
        return pow(self.z, self.q, self.p)

    def zero(self):
        return (0, 0, 0, 0)

    def one(self):
        return (1, 0, 0, 0)

    def v_power(self, s: int, scalar: int = 1):
        """The element scalar * v^s for any integer s >= 0."""
        coef = [0, 0, 0, 0]
        coef[s % 4] = scalar * pow(self.z, s // 4, self.p) % self.p
        return tuple(coef)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def scale(self, c: int, a):
        return tuple(c * x % self.p for x in a)

    def mul(self, a, b):
        out = [0, 0, 0, 0]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                s = i + j
                out[s % 4] = (out[s % 4] + x * y * pow(self.z, s // 4, self.p)) % self.p
        return tuple(out)

    def inv(self, a):
        """Inverse in E by solving the 4x4 linear system a * x = 1."""
        cols = [self.mul(a, self.v_power(s)) for s in range(4)]
        mat = [[cols[s][r] for s in range(4)] + [1 if r == 0 else 0]
               for r in range(4)]
        n, p = 4, self.p
        for c in range(n):
            piv = next((r for r in range(c, n) if mat[r][c]), None)
            if piv is None:
                raise ZeroDivisionError("element is not invertible")
            mat[c], mat[piv] = mat[piv], mat[c]
            ic = pow(mat[c][c], -1, p)
            mat[c] = [x * ic % p for x in mat[c]]
            for r in range(n):
                if r != c and mat[r][c]:
                    f = mat[r][c]
                    mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[c])]
        return tuple(mat[r][4] for r in range(4))

    def rho(self, a, j: int = 1):
        """Apply rho^j; v^t is an eigenvector with eigenvalue rho_scalar^t."""
        lam = self.rho_scalar
        return tuple(x * pow(lam, (j % 4) * t, self.p) % self.p
                     for t, x in enumerate(a))

    def theta(self, a):
        """The nontrivial automorphism of L over F: the restriction of rho.

        On L it has order 2 and theta(u) = -u; rho^2 would instead fix L
        pointwise, generating Gal(E/L)."""
        return self.rho(a, 1)

    def degree(self, a) -> int:
        """Degree over F of the subfield generated by a: 1, 2 or 4."""
        if self.rho(a, 2) != a:
            return 4
        return 1 if self.rho(a, 1) == a else 2

    def subfield_exponents(self, d: int):
        """Basis exponents s with v^s in the subfield of degree d."""
        step = 4 // d
        return tuple(range(0, 4, step))

    def in_subfield(self, a, d: int) -> bool:
        allowed = set(self.subfield_exponents(d))
        return all(x == 0 for t, x in enumerate(a) if t not in allowed)


def subfield_degree_of_weight(weight: int) -> int:
    """Vertex weight to field degree: weights are 1, 2, 4 and the species
    places F, L, E at them respectively."""
    return {1: 1, 2: 2, 4: 4}[weight]

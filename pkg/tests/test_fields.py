"""Field tower arithmetic and Galois action."""

import pytest

from orbsp.fields import BadPrime, FieldTower


def test_structure_constants_p5():
    tw = FieldTower.make(5)
    assert (tw.p, tw.z, tw.q) == (5, 2, 1)
    assert tw.rho_scalar == 2
    v = (0, 1, 0, 0)
    u = (0, 0, 1, 0)
    assert tw.rho(v) == (0, 2, 0, 0)
    assert tw.theta(u) == (0, 0, 4, 0)
    assert tw.rho(u, 2) == u  # rho^2 fixes L


def test_bad_primes_rejected():
    for p in (4, 7, 9, 11):
        with pytest.raises(BadPrime):
            FieldTower.make(p)


@pytest.mark.parametrize("p", [5, 13])
def test_inverse_and_automorphism(p):
    tw = FieldTower.make(p)
    elems = [tw.v_power(s, c) for s in range(4) for c in (1, 2, p - 1)]
    elems.append(tw.add(tw.one(), tw.v_power(1)))
    for a in elems:
        assert tw.mul(a, tw.inv(a)) == tw.one()
        assert tw.rho(a, 4) == a
        b = tw.v_power(2, 3)
        assert tw.rho(tw.mul(a, b)) == tw.mul(tw.rho(a), tw.rho(b))


def test_degrees_and_subfields():
    tw = FieldTower.make(5)
    assert tw.degree(tw.one()) == 1
    assert tw.degree(tw.v_power(2)) == 2
    assert tw.degree(tw.v_power(1)) == 4
    assert tw.in_subfield(tw.v_power(2), 2)
    assert not tw.in_subfield(tw.v_power(1), 2)

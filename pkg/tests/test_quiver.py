"""Weighted quivers, exchange matrices and matrix mutation."""

import pytest

from orbsp.examples import TEST_SURFACES, annulus_11, pentagon_core, \
    torus_one_orb
from orbsp.quiver import (
    NotTwoAcyclic,
    build_quivers,
    matrices_equal,
    mutate_matrix,
    mutate_weighted,
    to_matrix,
)


def test_torus_arrow_counts():
    quivers = build_quivers(torus_one_orb(1))
    assert len(quivers["qprime"].arrows) == 7
    assert len(quivers["qdoubleprime"].arrows) == 8


def test_matrix_is_skew_symmetrizable():
    for name, factory in TEST_SURFACES.items():
        wq = build_quivers(factory())["q"]
        try:
            B, D = to_matrix(wq)
        except NotTwoAcyclic:
            continue
        n = len(B)
        for i in range(n):
            for j in range(n):
                assert D[i] * B[i][j] == -D[j] * B[j][i], name


def test_matrix_mutation_is_involutive():
    B, _ = to_matrix(build_quivers(pentagon_core((4, 4)))["q"])
    for k in range(len(B)):
        assert mutate_matrix(mutate_matrix(B, k), k) == B


def test_weighted_mutation_matches_matrix_mutation():
    wq = build_quivers(annulus_11())["q"]
    B, D = to_matrix(wq)
    for k, v in enumerate(wq.vertices):
        out = mutate_weighted(wq, v)
        B2, D2 = to_matrix(out)
        assert B2 == mutate_matrix(B, k)
        assert D2 == D


def test_double_arrows_only_on_weight44_monogons():
    wq = build_quivers(pentagon_core((4, 4)))["q"]
    doubles = [a for a in wq.arrows if a.aid[2] == 1]
    assert len(doubles) == 1
    a = doubles[0]
    assert wq.weight(a.tail) == 4 and wq.weight(a.head) == 4

from __future__ import annotations

import json
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup

from dessin_forge.dessins import Passport, Permutation, enumerate_trees, lemma_generators, passport_of
from dessin_forge.monodromy import (
    PermGroup,
    all_block_systems,
    block_systems,
    expected_order,
    family_dessin,
    group_order,
    is_primitive,
    is_transitive,
    sporadic_component,
    sporadic_dessins,
    structure_check,
)


def sympy_order(*perms: Permutation) -> int:
    return PermutationGroup([SymPerm([v - 1 for v in p.images]) for p in perms]).order()


# orders ------------------------------------------------------------------------------


def test_cyclic_group_order():
    for n in (1, 5, 12):
        assert group_order(PermGroup([Permutation.long_cycle(n)])) == n


def test_symmetric_and_trivial():
    g = PermGroup([Permutation.long_cycle(6), Permutation.from_cycles(6, [(1, 2)])])
    assert g.order() == 720
    assert PermGroup([], n=4).order() == 1


LEMMA_CASES = [
    ("F1", (1, 2, 3)), ("F1", (2, 4, 6)), ("F2", (1, 2)), ("F2", (2, 4)), ("F2", (3, 5)), ("F3", (1, 2)),
    ("F3", (3, 5)), ("F4", (2, 3)), ("F5", (2,)), ("F5", (3,)), ("F6", (2,)),
]


@pytest.mark.parametrize("family,params", LEMMA_CASES)
def test_orders_match_sympy(family, params):
    for idx in (1, 2):
        d = lemma_generators(family, idx, *params)
        assert PermGroup.of_dessin(d).order() == sympy_order(d.sigma0, d.sigma1)


def test_sporadic_orders():
    for d in sporadic_dessins("F7"):
        assert PermGroup.of_dessin(d).order() == 168
    for d in sporadic_dessins("F8"):
        assert PermGroup.of_dessin(d).order() == 2520
    t1, t2 = sporadic_dessins("F11")
    assert PermGroup.of_dessin(t1).order() == 7372800
    assert PermGroup.of_dessin(t2).order() == 26336378880000


def test_sporadic_orders_match_sympy():
    for fam in ("F9", "F10"):
        for d in sporadic_dessins(fam):
            assert PermGroup.of_dessin(d).order() == sympy_order(d.sigma0, d.sigma1)


def test_membership():
    d = lemma_generators("F1", 1, 1, 2, 3)
    g = PermGroup.of_dessin(d)
    assert g.contains(d.sigma0 * d.sigma1)
    assert g.contains(Permutation.identity(6))
    # a transposition lies in the group exactly when it is all of S_6
    assert g.contains(Permutation.from_cycles(6, [(1, 2)])) == (g.order() == 720)


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(1, 8))), st.sampled_from(enumerate_trees(Passport.parse("3,3,1;2,2,1,1,1;7"))
                                                           + enumerate_trees(Passport.parse("3,2,2;2,2,1,1,1;7"))))
def test_order_conjugation_invariant(g_images, d):
    g = Permutation(g_images)
    base = PermGroup.of_dessin(d).order()
    assert PermGroup.of_dessin(d.relabel(g)).order() == base
    assert PermGroup([d.sigma0, d.sigma1], seed=17).order() == base


@pytest.mark.parametrize("family,params", LEMMA_CASES)
def test_lagrange(family, params):
    d = lemma_generators(family, 1, *params)
    assert factorial(d.n) % PermGroup.of_dessin(d).order() == 0


# transitivity and blocks ---------------------------------------------------------------


def test_transitivity():
    assert not is_transitive(PermGroup([Permutation.from_cycles(3, [(1, 2)])]))
    assert is_transitive(PermGroup([Permutation.long_cycle(9)]))
    for family, params in LEMMA_CASES:
        assert is_transitive(PermGroup.of_dessin(lemma_generators(family, 2, *params)))


def test_blocks_of_cyclic_group():
    g = PermGroup([Permutation.long_cycle(6)])
    sizes = sorted(len(p[0]) for p in all_block_systems(g))
    assert sizes == [2, 3]
    assert sorted(len(p[0]) for p in block_systems(g)) == [2, 3]


def test_symmetric_group_primitive():
    g = PermGroup([Permutation.from_cycles(4, [(1, 2)]), Permutation.long_cycle(4)])
    assert block_systems(g) == []
    assert is_primitive(g)


def test_block_systems_are_blocks():
    d = lemma_generators("F4", 1, 2, 3)
    g = PermGroup.of_dessin(d)
    for part in all_block_systems(g):
        blocks = [frozenset(b) for b in part]
        assert sorted(x for b in blocks for x in b) == list(range(1, d.n + 1))
        for gen in (d.sigma0, d.sigma1):
            images = {frozenset(gen(x) for x in b) for b in blocks}
            assert images == set(blocks)


def test_intransitive_blocks_raise():
    with pytest.raises(ValueError):
        block_systems(PermGroup([Permutation.from_cycles(3, [(1, 2)])]))


def test_f11_component_r_primitive():
    assert is_primitive(PermGroup.of_dessin(sporadic_component("F11", 2)))
    assert not is_primitive(PermGroup.of_dessin(sporadic_component("F11", 1)))


def test_f1_prime_degree_contains_cycles():
    # n = 7 prime, d = 1: order is 7!/2 or 7!
    d = lemma_generators("F1", 1, 1, 2, 4)
    order = PermGroup.of_dessin(d).order()
    assert order in (factorial(7) // 2, factorial(7))


# claims ---------------------------------------------------------------------------------


def test_expected_order_examples():
    assert expected_order("F1", 1, 1, 2, 3).order == 720
    assert expected_order("F4", 1, 4, 5).order == (factorial(8) // 2) ** 3 * 24
    assert expected_order("F2", 2, 2, 4).order == factorial(5) ** 2 * 2
    assert expected_order("F2", 2, 2, 4).provenance == "ADVISORY"
    with pytest.raises(ValueError):
        expected_order("F1", 1, 1, 1, 2)


def test_structure_check_examples():
    rep = structure_check(family_dessin("F8", 1), "F8", 1)
    assert rep.order == 2520 and rep.structure_label == "A_7" and rep.matches
    rep = structure_check(family_dessin("F10", 2), "F10", 2)
    assert rep.order == 7200 and rep.matches
    rep = structure_check(family_dessin("F10", 1), "F10", 1)
    assert rep.order == 14400 and rep.matches
    rep = structure_check(family_dessin("F12", 1), "F12", 1)
    assert rep.order == 2 * (factorial(13) // 2) ** 2 and rep.matches


def test_structure_check_records_mismatch():
    rep = structure_check(family_dessin("F9", 1), "F9", 1)
    assert rep.order == 1512
    assert rep.expected_order == 4032
    assert rep.matches is False
    doc = json.loads(rep.dumps())
    assert doc["order"] == "1512" and doc["matches_expected"] is False


def test_report_invariants():
    for fam in ("F7", "F10", "F11"):
        for i in (1, 2):
            rep = structure_check(family_dessin(fam, i), fam, i)
            assert rep.transitive
            assert factorial(rep.degree) % rep.order == 0
            assert rep.primitive == (rep.minimal_blocks == [])


def test_sporadic_passports():
    from dessin_forge.dessins import family_passport

    for fam in ("F7", "F8", "F9", "F10", "F11", "F12"):
        trees = sporadic_dessins(fam)
        assert len(trees) == 2 and trees[0] != trees[1]
        for t in trees:
            assert passport_of(t) == family_passport(fam)

"""Annihilator subsystems, type recognition, and component groups."""

import random
from fractions import Fraction

import pytest

from alcove.centralizer import (annihilator_roots, annihilator_subsystem,
                                base_cartan, centralizer_tuple, classify_cartan,
                                component_group, component_group_detailed,
                                extended_node_roots, pi1_gcd,
                                subsystem_coroot_lattice)
from alcove.intlat import (FiniteAbelianGroup, coroot_lattice, coweight_lattice,
                           lattice_from_rows, saturation_quotient)
from alcove.rootsys import SimpleType, build, build_named

from conftest import alcove_points, types_of_rank

F = Fraction

G2_VERTEX = (F(0), F(1, 2))          # comark-2 vertex of the G2 alcove
G2_FIXED = (F(1, 2), F(-1, 2))       # fixed point of the induced flip


def test_annihilator_a2_edge(a2):
    desc = annihilator_subsystem(a2, [(F(0), F(1, 3))])
    assert desc.factors == (SimpleType("A", 1),)
    assert desc.rank == 1
    assert desc.base == ((1, 0),)


def test_annihilator_origin_full(g2):
    desc = annihilator_subsystem(g2, [(F(0), F(0))])
    assert desc.factors == (SimpleType("G", 2),)
    assert desc.rank == 2


def test_annihilator_g2_vertex(g2):
    desc = annihilator_subsystem(g2, [G2_VERTEX])
    assert desc.factors == (SimpleType("A", 1), SimpleType("A", 1))


def test_annihilator_empty_tuple_rejected(a2):
    with pytest.raises(ValueError):
        annihilator_subsystem(a2, [])


def test_annihilator_intersection_property(g2):
    rng = random.Random(2)
    pts = [(F(0), F(1, 2)), (F(1, 3), F(0)), (F(1, 2), F(1, 2))]
    both = set(annihilator_roots(g2, pts))
    inter = set(g2.roots)
    for p in pts:
        inter &= set(annihilator_roots(g2, [p]))
    assert both == inter


def test_classify_basics():
    assert classify_cartan([[2, -1], [-1, 2]]) == (SimpleType("A", 2),)
    assert classify_cartan([[2, 0], [0, 2]]) == (SimpleType("A", 1), SimpleType("A", 1))
    assert classify_cartan([[2, -1], [-2, 2]]) == (SimpleType("B", 2),)
    assert classify_cartan([[2, -3], [-1, 2]]) == (SimpleType("G", 2),)


def test_classify_d4_in_b4():
    b4 = build_named("B4")
    base = extended_node_roots(b4, [0, 1, 2, 3])   # drop the short node
    cart = base_cartan(b4, base)
    assert classify_cartan(cart) == (SimpleType("D", 4),)


def test_classify_canonicalisation():
    # a path of three nodes is A3, never D3
    path = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    assert classify_cartan(path) == (SimpleType("A", 3),)


def test_classify_rejects_non_cartan():
    with pytest.raises(ValueError):
        classify_cartan([[2, -2], [-2, 2]])     # affine, not positive definite
    with pytest.raises(ValueError):
        classify_cartan([[2, 1], [1, 2]])       # positive off-diagonal
    with pytest.raises(ValueError):
        classify_cartan([[2, -1], [0, 2]])      # asymmetric zero pattern
    with pytest.raises(ValueError):
        classify_cartan([[2, -4], [-1, 2]])     # bond multiplicity 4
    with pytest.raises(ValueError):
        classify_cartan([[3]])


def test_pi1_gcd_g2(g2):
    assert pi1_gcd(g2, {0, 1}) == FiniteAbelianGroup((2,))   # removed long node
    assert pi1_gcd(g2, {0, 2}).is_trivial                     # removed short node
    assert pi1_gcd(g2, {0}).is_trivial                        # gcd(1, 2) = 1


def test_pi1_gcd_errors(g2):
    with pytest.raises(ValueError):
        pi1_gcd(g2, {1, 2})          # lowest-root node missing
    with pytest.raises(ValueError):
        pi1_gcd(g2, {0, 1, 2})       # nothing removed
    with pytest.raises(ValueError):
        pi1_gcd(g2, {0, 5})


@pytest.mark.parametrize("st", types_of_rank(4), ids=str)
def test_pi1_gcd_matches_saturation(st):
    rs = build(st)
    nodes = list(range(rs.rank + 1))
    for mask in range(1, 2 ** rs.rank):
        kept = [0] + [i for i in nodes[1:] if mask & (1 << (i - 1))]
        if len(kept) == rs.rank + 1:
            continue
        base = extended_node_roots(rs, kept)
        sat = saturation_quotient(coroot_lattice(rs),
                                  subsystem_coroot_lattice(rs, base))
        assert pi1_gcd(rs, kept) == sat, (st, kept)


def test_component_group_single_trivial(a2, g2):
    for rs, pt in [(a2, (F(0), F(1, 3))), (g2, G2_VERTEX), (g2, (F(0), F(0)))]:
        assert component_group(rs, [pt]).is_trivial


def test_component_group_g2_pair(g2):
    assert component_group(g2, [G2_VERTEX, G2_FIXED]) == FiniteAbelianGroup((2,))


def test_component_group_g2_pair_generic_second(g2):
    assert component_group(g2, [G2_VERTEX, (F(1, 5), F(-1, 5))]).is_trivial


def test_component_group_adjoint_a1(a1):
    # coweight lattice in place of the coroot lattice: the adjoint group,
    # where the half-turn has a disconnected centralizer
    pi0 = component_group(a1, [(F(1, 2),)], lattice=coweight_lattice(a1))
    assert pi0 == FiniteAbelianGroup((2,))
    assert component_group(a1, [(F(1, 2),)]).is_trivial


def test_component_group_lattice_validation(a1):
    bad = lattice_from_rows([(3,)])   # does not contain the coroot (2)
    with pytest.raises(ValueError):
        component_group(a1, [(F(1, 2),)], lattice=bad)


def test_component_group_stage_log(g2):
    group, info = component_group_detailed(g2, [G2_VERTEX, G2_FIXED])
    assert group == FiniteAbelianGroup((2,))
    assert info.factors == (SimpleType("A", 1), SimpleType("A", 1))
    assert info.lattice_quotient == FiniteAbelianGroup((2,))
    assert info.quotient_reading_consistent


def test_centralizer_tuple_a2(a2):
    desc = centralizer_tuple(a2, [(F(0), F(1, 3))])
    assert desc.subsystem.factors == (SimpleType("A", 1),)
    assert desc.torus_rank == 1
    assert desc.component_group.is_trivial


def test_centralizer_tuple_g2_pair(g2):
    desc = centralizer_tuple(g2, [G2_VERTEX, G2_FIXED])
    assert desc.subsystem.factors == ()
    assert desc.torus_rank == 2
    assert desc.component_group == FiniteAbelianGroup((2,))
    assert desc.stages[0].component_group.is_trivial
    assert desc.stages[1].lattice_quotient == FiniteAbelianGroup((2,))


def test_centralizer_tuple_origin(g2):
    desc = centralizer_tuple(g2, [(F(0), F(0))])
    assert desc.subsystem.factors == (SimpleType("G", 2),)
    assert desc.torus_rank == 0
    assert desc.component_group.is_trivial


def test_same_face_same_descriptor(a2):
    # interior points of one face give identical descriptors
    d1 = annihilator_subsystem(a2, [(F(0), F(1, 3))])
    d2 = annihilator_subsystem(a2, [(F(0), F(2, 5))])
    assert d1.factors == d2.factors and d1.base == d2.base


def test_pi0_contained_in_pi1(g2, a2):
    # component group of a pair embeds in the fundamental-group bound of the
    # first element, exhaustively over small-denominator alcove pairs
    for rs, max_den in [(a2, 3), (g2, 3)]:
        pts = alcove_points(rs, max_den)
        for x1 in pts:
            walls = set()
            if rs.pairing(rs.highest_root, x1) == 1:
                walls.add(0)
            walls |= {i + 1 for i, c in enumerate(x1) if c == 0}
            if 0 in walls and len(walls) <= rs.rank:
                bound = pi1_gcd(rs, walls).order
            else:
                bound = 1
            for x2 in pts:
                pi0 = component_group(rs, [x1, x2])
                assert pi0.is_cyclic and bound % pi0.order == 0, (x1, x2)

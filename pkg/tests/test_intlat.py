"""Smith normal form, centers, and saturation quotients."""

import random

import pytest

from alcove.intlat import (FiniteAbelianGroup, center, coroot_lattice,
                           lattice_from_rows, saturate, saturation_quotient,
                           smith_normal_form, snf_diagonal, span_lattice)
from alcove.linalg import int_det, mat_mul
from alcove.rootsys import build_named


def assert_valid_snf(m):
    u, d, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == d
    assert abs(int_det(u)) == 1
    assert abs(int_det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    for i in range(len(diag) - 1):
        if diag[i + 1] != 0:
            assert diag[i] != 0 and diag[i + 1] % diag[i] == 0
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
            else:
                assert x >= 0
    return diag


def test_snf_cartan_a2():
    assert snf_diagonal([[2, -1], [-1, 2]]) == [1, 3]


def test_snf_identity():
    assert snf_diagonal([[1, 0], [0, 1]]) == [1, 1]


def test_snf_one_by_one():
    assert snf_diagonal([[2]]) == [2]


def test_snf_zero_matrix():
    assert snf_diagonal([[0, 0], [0, 0]]) == [0, 0]


def test_snf_random_matrices():
    rng = random.Random(7)
    for _ in range(120):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        assert_valid_snf(m)


def test_snf_rectangular():
    diag = assert_valid_snf([[2, 4, 4], [-6, 6, 12]])
    assert diag == [2, 6]


@pytest.mark.parametrize("name,factors", [
    ("A2", (3,)), ("A3", (4,)), ("E8", ()), ("D4", (2, 2)), ("D5", (4,)),
    ("B3", (2,)), ("C4", (2,)), ("E6", (3,)), ("E7", (2,)), ("G2", ()), ("F4", ()),
])
def test_centers(name, factors):
    assert center(build_named(name)).invariant_factors == factors


def test_center_order_is_determinant():
    for name in ["A4", "B2", "D6", "E6"]:
        rs = build_named(name)
        assert center(rs).order == abs(int_det(rs.cartan))


def test_group_validation():
    with pytest.raises(ValueError):
        FiniteAbelianGroup((2, 3))     # 2 does not divide 3
    with pytest.raises(ValueError):
        FiniteAbelianGroup((1,))
    assert FiniteAbelianGroup.cyclic(1).is_trivial
    assert FiniteAbelianGroup.cyclic(6).invariant_factors == (6,)
    assert str(FiniteAbelianGroup((2, 4))) == "Z/2 x Z/4"


def test_saturation_quotient_g2_a1a1():
    g2 = build_named("G2")
    ambient = coroot_lattice(g2)
    # lowest-root coroot and the short simple coroot span the A1 x A1 coroots
    lowest_cor = tuple(-x for x in g2.coroot_coweight_coords(g2.highest_root))
    short_cor = g2.coroot_coweight_coords((1, 0))
    sub = lattice_from_rows([lowest_cor, short_cor])
    assert saturation_quotient(ambient, sub) == FiniteAbelianGroup((2,))


def test_saturation_quotient_g2_long_a2():
    g2 = build_named("G2")
    ambient = coroot_lattice(g2)
    sub = lattice_from_rows([g2.coroot_coweight_coords((0, 1)),
                             g2.coroot_coweight_coords((3, 1))])
    assert saturation_quotient(ambient, sub).is_trivial


def test_saturation_quotient_self():
    rs = build_named("B3")
    amb = coroot_lattice(rs)
    assert saturation_quotient(amb, amb).is_trivial


def test_saturation_rejects_noncontained():
    amb = lattice_from_rows([(2, 0), (0, 2)])
    sub = lattice_from_rows([(1, 0)])
    with pytest.raises(ValueError):
        saturation_quotient(amb, sub)
    outside = lattice_from_rows([(1, 0, 0)])
    amb3 = lattice_from_rows([(0, 1, 0), (0, 0, 1)])
    with pytest.raises(ValueError):
        saturation_quotient(amb3, outside)


def test_saturation_quotient_unimodular_invariance():
    rng = random.Random(3)
    amb_rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    sub_rows = [(2, 0, 0), (0, 6, 0)]
    expected = saturation_quotient(lattice_from_rows(amb_rows),
                                   lattice_from_rows(sub_rows))
    assert expected == FiniteAbelianGroup((2, 6))
    for _ in range(25):
        u = _random_unimodular(rng, 2)
        mixed = mat_mul(u, sub_rows)
        v = _random_unimodular(rng, 3)
        amb_mixed = mat_mul(v, amb_rows)
        assert saturation_quotient(lattice_from_rows(amb_rows),
                                   lattice_from_rows(mixed)) == expected
        assert saturation_quotient(lattice_from_rows(amb_mixed),
                                   lattice_from_rows(sub_rows)) == expected


def _random_unimodular(rng, n):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(6):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-3, 3)
        for c in range(n):
            m[i][c] += q * m[j][c]
    return m


def test_saturate_basis():
    amb = lattice_from_rows([(1, 0), (0, 1)])
    sub = lattice_from_rows([(2, 4)])
    sat = saturate(amb, sub)
    assert sat.rank == 1
    (row,) = sat.basis
    assert tuple(abs(x) for x in row) == (1, 2)


def test_span_lattice_collapses_dependents():
    lat = span_lattice([(2, 0), (4, 0), (0, 3)], 2)
    assert lat.rank == 2

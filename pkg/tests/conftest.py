"""Shared fixtures and helpers for the test suite."""

from fractions import Fraction
from itertools import product

import pytest

from alcove.rootsys import SimpleType, build
from alcove.weyl import in_alcove

# Canonical simple types up to rank 8, without repeating isomorphic ones
# (B2 stands for C2, A3 for D3).
ALL_TYPES = (
    [SimpleType("A", n) for n in range(1, 9)]
    + [SimpleType("B", n) for n in range(2, 9)]
    + [SimpleType("C", n) for n in range(3, 9)]
    + [SimpleType("D", n) for n in range(4, 9)]
    + [SimpleType("E", n) for n in (6, 7, 8)]
    + [SimpleType("F", 4), SimpleType("G", 2)]
)

# The desk-scale verification set: classical families through rank 4 plus
# every exceptional type.
CORE_TYPES = [SimpleType(f, n) for f, n in
              [("A", 1), ("A", 2), ("A", 3), ("A", 4),
               ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4),
               ("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]]


def types_of_rank(max_rank, types=None):
    return [t for t in (types or ALL_TYPES) if t.rank <= max_rank]


def farey_values(max_den):
    """All fractions p/q in [0, 1] with denominator at most max_den."""
    vals = {Fraction(0), Fraction(1)}
    for q in range(2, max_den + 1):
        for p in range(1, q):
            vals.add(Fraction(p, q))
    return sorted(vals)


def alcove_points(rs, max_den):
    """Every closed-alcove point whose coordinates have denominator <= max_den."""
    vals = farey_values(max_den)
    out = []
    for coords in product(vals, repeat=rs.rank):
        if in_alcove(rs, coords):
            out.append(coords)
    return out


@pytest.fixture(scope="session")
def a2():
    return build(SimpleType("A", 2))


@pytest.fixture(scope="session")
def g2():
    return build(SimpleType("G", 2))


@pytest.fixture(scope="session")
def a1():
    return build(SimpleType("A", 1))

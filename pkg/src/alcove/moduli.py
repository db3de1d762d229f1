"""Torsion-level orbit counts on pairs of torus points, and the fixed-space
data of the alcove action of a center element.

Orbit counts of the Weyl group on pairs of m-torsion points are computed
twice: by Burnside's lemma with fixed-point counts from Smith forms modulo
m, and by direct orbit enumeration.  The two must agree; the direct count
is the slow oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .diagram import (CenterElement, DiagramAutomorphism, alcove_vertices,
                      center_automorphism)
from .errors import ResourceCapExceeded
from .intlat import snf_diagonal
from .linalg import int_matrix, mat_vec, rational_inverse, vec_scale, vec_sub
from .rootsys import Coords, RootSystem
from .weyl import (DEFAULT_GROUP_CAP, coroot_action_matrix, is_weyl_matrix,
                   weyl_group_matrices)

DEFAULT_PAIR_BUDGET = 200000


@dataclass(frozen=True)
class TorsionLevel:
    """The m-torsion subgroup of the torus, in coroot coordinates."""

    m: int
    rank: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("torsion level must be >= 1")

    @property
    def size(self) -> int:
        return self.m ** self.rank

    def points(self):
        """All m-torsion points as integer coroot-coordinate tuples mod m."""
        return product(range(self.m), repeat=self.rank)


def _fixed_count(rs: RootSystem, matrix, m: int) -> int:
    """Number of m-torsion points fixed by a Weyl matrix.

    The kernel of (w - id) on (Z/m)^rank has size prod gcd(d_i, m) over the
    integer Smith diagonal d of (w - id), with zero entries contributing m.
    """
    a = coroot_action_matrix(rs, matrix)
    n = rs.rank
    diff = [[a[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    diag = snf_diagonal(diff)
    count = 1
    for d in diag:
        count *= math.gcd(d, m) if d != 0 else m
    return count


def count_pairs_burnside(rs: RootSystem, m: int,
                         cap: int = DEFAULT_GROUP_CAP) -> int:
    """Number of simultaneous-conjugation orbits on pairs of m-torsion points:
    the average over W of the squared fixed-point counts."""
    if m < 1:
        raise ValueError("torsion level must be >= 1")
    mats = weyl_group_matrices(rs, cap)
    total = sum(_fixed_count(rs, w, m) ** 2 for w in mats)
    if total % len(mats) != 0:
        raise AssertionError("Burnside sum is not divisible by the group order")
    return total // len(mats)


def _point_permutations(rs: RootSystem, m: int, cap: int):
    """Each Weyl element as a permutation of the indexed m-torsion points."""
    level = TorsionLevel(m, rs.rank)
    points = list(level.points())
    index = {p: i for i, p in enumerate(points)}
    perms = []
    for w in weyl_group_matrices(rs, cap):
        mat = coroot_action_matrix(rs, w)
        perms.append(tuple(
            index[tuple(sum(mat[i][j] * p[j] for j in range(rs.rank)) % m
                        for i in range(rs.rank))]
            for p in points))
    return points, perms


def count_pairs_direct(rs: RootSystem, m: int, budget: int = DEFAULT_PAIR_BUDGET,
                       cap: int = DEFAULT_GROUP_CAP) -> int:
    """Orbit count on pairs of m-torsion points by explicit enumeration."""
    if m < 1:
        raise ValueError("torsion level must be >= 1")
    level = TorsionLevel(m, rs.rank)
    if level.size ** 2 > budget:
        raise ResourceCapExceeded(
            f"{level.size ** 2} pairs exceed the budget {budget}")
    points, perms = _cached_point_permutations(rs, m, cap)
    size = len(points)
    visited = bytearray(size * size)
    orbits = 0
    for start in range(size * size):
        if visited[start]:
            continue
        orbits += 1
        visited[start] = 1
        frontier = [start]
        while frontier:
            code = frontier.pop()
            a, b = divmod(code, size)
            for perm in perms:
                img = perm[a] * size + perm[b]
                if not visited[img]:
                    visited[img] = 1
                    frontier.append(img)
    return orbits


@lru_cache(maxsize=32)
def _cached_point_permutations(rs: RootSystem, m: int, cap: int):
    return _point_permutations(rs, m, cap)


def torsion_orbit_canonical(rs: RootSystem, pair, m: int,
                            cap: int = DEFAULT_GROUP_CAP):
    """Canonical representative (lexicographic minimum) of a pair orbit."""
    points, perms = _cached_point_permutations(rs, m, cap)
    index = {p: i for i, p in enumerate(points)}
    a = index[tuple(x % m for x in pair[0])]
    b = index[tuple(x % m for x in pair[1])]
    return min((points[perm[a]], points[perm[b]]) for perm in perms)


@lru_cache(maxsize=None)
def _root_vector_gram_inverse(rs: RootSystem):
    return rational_inverse(rs.bilinear)


def root_basis_expansion(rs: RootSystem, point) -> Coords:
    """Coefficients r with point = sum_a r_a vec(a) over the simple roots,
    the roots realised as vectors through the invariant form."""
    return mat_vec(_root_vector_gram_inverse(rs),
                   tuple(Fraction(x) for x in point))


def delta_c(rs: RootSystem, c: CenterElement) -> tuple[int, ...]:
    """Simple nodes whose coefficient in the root-basis expansion of the
    minuscule representative is non-integral.

    Independent of the representative: shifting by a coroot-lattice vector
    moves every coefficient by an integer.
    """
    coeffs = root_basis_expansion(rs, c.coweight())
    return tuple(i + 1 for i, r in enumerate(coeffs) if Fraction(r).denominator != 1)


def delta_from_coweight(rs: RootSystem, point) -> tuple[int, ...]:
    """delta computed from an arbitrary coweight representative (for
    representative-independence checks)."""
    coeffs = root_basis_expansion(rs, point)
    return tuple(i + 1 for i, r in enumerate(coeffs) if Fraction(r).denominator != 1)


@dataclass(frozen=True)
class CPairData:
    """Normal-form data of a central-commutator pair.

    The affine alcove action is t |-> w_c(t - zeta), with w_c the linear
    differential and exp(zeta) the inverse center element; fixed_basis spans
    the direction space of the fixed polytope through base_point, the
    barycenter of the fixed locus.
    """

    c: CenterElement
    w_matrix: tuple[tuple[int, ...], ...]
    zeta: Coords
    delta: tuple[int, ...]
    dim: int
    base_point: Coords
    fixed_basis: tuple[Coords, ...]
    vertex_permutation: DiagramAutomorphism

    def apply(self, point) -> Coords:
        moved = vec_sub(tuple(Fraction(x) for x in point), self.zeta)
        return mat_vec(self.w_matrix, moved)

    def to_json_dict(self) -> dict:
        return {"c": self.c.node, "dim": self.dim,
                "delta": list(self.delta),
                "base_point": [str(x) for x in self.base_point],
                "fixed_basis": [[str(x) for x in v] for v in self.fixed_basis],
                "zeta": [str(x) for x in self.zeta],
                "w_matrix": [list(r) for r in self.w_matrix],
                "vertex_permutation": list(self.vertex_permutation.perm)}


def cpair_fixed_space(rs: RootSystem, c: CenterElement) -> CPairData:
    """Fixed locus of the center element's alcove action, exactly.

    The action permutes the alcove vertices; the fixed polytope is the
    convex hull of the orbit barycenters, so its dimension is the orbit
    count minus one.  For a full-order element in type A that is the bare
    alcove barycenter.
    """
    auto = center_automorphism(rs, c)
    verts = alcove_vertices(rs)
    n = rs.rank

    offset = verts[auto(0)]
    cols = []
    for j in range(1, n + 1):
        target = vec_sub(verts[auto(j)], offset)
        cols.append(vec_scale(Fraction(rs.marks[j - 1]), target))
    matrix = int_matrix(tuple(zip(*cols)))
    if not is_weyl_matrix(rs, matrix):
        raise AssertionError("center action differential is not a Weyl matrix")

    m_inv = rational_inverse(matrix)
    zeta = tuple(-x for x in mat_vec(m_inv, offset))

    orbit_bary = []
    for orbit in auto.orbits():
        pts = [verts[j] for j in orbit]
        orbit_bary.append(tuple(sum(col, Fraction(0)) / len(pts) for col in zip(*pts)))
    base_point = tuple(sum(col, Fraction(0)) / len(orbit_bary)
                       for col in zip(*orbit_bary))
    basis = tuple(vec_sub(b, orbit_bary[0]) for b in orbit_bary[1:])

    data = CPairData(c=c, w_matrix=matrix, zeta=zeta,
                     delta=delta_c(rs, c), dim=len(orbit_bary) - 1,
                     base_point=base_point, fixed_basis=basis,
                     vertex_permutation=auto)
    for p in orbit_bary + [base_point]:
        if data.apply(p) != tuple(p):
            raise AssertionError("fixed-space point is not fixed by the alcove action")
    return data

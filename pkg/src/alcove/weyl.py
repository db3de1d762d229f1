"""Finite and affine Weyl group actions in coweight coordinates.

Elements act on points t through an integer matrix plus an optional
translation by a coroot-lattice vector, so the affine action is

    t  |->  M t + Cartan @ k

with k integral.  Reduction into the closed fundamental alcove

    { t : a_i(t) >= 0 for all i,  d(t) <= 1 }

is deterministic: the lowest-index violated wall is reflected first, walls
ordered a_1, ..., a_n and then the affine wall.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ResourceCapExceeded
from .linalg import identity, int_matrix, mat_mul, mat_vec, vec_sub
from .rootsys import Coords, RootSystem, inverse_cartan

DEFAULT_GROUP_CAP = 2000


@dataclass(frozen=True)
class WeylElement:
    """Affine Weyl element: integer matrix on coweight coordinates plus a
    coroot-coordinate translation vector."""

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]

    @classmethod
    def identity(cls, rank: int) -> "WeylElement":
        return cls(identity(rank), (0,) * rank)

    @property
    def is_identity(self) -> bool:
        return self.matrix == identity(len(self.matrix)) and not any(self.translation)

    def apply(self, rs: RootSystem, point) -> Coords:
        shift = mat_vec(rs.cartan, self.translation)
        return tuple(Fraction(x) + Fraction(s)
                     for x, s in zip(mat_vec(self.matrix, point), shift))

    def compose(self, rs: RootSystem, other: "WeylElement") -> "WeylElement":
        """self after other: (self.compose(other)).apply(t) == self.apply(other.apply(t))."""
        mat = mat_mul(self.matrix, other.matrix)
        # translation: self.M (C k_other) expressed back in coroot coordinates
        conj = coroot_action_matrix(rs, self.matrix)
        k = tuple(a + b for a, b in zip(mat_vec(conj, other.translation), self.translation))
        return WeylElement(tuple(map(tuple, mat)), k)


def coroot_action_matrix(rs: RootSystem, matrix) -> tuple[tuple[int, ...], ...]:
    """C^{-1} M C: the action of a Weyl matrix on coroot coordinates (integer)."""
    c_inv = inverse_cartan(rs)
    return int_matrix(mat_mul(c_inv, mat_mul(matrix, rs.cartan)))


def is_weyl_matrix(rs: RootSystem, matrix) -> bool:
    """Membership test: the contragredient action must permute the roots."""
    cols = tuple(zip(*matrix))
    root_set = set(rs.roots)
    return all(tuple(sum(c * x for c, x in zip(root, col)) for col in cols) in root_set
               for root in rs.roots)


@lru_cache(maxsize=None)
def simple_reflection_matrix(rs: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of s_i on coweight coordinates: x |-> x - x_i * (column i of C)."""
    if not (1 <= i <= rs.rank):
        raise ValueError(f"node index {i} out of range 1..{rs.rank}")
    n = rs.rank
    col = [rs.cartan[r][i - 1] for r in range(n)]
    return tuple(tuple((1 if r == c else 0) - (col[r] if c == i - 1 else 0)
                       for c in range(n)) for r in range(n))


def reflection_matrix(rs: RootSystem, root) -> tuple[tuple[int, ...], ...]:
    """Matrix of the reflection in an arbitrary root: x |-> x - <root, x> root^."""
    n = rs.rank
    corw = rs.coroot_coweight_coords(root)
    return tuple(tuple((1 if r == c else 0) - corw[r] * root[c] for c in range(n))
                 for r in range(n))


def reflect(rs: RootSystem, i: int, point) -> Coords:
    """Simple reflection s_i applied to a coweight-coordinate point (involution)."""
    if not (1 <= i <= rs.rank):
        raise ValueError(f"node index {i} out of range 1..{rs.rank}")
    ci = Fraction(point[i - 1])
    return tuple(Fraction(x) - ci * rs.cartan[r][i - 1] for r, x in enumerate(point))


def highest_coroot_coweight(rs: RootSystem) -> tuple[int, ...]:
    """d^ in coweight coordinates: Cartan @ comarks."""
    return tuple(sum(rs.cartan[i][j] * rs.comarks[j] for j in range(rs.rank))
                 for i in range(rs.rank))


def alcove_violations(rs: RootSystem, point):
    """Indices of violated alcove walls, 1..n for simple walls, 0 for the affine wall."""
    out = [i + 1 for i, x in enumerate(point) if x < 0]
    if rs.pairing(rs.highest_root, point) > 1:
        out.append(0)
    return out


def in_alcove(rs: RootSystem, point) -> bool:
    return all(Fraction(x) >= 0 for x in point) and rs.pairing(rs.highest_root, point) <= 1


@dataclass(frozen=True)
class AlcovePoint:
    """A point of the closed fundamental alcove; membership is validated exactly."""

    point: Coords
    walls: tuple[int, ...] = field(default=())

    @classmethod
    def of(cls, rs: RootSystem, point) -> "AlcovePoint":
        point = tuple(Fraction(x) for x in point)
        if not in_alcove(rs, point):
            raise ValueError(f"point {point} is not in the closed alcove of {rs.type}")
        walls = tuple(i + 1 for i, x in enumerate(point) if x == 0)
        if rs.pairing(rs.highest_root, point) == 1:
            walls = (0,) + walls
        return cls(point, walls)


def reduce_to_alcove(rs: RootSystem, point) -> tuple[AlcovePoint, WeylElement]:
    """Unique closed-alcove representative of the affine Weyl orbit of a point.

    Returns (t0, w) with w(point) = t0 exactly.  Deterministic tie-break:
    each step reflects through the lowest-index violated wall (simple walls
    in node order, then the affine wall).  Termination follows from the
    strictly decreasing count of affine hyperplanes separating the point
    from the alcove interior.
    """
    n = rs.rank
    x = tuple(Fraction(v) for v in point)
    w = WeylElement.identity(n)
    delta = highest_coroot_coweight(rs)
    affine_matrix = reflection_matrix(rs, rs.highest_root)
    affine_elt = WeylElement(affine_matrix, tuple(rs.comarks))
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise AssertionError("alcove reduction failed to terminate")
        viol = next((i + 1 for i, v in enumerate(x) if v < 0), None)
        if viol is not None:
            x = reflect(rs, viol, x)
            w = WeylElement(simple_reflection_matrix(rs, viol), (0,) * n).compose(rs, w)
            continue
        excess = rs.pairing(rs.highest_root, x) - 1
        if excess > 0:
            x = tuple(xi - excess * d for xi, d in zip(x, delta))
            w = affine_elt.compose(rs, w)
            continue
        break
    assert w.apply(rs, tuple(Fraction(v) for v in point)) == x
    return AlcovePoint.of(rs, x), w


def canonical_mod_coroot(rs: RootSystem, point) -> Coords:
    """Canonical representative of a point modulo Q^ (fundamental parallelepiped)."""
    c_inv = inverse_cartan(rs)
    y = mat_vec(c_inv, tuple(Fraction(v) for v in point))
    frac = tuple(Fraction(v) - (Fraction(v).numerator // Fraction(v).denominator) for v in y)
    return tuple(sum(Fraction(rs.cartan[i][j]) * frac[j] for j in range(rs.rank))
                 for i in range(rs.rank))


def points_equal_mod_coroot(rs: RootSystem, p, q) -> bool:
    c_inv = inverse_cartan(rs)
    diff = mat_vec(c_inv, vec_sub(tuple(map(Fraction, p)), tuple(map(Fraction, q))))
    return all(Fraction(v).denominator == 1 for v in diff)


@lru_cache(maxsize=None)
def weyl_group_matrices(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP):
    """All elements of the finite Weyl group as coweight-coordinate matrices.

    Breadth-first closure over the simple reflections; raises
    ResourceCapExceeded if the group order exceeds the cap.
    """
    gens = [simple_reflection_matrix(rs, i) for i in range(1, rs.rank + 1)]
    seen = {identity(rs.rank)}
    frontier = [identity(rs.rank)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = tuple(map(tuple, mat_mul(g, m)))
                if prod not in seen:
                    if len(seen) >= cap:
                        raise ResourceCapExceeded(
                            f"Weyl group of {rs.type} exceeds cap {cap}")
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return tuple(sorted(seen))


def weyl_group(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> tuple[WeylElement, ...]:
    zero = (0,) * rs.rank
    return tuple(WeylElement(m, zero) for m in weyl_group_matrices(rs, cap))


def orbit(rs: RootSystem, point, cap: int = DEFAULT_GROUP_CAP) -> frozenset[Coords]:
    """W-orbit of a point on the torus h/Q^.

    Points are canonicalised to the fundamental parallelepiped of Q^; the
    search is breadth-first over simple reflections and never truncates
    silently.
    """
    start = canonical_mod_coroot(rs, point)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for i in range(1, rs.rank + 1):
                img = canonical_mod_coroot(rs, reflect(rs, i, p))
                if img not in seen:
                    if len(seen) >= cap:
                        raise ResourceCapExceeded(
                            f"orbit size exceeds cap {cap} for {rs.type}")
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return frozenset(seen)


def stabilizer(rs: RootSystem, points, cap: int = DEFAULT_GROUP_CAP) -> tuple[WeylElement, ...]:
    """Simultaneous stabilizer of a tuple of torus points, as a subgroup of W.

    Elements are returned with zero translation part; they fix every point
    of the tuple modulo Q^.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    kept = []
    for w in weyl_group(rs, cap):
        if all(points_equal_mod_coroot(rs, mat_vec(w.matrix, p), p) for p in pts):
            kept.append(w)
    return tuple(kept)

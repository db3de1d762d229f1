"""Integer-lattice algebra: Smith normal form, saturations, finite quotients.

Lattices are given by basis rows.  Throughout the library, lattices that
live between the coroot lattice Q^ and the coweight lattice P^ are written
in fundamental-coweight coordinates, where Q^ is spanned by the columns of
the Cartan matrix and P^ is the standard integer lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (coords_in_rows, identity, int_det, int_matrix, mat_mul,
                     rational_inverse, rational_rank)
from .rootsys import RootSystem


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k.

    The empty factor list is the trivial group.  Equality of groups is a
    plain list comparison.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(fs[i + 1] % fs[i] != 0 for i in range(len(fs) - 1)):
            raise ValueError(f"divisibility chain violated: {fs}")

    @classmethod
    def trivial(cls) -> "FiniteAbelianGroup":
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        return cls(() if n == 1 else (n,))

    @classmethod
    def from_diagonal(cls, diag) -> "FiniteAbelianGroup":
        return cls(tuple(d for d in diag if d > 1))

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def __str__(self):
        if self.is_trivial:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class IntegerLattice:
    """Full or partial lattice given by linearly independent integer basis rows."""

    basis: tuple[tuple[int, ...], ...]
    dim: int

    def __post_init__(self):
        if any(len(row) != self.dim for row in self.basis):
            raise ValueError("basis rows must match the ambient dimension")
        if rational_rank(self.basis) != len(self.basis):
            raise ValueError("basis rows are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)


def lattice_from_rows(rows, dim=None) -> IntegerLattice:
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if dim is None:
        dim = len(rows[0]) if rows else 0
    return IntegerLattice(rows, dim)


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns (U, D, V) with U @ M @ V = D, U and V unimodular, and D diagonal
    with each entry dividing the next.  Pivots are chosen by minimal nonzero
    absolute value; all arithmetic is arbitrary-precision.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        # locate the minimal-magnitude nonzero entry of the trailing block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            # clear column t then row t; restart if a division leaves a remainder
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(j, t)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, -1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    d = tuple(tuple(a[i][j] if i == j else 0 for j in range(cols)) for i in range(rows))
    return tuple(map(tuple, u)), d, tuple(map(tuple, v))


def snf_diagonal(m) -> list[int]:
    _, d, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def center(rs: RootSystem) -> FiniteAbelianGroup:
    """Center of the simply connected group: the coweight/coroot quotient.

    Computed as the cokernel of the Cartan matrix via Smith normal form; its
    order equals the Cartan determinant.
    """
    diag = snf_diagonal(rs.cartan)
    group = FiniteAbelianGroup.from_diagonal(diag)
    if group.order != abs(int_det(rs.cartan)):
        raise AssertionError("center order disagrees with Cartan determinant")
    return group


def _coords_matrix(vectors, basis):
    """Each vector of `vectors` written in `basis` row coordinates; None if outside the span."""
    out = []
    for vec in vectors:
        coeffs = coords_in_rows(vec, basis)
        if coeffs is None:
            return None
        out.append(coeffs)
    return out


def sublattice_coords(sub: IntegerLattice, ambient: IntegerLattice):
    """Integer coordinates of sub's basis in ambient's basis.

    Raises ValueError if sub is not contained in ambient (as a lattice).
    """
    coeffs = _coords_matrix(sub.basis, ambient.basis)
    if coeffs is None:
        raise ValueError("sublattice is not contained in the rational span of the ambient lattice")
    try:
        return int_matrix(coeffs)
    except ValueError:
        raise ValueError("sublattice is not contained in the ambient lattice "
                         "(non-integral coordinates)") from None


def saturation_quotient(ambient: IntegerLattice, sub: IntegerLattice) -> FiniteAbelianGroup:
    """Torsion quotient (ambient ^ span_Q(sub)) / sub.

    sub must be contained in ambient; the result is the torsion part of
    ambient/sub, i.e. the quotient of the saturation of sub inside ambient
    by sub itself.  Invariant under unimodular change of basis on either
    side.
    """
    coords = sublattice_coords(sub, ambient)
    diag = snf_diagonal(coords)
    if any(d == 0 for d in diag):
        raise AssertionError("sublattice coordinates lost rank")
    return FiniteAbelianGroup.from_diagonal(diag)


def lattice_quotient(sup: IntegerLattice, sub: IntegerLattice) -> FiniteAbelianGroup:
    """Finite quotient sup/sub for equal-rank nested lattices."""
    if sup.rank != sub.rank:
        raise ValueError("quotient is infinite: ranks differ")
    return saturation_quotient(sup, sub)


def saturate(ambient: IntegerLattice, sub: IntegerLattice) -> IntegerLattice:
    """The saturation ambient ^ span_Q(sub), as a sublattice of ambient.

    Computed from the column transform of the Smith form: if U S V = D for
    the coordinate matrix S of sub, the rows of V^{-1} indexed by nonzero
    diagonal entries form a basis of the saturation in ambient coordinates.
    """
    coords = sublattice_coords(sub, ambient)
    _, d, v = smith_normal_form(coords)
    v_inv = int_matrix(rational_inverse(v))
    nonzero = [i for i in range(min(len(d), len(v_inv))) if d[i][i] != 0]
    sat_rows_in_ambient = [v_inv[i] for i in nonzero]
    rows = mat_mul(sat_rows_in_ambient, ambient.basis)
    return lattice_from_rows(rows, ambient.dim)


def span_lattice(generators, dim: int) -> IntegerLattice:
    """Lattice spanned by possibly dependent integer row vectors.

    A basis is read off the Smith form: the nonzero rows of D @ V^{-1}.
    """
    rows = [tuple(int(x) for x in g) for g in generators if any(g)]
    if not rows:
        return lattice_from_rows([], dim)
    _, d, v = smith_normal_form(rows)
    v_inv = int_matrix(rational_inverse(v))
    basis = [tuple(d[i][i] * x for x in v_inv[i])
             for i in range(min(len(rows), dim)) if d[i][i] != 0]
    return lattice_from_rows(basis, dim)


def coroot_lattice(rs: RootSystem) -> IntegerLattice:
    """Q^ in coweight coordinates: the columns of the Cartan matrix as rows."""
    n = rs.rank
    return lattice_from_rows(
        [tuple(rs.cartan[i][j] for i in range(n)) for j in range(n)], n)


def coweight_lattice(rs: RootSystem) -> IntegerLattice:
    """P^ in coweight coordinates: the standard integer lattice."""
    return lattice_from_rows(identity(rs.rank), rs.rank)


def in_lattice(vector, lattice: IntegerLattice) -> bool:
    """Exact membership test for a rational vector."""
    coeffs = coords_in_rows(vector, lattice.basis)
    return coeffs is not None and all(Fraction(c).denominator == 1 for c in coeffs)

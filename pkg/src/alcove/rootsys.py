"""Simple root systems of types A-G with exact Cartan data.

Conventions used throughout the library:

* Node numbering follows the Bourbaki plates (Groupes et algebres de Lie,
  ch. VI).  Simple nodes are 1-based; node 0 is reserved for the lowest
  root of the extended diagram.
* The Cartan matrix is ``C[i][j] = a_i(a_j^)``, rows indexed by roots and
  columns by coroots, so column j of C is the j-th simple coroot written
  in fundamental-coweight coordinates.
* Roots are integer coefficient vectors in the simple-root basis.
* Points of the Cartan subalgebra are stored in the fundamental-coweight
  basis: coordinate i of a point t is the exact rational a_i(t).  The
  pairing of a root with a point is then a plain dot product.
* Root lengths are normalised so that long roots have squared length 2.

Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import int_det, rational_inverse

Coords = tuple[Fraction, ...]
RootVector = tuple[int, ...]

_RANK_RANGES = {"A": (1, 8), "B": (2, 8), "C": (2, 8), "D": (3, 8),
                "E": (6, 8), "F": (4, 4), "G": (2, 2)}

# |Phi| and det(Cartan) closed forms, keyed by family.
_NUM_ROOTS = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n,
              "C": lambda n: 2 * n * n, "D": lambda n: 2 * n * (n - 1),
              "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
              "F": lambda n: 48, "G": lambda n: 12}
_CONNECTION_INDEX = {"A": lambda n: n + 1, "B": lambda n: 2, "C": lambda n: 2,
                     "D": lambda n: 4, "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
                     "F": lambda n: 1, "G": lambda n: 1}


@dataclass(frozen=True, order=True)
class SimpleType:
    """An irreducible simple type: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        lo_hi = _RANK_RANGES.get(self.family)
        if lo_hi is None:
            raise ValueError(f"unknown family {self.family!r}; expected one of A-G")
        lo, hi = lo_hi
        if not (lo <= self.rank <= hi):
            raise ValueError(
                f"invalid rank {self.rank} for family {self.family}: "
                f"supported range is {lo}..{hi}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_type(text: str) -> SimpleType:
    """Parse a type string like "E8" or "A5"."""
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in _RANK_RANGES or not text[1:].isdigit():
        raise ValueError(f"cannot parse simple type from {text!r}")
    return SimpleType(text[0].upper(), int(text[1:]))


def _cartan_matrix(st: SimpleType) -> tuple[tuple[int, ...], ...]:
    n = st.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    fam = st.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            bond(n - 2, n - 1, -2, -1)   # a_{n-1} long, a_n short
        if fam == "C" and n >= 2:
            bond(n - 2, n - 1, -1, -2)   # a_{n-1} short, a_n long
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5)]:
            bond(i, j)
        for i in range(5, n - 1):
            bond(i, i + 1)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)               # a_2 long, a_3 short
        bond(2, 3)
    elif fam == "G":
        bond(0, 1, -1, -3)               # a_1 short, a_2 long
    return tuple(tuple(row) for row in c)


def _squared_lengths(cartan) -> Coords:
    """(a_i, a_i) for each node, normalised so long roots have length^2 = 2."""
    n = len(cartan)
    lengths = [None] * n
    lengths[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and lengths[j] is None:
                # l_i / l_j = C[i][j] / C[j][i]
                lengths[j] = lengths[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    top = max(lengths)
    return tuple(l * 2 / top for l in lengths)


@dataclass(frozen=True)
class RootSystem:
    """Fully enumerated irreducible root system.

    roots are sorted integer vectors in the simple-root basis; marks are the
    coefficients of the highest root, comarks those of its coroot in the
    simple coroots.
    """

    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[RootVector, ...]
    highest_root: RootVector
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    lengths: Coords                       # squared lengths of simple roots
    bilinear: tuple[Coords, ...]          # (a_i, a_j)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def positive_roots(self) -> tuple[RootVector, ...]:
        return tuple(r for r in self.roots if sum(r) > 0)

    def pairing(self, root: RootVector, point) -> Fraction:
        """a(t) for a root a and a coweight-coordinate point t."""
        return sum(Fraction(c) * Fraction(x) for c, x in zip(root, point))

    def root_coroot_pairing(self, root: RootVector, j: int) -> int:
        """<root, a_j^> for the j-th simple coroot (1-based j)."""
        return sum(c * self.cartan[r][j - 1] for r, c in enumerate(root))

    def root_length_sq(self, root: RootVector) -> Fraction:
        b = self.bilinear
        return sum(Fraction(ci) * Fraction(cj) * b[i][j]
                   for i, ci in enumerate(root) for j, cj in enumerate(root))

    def coroot_coords(self, root: RootVector) -> tuple[int, ...]:
        """Coefficients of root^ in the simple-coroot basis (always integers)."""
        sq = self.root_length_sq(root)
        out = []
        for i, c in enumerate(root):
            val = Fraction(c) * self.lengths[i] / sq
            if val.denominator != 1:
                raise AssertionError(f"coroot of {root} is not in the coroot lattice")
            out.append(val.numerator)
        return tuple(out)

    def coroot_coweight_coords(self, root: RootVector) -> tuple[int, ...]:
        """root^ in fundamental-coweight coordinates (= Cartan @ coroot_coords)."""
        k = self.coroot_coords(root)
        return tuple(sum(self.cartan[i][j] * k[j] for j in range(self.rank))
                     for i in range(self.rank))

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.type),
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "num_roots": len(self.roots),
            "roots": [list(r) for r in self.roots],
            "highest_root": list(self.highest_root),
            "marks": list(self.marks),
            "comarks": list(self.comarks),
        }


def _close_under_reflections(cartan) -> set[RootVector]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        root = frontier.pop()
        for j in range(n):
            pair = sum(c * cartan[r][j] for r, c in enumerate(root))
            if pair == 0:
                continue
            img = tuple(c - pair * int(r == j) for r, c in enumerate(root))
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    seen |= {tuple(-c for c in r) for r in seen}
    return seen


@lru_cache(maxsize=None)
def build(st: SimpleType) -> RootSystem:
    """Construct the full root system for a simple type.

    Roots are generated by closing the simple roots under simple
    reflections; marks and comarks are read off the highest root and its
    coroot.  Construction is validated against the closed-form root count
    and connection index for the type.
    """
    cartan = _cartan_matrix(st)
    n = st.rank
    roots = sorted(_close_under_reflections(cartan))
    expected = _NUM_ROOTS[st.family](n)
    if len(roots) != expected:
        raise AssertionError(f"{st}: generated {len(roots)} roots, expected {expected}")
    if abs(int_det(cartan)) != _CONNECTION_INDEX[st.family](n):
        raise AssertionError(f"{st}: Cartan determinant mismatch")

    highest = max(roots, key=lambda r: (sum(r), r))
    # dominance maximality: highest - root must be a nonnegative vector for all roots
    for r in roots:
        if r != highest and not all(h - c >= 0 for h, c in zip(highest, r)):
            raise AssertionError(f"{st}: highest root is not dominance-maximal")

    lengths = _squared_lengths(cartan)
    bilinear = tuple(tuple(Fraction(cartan[i][j]) * lengths[j] / 2 for j in range(n))
                     for i in range(n))
    sq = sum(Fraction(ci) * Fraction(cj) * bilinear[i][j]
             for i, ci in enumerate(highest) for j, cj in enumerate(highest))
    if sq != max(lengths):
        raise AssertionError(f"{st}: highest root is not long")
    comarks = []
    for i, c in enumerate(highest):
        g = Fraction(c) * lengths[i] / sq
        if g.denominator != 1 or g <= 0:
            raise AssertionError(f"{st}: bad comark {g} at node {i + 1}")
        comarks.append(g.numerator)
    return RootSystem(type=st, cartan=cartan, roots=tuple(roots),
                      highest_root=highest, marks=highest,
                      comarks=tuple(comarks), lengths=lengths, bilinear=bilinear)


def build_named(name: str) -> RootSystem:
    return build(parse_type(name))


@lru_cache(maxsize=None)
def inverse_cartan(rs: RootSystem) -> tuple[Coords, ...]:
    return rational_inverse(rs.cartan)


def coroot_in_coweight_basis(rs: RootSystem, j: int) -> Coords:
    """Coweight coordinates of the j-th simple coroot (column j of the Cartan matrix).

    j is 1-based, matching the node numbering.
    """
    if not (1 <= j <= rs.rank):
        raise ValueError(f"node index {j} out of range 1..{rs.rank}")
    return tuple(Fraction(rs.cartan[i][j - 1]) for i in range(rs.rank))


def parse_point(text: str, rank: int) -> Coords:
    """Parse exact comma-separated rational coordinates like "1/3,0,-2/5".

    Decimal input is rejected: coordinates are torus points and must stay
    exact.
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise ValueError(f"expected {rank} coordinates, got {len(parts)}")
    coords = []
    for p in parts:
        if "." in p or "e" in p.lower():
            raise ValueError(f"decimal coordinate {p!r} rejected; use exact fractions like 1/3")
        try:
            coords.append(Fraction(p))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse coordinate {p!r}: {exc}") from None
    return tuple(coords)


def format_point(coords) -> str:
    return ",".join(str(c) for c in coords)

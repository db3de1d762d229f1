"""Extended Dynkin diagrams, their automorphisms, and cyclic type-A folding.

Extended nodes carry stable integer ids: 0 is the lowest-root node, 1..n
are the simple nodes in Bourbaki order.  Center elements of the simply
connected group are identified with the special nodes (mark 1) of the
extended diagram; node 0 is the identity element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import vec_add
from .rootsys import Coords, RootSystem, SimpleType
from .weyl import highest_coroot_coweight, reduce_to_alcove


@dataclass(frozen=True)
class ExtendedDiagram:
    """Extended Dynkin diagram with per-node marks and comarks.

    cartan[i][j] is the pairing of extended root i with extended coroot j;
    node 0 is the lowest root, with mark and comark 1.
    """

    rs: RootSystem
    nodes: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    comarks: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.rs.rank

    def node_root(self, i: int) -> tuple[int, ...]:
        """Root vector of an extended node in the simple-root basis."""
        if i == 0:
            return tuple(-c for c in self.rs.highest_root)
        return tuple(int(i - 1 == j) for j in range(self.rank))

    def edges(self) -> list[tuple[int, int, int, int]]:
        """(i, j, cartan[i][j], cartan[j][i]) for each bonded unordered pair."""
        out = []
        for a in range(len(self.nodes)):
            for b in range(a + 1, len(self.nodes)):
                if self.cartan[a][b] != 0:
                    out.append((a, b, self.cartan[a][b], self.cartan[b][a]))
        return out

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.rs.type),
            "nodes": [{"id": i, "mark": self.marks[i], "comark": self.comarks[i],
                       "root": list(self.node_root(i))} for i in self.nodes],
            "edges": [{"from": a, "to": b, "pairing": [p, q]}
                      for a, b, p, q in self.edges()],
        }


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Node permutation preserving the extended Cartan matrix, marks, and comarks."""

    perm: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.perm))

    def __call__(self, node: int) -> int:
        return self.perm[node]

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        return DiagramAutomorphism(tuple(self.perm[p] for p in other.perm))

    def order(self) -> int:
        k = 1
        cur = self
        while not cur.is_identity:
            cur = cur.compose(self)
            k += 1
        return k

    def orbits(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.perm)):
            if start in seen:
                continue
            orb = [start]
            seen.add(start)
            cur = self.perm[start]
            while cur != start:
                orb.append(cur)
                seen.add(cur)
                cur = self.perm[cur]
            out.append(tuple(orb))
        return out


@lru_cache(maxsize=None)
def extended_diagram(rs: RootSystem) -> ExtendedDiagram:
    """Attach the lowest root to the Dynkin diagram via its exact pairings."""
    n = rs.rank
    lowest = tuple(-c for c in rs.highest_root)
    roots = [lowest] + [tuple(int(i == j) for j in range(n)) for i in range(n)]
    coroot_cw = [tuple(-x for x in highest_coroot_coweight(rs))]
    coroot_cw += [tuple(rs.cartan[r][j] for r in range(n)) for j in range(n)]
    cart = tuple(tuple(sum(c * x for c, x in zip(roots[i], coroot_cw[j]))
                       for j in range(n + 1)) for i in range(n + 1))
    for i in range(n + 1):
        if cart[i][i] != 2:
            raise AssertionError("extended Cartan diagonal must be 2")
    return ExtendedDiagram(rs=rs, nodes=tuple(range(n + 1)), cartan=cart,
                           marks=(1,) + tuple(rs.marks),
                           comarks=(1,) + tuple(rs.comarks))


def is_diagram_automorphism(ed: ExtendedDiagram, perm) -> bool:
    m = len(ed.nodes)
    if sorted(perm) != list(range(m)):
        return False
    if any(ed.marks[perm[i]] != ed.marks[i] or ed.comarks[perm[i]] != ed.comarks[i]
           for i in range(m)):
        return False
    return all(ed.cartan[perm[i]][perm[j]] == ed.cartan[i][j]
               for i in range(m) for j in range(m))


def automorphism_group(ed: ExtendedDiagram) -> list[DiagramAutomorphism]:
    """Full label-preserving automorphism group, by backtracking search."""
    m = len(ed.nodes)
    results = []

    def extend(partial):
        i = len(partial)
        if i == m:
            results.append(DiagramAutomorphism(tuple(partial)))
            return
        used = set(partial)
        for cand in range(m):
            if cand in used:
                continue
            if ed.marks[cand] != ed.marks[i] or ed.comarks[cand] != ed.comarks[i]:
                continue
            if any(ed.cartan[i][j] != ed.cartan[cand][partial[j]]
                   or ed.cartan[j][i] != ed.cartan[partial[j]][cand]
                   for j in range(i)):
                continue
            extend(partial + [cand])

    extend([])
    return results


@dataclass(frozen=True)
class CenterElement:
    """Element of the center of the simply connected group.

    Identified with the special node its alcove action sends node 0 to;
    node 0 itself is the identity.  The coweight vector is a minuscule
    representative (zero for the identity).
    """

    node: int
    rank: int

    @property
    def is_identity(self) -> bool:
        return self.node == 0

    def coweight(self) -> Coords:
        return tuple(Fraction(int(self.node == j + 1)) for j in range(self.rank))

    def __str__(self):
        return f"c[{self.node}]"


def special_nodes(rs: RootSystem) -> tuple[int, ...]:
    """Extended nodes of mark 1 (equivalently mark and comark both 1)."""
    ed = extended_diagram(rs)
    return tuple(i for i in ed.nodes if ed.marks[i] == 1)


def center_elements(rs: RootSystem) -> tuple[CenterElement, ...]:
    return tuple(CenterElement(i, rs.rank) for i in special_nodes(rs))


def center_element(rs: RootSystem, node: int) -> CenterElement:
    if node not in special_nodes(rs):
        raise ValueError(
            f"node {node} is not a special node of {rs.type}; center elements "
            f"correspond to nodes {list(special_nodes(rs))}")
    return CenterElement(node, rs.rank)


def alcove_vertices(rs: RootSystem) -> tuple[Coords, ...]:
    """Vertex of the alcove opposite each extended wall: origin for node 0,
    scaled fundamental coweights for the simple nodes."""
    n = rs.rank
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        verts.append(tuple(Fraction(int(i == j), rs.marks[i]) for j in range(n)))
    return tuple(verts)


@lru_cache(maxsize=None)
def center_automorphism(rs: RootSystem, c: CenterElement) -> DiagramAutomorphism:
    """Extended-diagram rotation induced by a center element.

    The translation by the minuscule coweight, straightened back into the
    alcove, permutes the alcove vertices; the node permutation is read off
    through the wall/vertex correspondence.  The map from the center to the
    automorphism group is an injective homomorphism.
    """
    if c.node not in special_nodes(rs):
        raise ValueError(f"{c} is not a center element of {rs.type}")
    verts = alcove_vertices(rs)
    lam = c.coweight()
    perm = []
    for v in verts:
        image, _ = reduce_to_alcove(rs, vec_add(v, lam))
        try:
            perm.append(verts.index(image.point))
        except ValueError:
            raise AssertionError("center action did not permute alcove vertices") from None
    auto = DiagramAutomorphism(tuple(perm))
    if not is_diagram_automorphism(extended_diagram(rs), auto.perm):
        raise AssertionError("center action is not a diagram automorphism")
    return auto


def center_product(rs: RootSystem, a: CenterElement, b: CenterElement) -> CenterElement:
    """Group law on the center through composition of the induced rotations."""
    auto = center_automorphism(rs, a).compose(center_automorphism(rs, b))
    return CenterElement(auto(0), rs.rank)


@dataclass(frozen=True)
class FoldDescriptor:
    """Quotient data of a cyclic fold of the type-A extended cycle."""

    base: SimpleType
    k: int
    factors: tuple[SimpleType, ...]
    torus_rank: int
    rotation_order: int
    orbit_representatives: tuple[int, ...]
    fixed_space_dim: int

    def to_json_dict(self) -> dict:
        return {"type": str(self.base), "k": self.k,
                "factors": [str(f) for f in self.factors],
                "torus_rank": self.torus_rank,
                "rotation_order": self.rotation_order,
                "orbit_representatives": list(self.orbit_representatives),
                "fixed_space_dim": self.fixed_space_dim}


def fold_cyclic(rs: RootSystem, k: int) -> FoldDescriptor:
    """Quotient of the type-A extended cycle by the order-k rotation.

    With n + 1 = k * l, the deleted node orbit is {0, l, 2l, ...}; the
    remaining gaps give k copies of A_{l-1}, a torus of rank k - 1, and the
    rotation group of order k.  The affine fixed space of the rotation has
    dimension l - 1 (the bare barycenter when k = n + 1).
    """
    if rs.type.family != "A":
        raise ValueError(f"cyclic folding is defined for type A only, got {rs.type}")
    n = rs.rank
    if k < 1 or (n + 1) % k != 0:
        raise ValueError(f"k={k} must divide n+1={n + 1}")
    l = (n + 1) // k
    factors = tuple(SimpleType("A", l - 1) for _ in range(k)) if l > 1 else ()
    reps = tuple(i * l for i in range(k))
    return FoldDescriptor(base=rs.type, k=k, factors=factors, torus_rank=k - 1,
                          rotation_order=k, orbit_representatives=reps,
                          fixed_space_dim=l - 1)

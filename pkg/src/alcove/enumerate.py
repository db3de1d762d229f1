"""Subsystem enumeration by extended-diagram node deletion, the finite list
of single-element centralizer types, and maximal irredundant chain lengths.

Faces of the fundamental alcove are indexed by proper subsets of the
extended wall set; the subsystem of a face is generated by its wall roots.
Chain lengths are computed by memoised recursion over face descriptors:
an abelian descriptor (no simple factors) has length zero, and every step
must strictly shrink the annihilating subsystem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .centralizer import (CentralizerDescriptor, SubsystemDescriptor,
                          base_cartan, classify_components, classify_cartan,
                          extended_node_roots, subsystem_coroot_lattice,
                          subsystem_from_base)
from .diagram import alcove_vertices, extended_diagram
from .errors import ResourceCapExceeded
from .intlat import FiniteAbelianGroup, coroot_lattice, saturation_quotient
from .rootsys import Coords, RootSystem, RootVector, SimpleType, build


def closed_subsystem(rs: RootSystem, generators) -> frozenset[RootVector]:
    """Smallest symmetric, additively closed subset of the roots containing
    the generators."""
    root_set = set(rs.roots)
    cur = set()
    for g in generators:
        cur.add(tuple(g))
        cur.add(tuple(-c for c in g))
    while True:
        new = set()
        items = list(cur)
        for i, a in enumerate(items):
            for b in items[i:]:
                s = tuple(x + y for x, y in zip(a, b))
                if s in root_set and s not in cur:
                    new.add(s)
        if not new:
            return frozenset(cur)
        cur |= new


@dataclass(frozen=True)
class FaceType:
    """One alcove face: its tight walls and the induced centralizer data."""

    walls: tuple[int, ...]
    factors: tuple[SimpleType, ...]
    subsystem_rank: int
    torus_rank: int
    quotient: FiniteAbelianGroup
    point: Coords                      # relative-interior representative

    @property
    def is_full(self) -> bool:
        """Whether the face subsystem is the whole ambient system."""
        return self.torus_rank == 0 and len(self.factors) == 1


def _face_point(rs: RootSystem, walls) -> Coords:
    verts = alcove_vertices(rs)
    free = [verts[j] for j in range(rs.rank + 1) if j not in walls]
    k = len(free)
    return tuple(sum(col, Fraction(0)) / k for col in zip(*free))


@lru_cache(maxsize=None)
def face_types(rs: RootSystem) -> tuple[FaceType, ...]:
    """All faces of the closed alcove, one per proper subset of extended walls."""
    nodes = tuple(range(rs.rank + 1))
    out = []
    for size in range(rs.rank + 1):
        for walls in combinations(nodes, size):
            base = extended_node_roots(rs, walls)
            if walls:
                factors = classify_cartan(base_cartan(rs, base))
                quotient = saturation_quotient(
                    coroot_lattice(rs), subsystem_coroot_lattice(rs, base))
            else:
                factors = ()
                quotient = FiniteAbelianGroup.trivial()
            out.append(FaceType(walls=walls, factors=factors,
                                subsystem_rank=len(walls),
                                torus_rank=rs.rank - len(walls),
                                quotient=quotient,
                                point=_face_point(rs, set(walls))))
    return tuple(out)


def proper_faces(rs: RootSystem) -> list[FaceType]:
    """Faces whose subsystem is strictly smaller than the whole system.

    A face subsystem equals the whole system exactly when it has full rank
    and the same type (same type forces the same root count).
    """
    return [f for f in face_types(rs)
            if not (f.torus_rank == 0 and f.factors == (rs.type,))]


def lemma_faces(rs: RootSystem) -> list[FaceType]:
    """Vertices, plus edges whose two endpoint vertices are both central.

    A vertex is central iff its opposite wall has mark one, so an edge
    qualifies iff both of its missing walls are mark-one nodes.
    """
    ed = extended_diagram(rs)
    out = []
    for f in proper_faces(rs):
        if len(f.walls) == rs.rank:
            out.append(f)
        elif len(f.walls) == rs.rank - 1:
            missing = [j for j in range(rs.rank + 1) if j not in f.walls]
            if all(ed.marks[j] == 1 for j in missing):
                out.append(f)
    return out


def _dedupe_key(desc: SubsystemDescriptor, quotient: FiniteAbelianGroup):
    return (tuple(str(f) for f in desc.factors), quotient.invariant_factors)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, int(n ** 0.5) + 1))


def bds_maximal(rs: RootSystem) -> list[SubsystemDescriptor]:
    """Maximal-rank proper subsystems: single prime-mark node deletions of
    the extended diagram, deduplicated by factor types and lattice invariant.

    Mark-one deletions regenerate the whole system and composite-mark
    deletions land inside a prime-mark one, so neither is kept.  In type A
    every mark is one and the full system itself is returned as the single
    (degenerate) entry.
    """
    ed = extended_diagram(rs)
    results = {}
    total = len(rs.roots)
    for removed in range(rs.rank + 1):
        if not _is_prime(ed.marks[removed]):
            continue
        kept = [i for i in range(rs.rank + 1) if i != removed]
        base = extended_node_roots(rs, kept)
        if len(closed_subsystem(rs, base)) == total:
            continue
        desc = subsystem_from_base(rs, tuple(sorted(base)))
        quotient = saturation_quotient(coroot_lattice(rs),
                                       subsystem_coroot_lattice(rs, desc.base))
        results.setdefault(_dedupe_key(desc, quotient), desc)
    if not results:
        desc = subsystem_from_base(
            rs, tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)))
        return [desc]
    return [results[k] for k in sorted(results)]


def bds_all(rs: RootSystem, cap: int = 200000) -> list[SubsystemDescriptor]:
    """All subsystems reachable by iterated extended-diagram node deletion.

    States are explicit simple bases.  Deleting several nodes from one
    extended diagram factors into one extended single-node deletion followed
    by plain single-node deletions, so each state only branches over single
    deletions.  Output descriptors are deduplicated by factor types plus the
    saturation-quotient invariant.
    """
    start = frozenset(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    visited = {start}
    queue = [start]
    results = {}
    while queue:
        state = queue.pop()
        base = tuple(sorted(state))
        if not base:
            continue
        desc = subsystem_from_base(rs, base)
        quotient = saturation_quotient(coroot_lattice(rs),
                                       subsystem_coroot_lattice(rs, base))
        results.setdefault(_dedupe_key(desc, quotient), desc)

        children = []
        # plain deletion: drop one base root
        for root in base:
            children.append(state - {root})
        # extended deletion: adjoin a factor's lowest root, drop one node
        for st, positions in classify_components(base_cartan(rs, base)):
            comp_roots = [base[p] for p in positions]
            marks = build(st).marks
            lowest = tuple(-sum(m * r[i] for m, r in zip(marks, comp_roots))
                           for i in range(rs.rank))
            ext = set(comp_roots) | {lowest}
            others = state - set(comp_roots)
            for removed in ext:
                children.append(frozenset(others | (ext - {removed})))
        for nxt in children:
            if nxt not in visited:
                if len(visited) >= cap:
                    raise ResourceCapExceeded(
                        f"subsystem enumeration exceeds cap {cap}")
                visited.add(nxt)
                queue.append(nxt)
    return [results[k] for k in sorted(results)]


def centralizer_types(rs: RootSystem) -> list[CentralizerDescriptor]:
    """The finite list of centralizer types of single torus elements.

    One descriptor per alcove face, deduplicated by (factors, torus rank);
    centralizers of single elements in the simply connected group are
    connected, so every component group is trivial.
    """
    if rs.rank > 8:
        raise ValueError("rank is capped at 8")
    seen = {}
    for face in face_types(rs):
        key = (tuple(str(f) for f in face.factors), face.torus_rank)
        if key in seen:
            continue
        base = extended_node_roots(rs, face.walls)
        desc = subsystem_from_base(rs, tuple(sorted(base)))
        seen[key] = CentralizerDescriptor(
            subsystem=desc, torus_rank=face.torus_rank,
            component_group=FiniteAbelianGroup.trivial(),
            lattice_quotient=face.quotient)
    return [seen[k] for k in sorted(seen, key=lambda k: (k[1], k[0]))]


@dataclass(frozen=True)
class ChainNode:
    """One link of an irredundant chain witness."""

    factors: tuple[SimpleType, ...]
    torus_rank: int
    point: Coords                 # face representative in the shrunk factor's coordinates
    shrunk: str
    walls: tuple[int, ...]
    depth: int
    kind: str = "face"

    def to_json_dict(self) -> dict:
        return {"factors": [str(f) for f in self.factors],
                "torus_rank": self.torus_rank,
                "point": [str(c) for c in self.point],
                "shrunk": self.shrunk, "walls": list(self.walls),
                "depth": self.depth, "kind": self.kind}


@dataclass(frozen=True)
class ChainBound:
    """Maximal irredundant chain length with an explicit witness chain."""

    m: int
    chain: tuple[ChainNode, ...]

    def to_json_dict(self) -> dict:
        return {"m": self.m, "chain": [n.to_json_dict() for n in self.chain]}


class _ChainSearch:
    """Memoised depth-first recursion over face descriptors.

    A step picks a proper face of one factor's alcove; its value is one plus
    the value of the face descriptor.  With component steps enabled, a face
    whose subsystem saturation quotient is nontrivial may instead terminate
    through the fixed locus of the induced diagonal action: one element
    exhibiting the disconnected centralizer and one inside the diagonal
    subgroup, two further links in total.
    """

    def __init__(self, component_steps: bool, lemma_only: bool, face_order=None):
        self.component_steps = component_steps
        self.lemma_only = lemma_only
        self.face_order = face_order or (lambda faces: faces)
        self.memo = {}

    def faces(self, st: SimpleType):
        rs = build(st)
        fs = lemma_faces(rs) if self.lemma_only else proper_faces(rs)
        return self.face_order(list(fs))

    def of_type(self, st: SimpleType):
        if st in self.memo:
            return self.memo[st]
        best = (0, [])
        for face in self.faces(st):
            sub_m, sub_steps = self.of_factors(face.factors)
            value = 1 + sub_m
            steps = [((st,), face.walls, face.point, face.factors,
                      st.rank - face.subsystem_rank, "face")] + sub_steps
            if self.component_steps and not face.quotient.is_trivial:
                comp_value = 1 + 2
                if comp_value > value:
                    value = comp_value
                    steps = [((st,), face.walls, face.point, face.factors,
                              st.rank - face.subsystem_rank, "face"),
                             (tuple(face.factors), face.walls, face.point, (),
                              face.subsystem_rank, "fixed-locus"),
                             ((), face.walls, face.point, (), 0, "component")]
            if value > best[0]:
                best = (value, steps)
        self.memo[st] = best
        return best

    def of_factors(self, factors):
        total = 0
        steps = []
        for f in sorted(factors, key=lambda t: (-self.of_type(t)[0], str(t))):
            m, s = self.of_type(f)
            total += m
            steps += s
        return total, steps


def max_chain(rs: RootSystem, include_component_steps: bool = False,
              restrict_to_lemma_faces: bool = False, face_order=None) -> ChainBound:
    """Maximal length of an irredundant chain of commuting elements.

    The recursion bottoms out at abelian descriptors (no simple factors);
    every link strictly shrinks the annihilating subsystem, so (rank, root
    count) decreases lexicographically along the witness.
    """
    if rs.rank > 8:
        raise ValueError("rank is capped at 8")
    search = _ChainSearch(include_component_steps, restrict_to_lemma_faces, face_order)
    m, steps = search.of_type(rs.type)

    chain = []
    current = [rs.type]
    torus = 0
    for depth, (consumed, walls, point, produced, tdelta, kind) in enumerate(steps, 1):
        shrunk = ",".join(str(t) for t in consumed) if consumed else "diagonal"
        for t in consumed:
            current.remove(t)
        current.extend(produced)
        torus += tdelta
        chain.append(ChainNode(factors=tuple(sorted(current)), torus_rank=torus,
                               point=point, shrunk=shrunk, walls=tuple(walls),
                               depth=depth, kind=kind))
    return ChainBound(m=m, chain=tuple(chain))

"""Centralizers of commuting torus tuples via root annihilators and lattices.

For a tuple of torus points the annihilating roots form a closed subsystem;
its Dynkin type, the torus corank, and the component group computed from
translation classes of an intermediate lattice together describe the
centralizer.  Tuples are processed stage by stage: each element is measured
against the subsystem cut out by its predecessors, with the lattice between
the subsystem coroots and their saturation carrying the disconnectedness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ResourceCapExceeded
from .intlat import (FiniteAbelianGroup, IntegerLattice, coroot_lattice,
                     lattice_from_rows, lattice_quotient, saturate,
                     saturation_quotient, span_lattice)
from .linalg import coords_in_rows, identity, int_det, mat_mul, mat_vec, vec_add, vec_sub
from .rootsys import Coords, RootSystem, RootVector, SimpleType, build
from .weyl import DEFAULT_GROUP_CAP, points_equal_mod_coroot, reflection_matrix


@dataclass(frozen=True)
class SubsystemDescriptor:
    """A closed subsystem: factor types plus a chosen simple base."""

    factors: tuple[SimpleType, ...]
    ambient_rank: int
    rank: int
    base: tuple[RootVector, ...]

    def factor_names(self) -> list[str]:
        return [str(f) for f in self.factors]

    def to_json_dict(self) -> dict:
        return {"factors": self.factor_names(), "rank": self.rank,
                "ambient_rank": self.ambient_rank,
                "base": [list(b) for b in self.base]}


@dataclass(frozen=True)
class StageInfo:
    """Diagnostics for one element of a tuple."""

    index: int
    factors: tuple[SimpleType, ...]
    subsystem_rank: int
    lattice_quotient: FiniteAbelianGroup
    component_group: FiniteAbelianGroup
    weyl_order: int
    witness_pairs: int
    weyl_fix: int
    quotient_reading_consistent: bool

    def to_json_dict(self) -> dict:
        return {"index": self.index, "factors": [str(f) for f in self.factors],
                "subsystem_rank": self.subsystem_rank,
                "lattice_quotient": list(self.lattice_quotient.invariant_factors),
                "component_group": list(self.component_group.invariant_factors),
                "weyl_order": self.weyl_order,
                "witness_pairs": self.witness_pairs,
                "weyl_fix": self.weyl_fix,
                "quotient_reading_consistent": self.quotient_reading_consistent}


@dataclass(frozen=True)
class CentralizerDescriptor:
    """Type of the centralizer of a commuting tuple."""

    subsystem: SubsystemDescriptor
    torus_rank: int
    component_group: FiniteAbelianGroup
    lattice_quotient: FiniteAbelianGroup
    stages: tuple[StageInfo, ...] = ()

    def to_json_dict(self) -> dict:
        return {"factors": self.subsystem.factor_names(),
                "torus_rank": self.torus_rank,
                "component_group": list(self.component_group.invariant_factors),
                "lattice_quotient": list(self.lattice_quotient.invariant_factors),
                "stages": [s.to_json_dict() for s in self.stages]}


def annihilator_roots(rs: RootSystem, points) -> tuple[RootVector, ...]:
    """Roots whose pairing with every point of the tuple is an integer."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    out = []
    for root in rs.roots:
        if all(rs.pairing(root, p).denominator == 1 for p in pts):
            out.append(root)
    return tuple(out)


def extract_base(rs: RootSystem, roots) -> tuple[RootVector, ...]:
    """Simple base of a closed subsystem: indecomposable positives.

    Positivity comes from the exact generic functional (1, e, e^2, ...) with
    e = 1/N and N beyond any coefficient sum, so the sign test is the sign
    of the first nonzero coefficient.
    """
    if not roots:
        return ()
    n = rs.rank
    bound = 1 + max(sum(abs(c) for c in r) for r in roots)
    eps = Fraction(1, bound)
    weights = [eps ** i for i in range(n)]

    def value(root):
        return sum(c * w for c, w in zip(root, weights))

    positives = [r for r in roots if value(r) > 0]
    pos_set = set(positives)
    base = []
    for beta in positives:
        decomposable = any(
            tuple(b - g for b, g in zip(beta, gamma)) in pos_set
            for gamma in positives if gamma != beta)
        if not decomposable:
            base.append(beta)
    return tuple(sorted(base))


def base_cartan(rs: RootSystem, base) -> tuple[tuple[int, ...], ...]:
    """Pairing matrix of a base: entry (i, j) is base_i evaluated on base_j's coroot."""
    cols = [rs.coroot_coweight_coords(b) for b in base]
    return tuple(tuple(int(rs.pairing(bi, col)) for col in cols) for bi in base)


def _connected_components(m) -> list[list[int]]:
    n = len(m)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if not seen[j] and m[i][j] != 0:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _validate_cartan(m) -> None:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("Cartan matrix must be square")
    for i in range(n):
        if m[i][i] != 2:
            raise ValueError(f"Cartan diagonal must be 2, got {m[i][i]}")
        for j in range(n):
            if i == j:
                continue
            if m[i][j] > 0:
                raise ValueError("off-diagonal Cartan entries must be <= 0")
            if (m[i][j] == 0) != (m[j][i] == 0):
                raise ValueError("Cartan zero pattern must be symmetric")
            if m[i][j] * m[j][i] > 3:
                raise ValueError("bond multiplicity exceeds 3: not finite type")
    # positive definiteness: every leading principal minor is positive
    for k in range(1, n + 1):
        sub = [row[:k] for row in m[:k]]
        if int_det(sub) <= 0:
            raise ValueError("Cartan matrix is not positive definite: not finite type")


def _match_type(component_matrix, st: SimpleType):
    """Permutation sigma with component[sigma(i)][sigma(j)] equal to the
    canonical Cartan matrix of st, or None."""
    target = build(st).cartan
    n = len(target)
    m = component_matrix

    def extend(partial):
        i = len(partial)
        if i == n:
            return tuple(partial)
        used = set(partial)
        for cand in range(n):
            if cand in used:
                continue
            ok = True
            for j in range(i):
                if m[cand][partial[j]] != target[i][j] or m[partial[j]][cand] != target[j][i]:
                    ok = False
                    break
            if ok:
                res = extend(partial + [cand])
                if res is not None:
                    return res
        return None

    return extend([])


_FAMILY_ORDER = "ABCDEFG"


def classify_components(m):
    """Connected components of a Cartan matrix with their types and node maps.

    Returns a list of (SimpleType, positions) where positions[c] is the
    component-node index realising canonical node c+1.  Isomorphic
    presentations collapse to a canonical choice (A3 rather than D3, B2
    rather than C2).
    """
    _validate_cartan(m)
    out = []
    for comp in _connected_components(m):
        sub = [[m[i][j] for j in comp] for i in comp]
        r = len(comp)
        found = None
        for fam in _FAMILY_ORDER:
            try:
                st = SimpleType(fam, r)
            except ValueError:
                continue
            sigma = _match_type(sub, st)
            if sigma is not None:
                found = (st, tuple(comp[s] for s in sigma))
                break
        if found is None:
            raise ValueError(f"rank-{r} component is not a finite Cartan matrix")
        out.append(found)
    return out


def classify_cartan(m) -> tuple[SimpleType, ...]:
    """Dynkin type of a (possibly reducible) finite Cartan matrix, canonical up
    to isomorphism and sorted."""
    return tuple(sorted(st for st, _ in classify_components(m)))


def subsystem_from_base(rs: RootSystem, base) -> SubsystemDescriptor:
    cart = base_cartan(rs, base)
    return SubsystemDescriptor(factors=classify_cartan(cart),
                               ambient_rank=rs.rank, rank=len(base), base=tuple(base))


def annihilator_subsystem(rs: RootSystem, points) -> SubsystemDescriptor:
    """Closed subsystem annihilating a commuting tuple, with classified base."""
    if not points:
        raise ValueError("tuple must contain at least one point")
    for p in points:
        if len(p) != rs.rank:
            raise ValueError(f"point {p} has wrong dimension for {rs.type}")
    return subsystem_from_base(rs, extract_base(rs, annihilator_roots(rs, points)))


def pi1_gcd(rs: RootSystem, kept) -> FiniteAbelianGroup:
    """Fundamental group of the subsystem spanned by a kept set of extended nodes.

    Cyclic of order gcd of the comarks of the removed simple nodes; must
    agree with the Smith-form saturation quotient of the kept coroots.
    """
    kept = set(kept)
    nodes = set(range(rs.rank + 1))
    if not kept <= nodes:
        raise ValueError(f"kept nodes {sorted(kept)} out of range 0..{rs.rank}")
    if 0 not in kept:
        raise ValueError("kept set must contain the lowest-root node 0")
    removed = sorted(nodes - kept)
    if not removed:
        raise ValueError("kept set must be a proper subset of the extended nodes")
    g = math.gcd(*(rs.comarks[i - 1] for i in removed))
    return FiniteAbelianGroup.cyclic(g)


def extended_node_roots(rs: RootSystem, nodes) -> tuple[RootVector, ...]:
    """Root vectors of extended nodes (0 is the lowest root)."""
    out = []
    for i in nodes:
        if i == 0:
            out.append(tuple(-c for c in rs.highest_root))
        else:
            out.append(tuple(int(i - 1 == j) for j in range(rs.rank)))
    return tuple(out)


def subsystem_coroot_lattice(rs: RootSystem, base) -> IntegerLattice:
    """Lattice spanned by the coroots of a subsystem base, coweight coordinates."""
    return lattice_from_rows([rs.coroot_coweight_coords(b) for b in base], rs.rank)


def subsystem_saturation(rs: RootSystem, base) -> IntegerLattice:
    """Q^ intersected with the rational span of the subsystem coroots."""
    if not base:
        return lattice_from_rows([], rs.rank)
    return saturate(coroot_lattice(rs), subsystem_coroot_lattice(rs, base))


@lru_cache(maxsize=None)
def _subgroup_matrices(rs: RootSystem, base, cap: int):
    """Subgroup of W generated by the reflections of a subsystem base."""
    gens = [reflection_matrix(rs, b) for b in base]
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
                            f"subsystem Weyl group exceeds cap {cap}")
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return tuple(sorted(seen))


def _quotient_classes(sup: IntegerLattice, sub_rows) -> list[Coords]:
    """Representatives of sup modulo the lattice spanned by sub_rows.

    Requires equal rank (finite quotient).  Representatives are
    canonicalised to the fundamental parallelepiped of the sublattice and
    always include the zero class first.
    """
    rank = len(sub_rows)
    if sup.rank != rank:
        raise ValueError("lattice quotient is infinite: ranks differ")
    zero = tuple(Fraction(0) for _ in range(sup.dim))
    if rank == 0:
        return [zero]

    def canon(v):
        coeffs = coords_in_rows(v, sub_rows)
        if coeffs is None:
            raise AssertionError("vector escaped the subsystem span")
        frac = [Fraction(c) - (Fraction(c).numerator // Fraction(c).denominator)
                for c in coeffs]
        out = [Fraction(0)] * sup.dim
        for f, row in zip(frac, sub_rows):
            for i, x in enumerate(row):
                out[i] += f * x
        return tuple(out)

    reps = {zero}
    frontier = [zero]
    gens = [tuple(Fraction(x) for x in row) for row in sup.basis]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                img = canon(vec_add(p, g))
                if img not in reps:
                    reps.add(img)
                    nxt.append(img)
        frontier = nxt
    return [zero] + sorted(reps - {zero})


def _in_row_lattice(v, rows) -> bool:
    coeffs = coords_in_rows(v, rows)
    return coeffs is not None and all(Fraction(c).denominator == 1 for c in coeffs)


def component_group_detailed(rs: RootSystem, points, lattice: IntegerLattice | None = None,
                             cap: int = DEFAULT_GROUP_CAP):
    """Component group of the centralizer of a tuple, with diagnostics.

    The last element is measured against the subsystem annihilating the
    preceding ones (the whole system for a single element).  A translation
    class c of the intermediate lattice modulo the subsystem coroot lattice
    contributes iff a single witness w in the subsystem Weyl group moves
    every shifted point back to its original torus class, the earlier points
    modulo Q^ and the final one modulo the subsystem coroots.

    `lattice` overrides the default saturation lattice (for a single
    element: Q^ itself; supplying the coweight lattice models the adjoint
    group).  Returns (group, stage_info).
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("tuple must contain at least one point")
    prefix, last = pts[:-1], pts[-1]
    psi = annihilator_roots(rs, prefix) if prefix else rs.roots
    base = extract_base(rs, psi)
    qpsi_rows = [rs.coroot_coweight_coords(b) for b in base]

    if lattice is None:
        lat = subsystem_saturation(rs, base)
    else:
        lat = lattice
        if lat.rank != len(base):
            raise ValueError("supplied lattice has wrong rank for the subsystem "
                             f"({lat.rank} vs {len(base)})")
        if base and not all(_in_row_lattice(row, lat.basis) for row in qpsi_rows):
            raise ValueError("supplied lattice does not contain the subsystem coroots")

    classes = _quotient_classes(lat, qpsi_rows)
    group_matrices = _subgroup_matrices(rs, base, cap)

    def stabilizes(w, lam):
        for p in prefix:
            if not points_equal_mod_coroot(rs, mat_vec(w, vec_add(p, lam)), p):
                return False
        diff = vec_sub(mat_vec(w, vec_add(last, lam)), last)
        return _in_row_lattice(diff, qpsi_rows)

    stabilizing = []
    witness_pairs = 0
    weyl_fix = 0
    for lam in classes:
        hits = sum(1 for w in group_matrices if stabilizes(w, lam))
        witness_pairs += hits
        if lam == classes[0]:
            weyl_fix = hits
        if hits:
            stabilizing.append(lam)

    base_types = classify_cartan(base_cartan(rs, base)) if base else ()
    quotient = (lattice_quotient(lat, lattice_from_rows(qpsi_rows, rs.rank))
                if base else FiniteAbelianGroup.trivial())

    nonzero = [v for v in stabilizing if any(v)]
    if nonzero:
        lifts = []
        for v in nonzero:
            if any(Fraction(x).denominator != 1 for x in v):
                raise AssertionError("stabilizing class representative must be integral")
            lifts.append(tuple(int(Fraction(x)) for x in v))
        span = span_lattice(lifts + [tuple(row) for row in qpsi_rows], rs.rank)
        group = lattice_quotient(span, lattice_from_rows(qpsi_rows, rs.rank))
    else:
        group = FiniteAbelianGroup.trivial()
    if group.order != len(stabilizing):
        raise AssertionError("stabilizing classes do not form a subgroup")

    info = StageInfo(index=len(pts), factors=base_types,
                     subsystem_rank=len(base), lattice_quotient=quotient,
                     component_group=group, weyl_order=len(group_matrices),
                     witness_pairs=witness_pairs, weyl_fix=weyl_fix,
                     quotient_reading_consistent=(witness_pairs == group.order * weyl_fix))
    return group, info


def component_group(rs: RootSystem, points, lattice: IntegerLattice | None = None,
                    cap: int = DEFAULT_GROUP_CAP) -> FiniteAbelianGroup:
    group, _ = component_group_detailed(rs, points, lattice, cap)
    return group


def centralizer_tuple(rs: RootSystem, points, cap: int = DEFAULT_GROUP_CAP) -> CentralizerDescriptor:
    """Full centralizer descriptor of a commuting tuple, processed in order.

    Stage j measures point j against the subsystem of the first j-1 points;
    the descriptor carries the final subsystem, torus corank, component
    group, and the saturation quotient handed to any further element.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("tuple must contain at least one point")
    if rs.rank > 8:
        raise ValueError("rank is capped at 8")
    stages = []
    for j in range(1, len(pts) + 1):
        _, info = component_group_detailed(rs, pts[:j], None, cap)
        stages.append(info)
    sub = annihilator_subsystem(rs, pts)
    final_quotient = (saturation_quotient(coroot_lattice(rs),
                                          subsystem_coroot_lattice(rs, sub.base))
                      if sub.base else FiniteAbelianGroup.trivial())
    return CentralizerDescriptor(subsystem=sub,
                                 torus_rank=rs.rank - sub.rank,
                                 component_group=stages[-1].component_group,
                                 lattice_quotient=final_quotient,
                                 stages=tuple(stages))

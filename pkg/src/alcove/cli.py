"""Command-line interface with deterministic text and JSON output.

Exit codes: 0 success, 2 input error, 3 resource cap exceeded.  JSON output
is schema-versioned and byte-identical for identical invocations; points
are entered as exact comma-separated fractions in fundamental-coweight
coordinates, semicolons separating the points of a tuple.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumerate as subsystems
from . import moduli
from .centralizer import centralizer_tuple
from .diagram import (center_element, extended_diagram, fold_cyclic,
                      special_nodes)
from .errors import ResourceCapExceeded
from .intlat import center
from .rootsys import build, parse_point, parse_type
from .weyl import DEFAULT_GROUP_CAP

SCHEMA_ID = "alcove.cli/1"


def _emit(args, command: str, payload: dict, text_lines) -> None:
    if args.format == "json":
        doc = {"schema": SCHEMA_ID, "command": command, "result": payload}
        sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _parse_points(text: str, rank: int):
    chunks = [c for c in text.split(";") if c.strip()]
    if not chunks:
        raise ValueError("no points given")
    return [parse_point(c, rank) for c in chunks]


def _cmd_info(args) -> None:
    rs = build(parse_type(args.type))
    ctr = center(rs)
    ed = extended_diagram(rs)
    payload = rs.to_json_dict()
    payload["center"] = list(ctr.invariant_factors)
    payload["center_order"] = ctr.order
    payload["special_nodes"] = list(special_nodes(rs))
    payload["extended_diagram"] = ed.to_json_dict()
    lines = [f"type {rs.type}  rank {rs.rank}  roots {len(rs.roots)}",
             "cartan " + " ".join(str(list(r)) for r in rs.cartan),
             f"marks {list(rs.marks)}",
             f"comarks {list(rs.comarks)}",
             f"center {ctr} (order {ctr.order})",
             f"special nodes {list(special_nodes(rs))}"]
    _emit(args, "info", payload, lines)


def _cmd_centralizer(args) -> None:
    rs = build(parse_type(args.type))
    points = _parse_points(args.points, rs.rank)
    desc = centralizer_tuple(rs, points, cap=args.max_weyl)
    payload = desc.to_json_dict()
    lines = [f"factors {' x '.join(desc.subsystem.factor_names()) or '(none)'}",
             f"torus_rank {desc.torus_rank}",
             f"component_group {desc.component_group}",
             f"lattice_quotient {desc.lattice_quotient}"]
    for st in desc.stages:
        lines.append(f"stage {st.index}: factors {[str(f) for f in st.factors]} "
                     f"pi0 {st.component_group} quotient {st.lattice_quotient}")
    _emit(args, "centralizer", payload, lines)


def _cmd_bds(args) -> None:
    rs = build(parse_type(args.type))
    descs = subsystems.bds_all(rs) if args.all else subsystems.bds_maximal(rs)
    payload = {"type": str(rs.type), "all": bool(args.all),
               "subsystems": [d.to_json_dict() for d in descs]}
    lines = [f"{' x '.join(d.factor_names()) or '(empty)'}  rank {d.rank}"
             for d in descs]
    _emit(args, "bds", payload, lines)


def _cmd_types(args) -> None:
    rs = build(parse_type(args.type))
    descs = subsystems.centralizer_types(rs)
    payload = {"type": str(rs.type), "count": len(descs),
               "types": [d.to_json_dict() for d in descs]}
    lines = [f"{len(descs)} centralizer types"]
    lines += [f"{' x '.join(d.subsystem.factor_names()) or '(torus)'} x T^{d.torus_rank}"
              for d in descs]
    _emit(args, "types", payload, lines)


def _cmd_chains(args) -> None:
    rs = build(parse_type(args.type))
    bound = subsystems.max_chain(rs, include_component_steps=args.component_steps,
                                 restrict_to_lemma_faces=(args.faces == "lemma"))
    payload = {"type": str(rs.type), "component_steps": bool(args.component_steps),
               "faces": args.faces}
    payload.update(bound.to_json_dict())
    lines = [f"m = {bound.m}"]
    for node in bound.chain:
        factors = " x ".join(str(f) for f in node.factors) or "(torus)"
        lines.append(f"  step {node.depth} [{node.kind}] shrink {node.shrunk} "
                     f"-> {factors} x T^{node.torus_rank}")
    _emit(args, "chains", payload, lines)


def _cmd_moduli(args) -> None:
    rs = build(parse_type(args.type))
    if args.level < 1:
        raise ValueError("--level must be a positive integer")
    burnside = moduli.count_pairs_burnside(rs, args.level, cap=args.max_weyl)
    payload = {"type": str(rs.type), "m": args.level, "burnside_count": burnside}
    lines = [f"orbits of pairs at level {args.level}: {burnside}"]
    if args.direct:
        direct = moduli.count_pairs_direct(rs, args.level, budget=args.budget,
                                           cap=args.max_weyl)
        payload["direct_count"] = direct
        lines.append(f"direct count: {direct}")
        if direct != burnside:
            raise AssertionError("direct orbit count disagrees with Burnside count")
    _emit(args, "moduli", payload, lines)


def _cmd_cpair(args) -> None:
    rs = build(parse_type(args.type))
    c = center_element(rs, args.center)
    data = moduli.cpair_fixed_space(rs, c)
    payload = {"type": str(rs.type), "cpair": data.to_json_dict()}
    lines = [f"center node {c.node}  fixed-space dim {data.dim}",
             f"base point {','.join(str(x) for x in data.base_point)}",
             f"delta nodes {list(data.delta)}"]
    _emit(args, "cpair", payload, lines)


def _cmd_fold(args) -> None:
    rs = build(parse_type(args.type))
    desc = fold_cyclic(rs, args.k)
    payload = desc.to_json_dict()
    factors = " x ".join(str(f) for f in desc.factors) or "(none)"
    lines = [f"{rs.type} / Z{desc.k}: {factors} x T^{desc.torus_rank} "
             f"rot Z/{desc.rotation_order}",
             f"orbit representatives {list(desc.orbit_representatives)}",
             f"fixed-space dim {desc.fixed_space_dim}"]
    _emit(args, "fold", payload, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcove",
        description="Exact root-system, alcove, and centralizer computations")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("type", help="simple type, e.g. A2, D5, E8")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--max-weyl", type=int, default=DEFAULT_GROUP_CAP,
                       help="cap on Weyl group enumeration size")

    p = sub.add_parser("info", help="Cartan data, marks, comarks, center")
    common(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("centralizer", help="centralizer descriptor of a commuting tuple")
    common(p)
    p.add_argument("--points", required=True,
                   help="semicolon-separated points, coordinates as exact fractions: '0,1/3;1/2,-1/2'")
    p.set_defaults(func=_cmd_centralizer)

    p = sub.add_parser("bds", help="maximal-rank subsystems by node deletion")
    common(p)
    p.add_argument("--all", action="store_true",
                   help="collect every reachable subsystem, not just maximal ones")
    p.set_defaults(func=_cmd_bds)

    p = sub.add_parser("types", help="finite list of single-element centralizer types")
    common(p)
    p.set_defaults(func=_cmd_types)

    p = sub.add_parser("chains", help="maximal irredundant chain length with witness")
    common(p)
    p.add_argument("--component-steps", action="store_true",
                   help="allow terminal steps through diagonal component groups")
    p.add_argument("--faces", choices=["all", "lemma"], default="all",
                   help="face candidates: all proper faces, or vertices and central edges only")
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("moduli", help="orbit count on pairs of torsion points")
    common(p)
    p.add_argument("--level", type=int, required=True, help="torsion level m")
    p.add_argument("--direct", action="store_true",
                   help="also run the direct enumeration and compare")
    p.add_argument("--budget", type=int, default=moduli.DEFAULT_PAIR_BUDGET,
                   help="pair budget for the direct count")
    p.set_defaults(func=_cmd_moduli)

    p = sub.add_parser("cpair", help="fixed-space data of a center element's alcove action")
    common(p)
    p.add_argument("--center", type=int, required=True,
                   help="special node id of the center element (0 = identity)")
    p.set_defaults(func=_cmd_cpair)

    p = sub.add_parser("fold", help="cyclic folding of the type-A extended cycle")
    common(p)
    p.add_argument("--k", type=int, required=True, help="rotation order; must divide n+1")
    p.set_defaults(func=_cmd_fold)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ResourceCapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

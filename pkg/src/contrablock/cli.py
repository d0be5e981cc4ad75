"""Command-line front end.

First output line is machine-readable (YES / NO / an integer), edge
witnesses print as ``u-v`` lists, reports as key=value lines.  Exit codes:
0 computed, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import bipartite_contraction, contraction_vc, reductions, transversal, vertex_cover
from .graphs import Graph, GraphFormatError, connected_components, parse_graph, serialize_graph

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3


class BudgetExceeded(Exception):
    pass


class InputError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _edge_list(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(edges))


def _parse_family(name: str, relation: str) -> transversal.HitFamily:
    if name == "vc":
        return transversal.HitFamily.vertex_cover()
    if name == "fvs":
        return transversal.HitFamily.feedback_vertex_set()
    if name == "oct":
        return transversal.HitFamily.odd_cycle_transversal()
    if name.startswith("pattern:"):
        pattern = _load_graph(name.split(":", 1)[1])
        return transversal.HitFamily.explicit([pattern], relation)
    raise InputError(f"unknown family {name!r}")


_RELATIONS = {
    "subgraph": "subgraph",
    "induced": "induced-subgraph",
    "minor": "minor",
    "topo": "topological-minor",
}


def _cmd_vc(args) -> int:
    g = _load_graph(args.graph)
    if args.modulator is not None:
        mod = [int(t) for t in args.modulator.split(",") if t]
        res = vertex_cover.vc_with_modulator(g, mod)
    elif args.bipartite:
        res = vertex_cover.vc_bipartite(g)
    else:
        res = vertex_cover.vc_branching(g)
    print(res.size)
    if res.cover:
        print(" ".join(str(v) for v in sorted(res.cover)))
    return EXIT_OK


def _cmd_tau(args) -> int:
    g = _load_graph(args.graph)
    fam = _parse_family(args.family, _RELATIONS[args.relation])
    res = transversal.min_transversal(g, fam, budget=args.budget)
    if res is None:
        raise BudgetExceeded(f"hitting number exceeds budget {args.budget}")
    size, picks = res
    print(size)
    if picks:
        print(" ".join(str(v) for v in sorted(picks)))
    return EXIT_OK


def _cmd_bc(args) -> int:
    g = _load_graph(args.graph)
    witness = bipartite_contraction.bc_decide(g, args.max)
    if witness is None:
        print("NO")
    else:
        print("YES")
        if witness:
            print(_edge_list(witness))
    return EXIT_OK


def _cmd_contract_vc(args) -> int:
    g = _load_graph(args.graph)
    decision = contraction_vc.algorithm1(g, args.k, args.d)
    print("YES" if decision.answer else "NO")
    if decision.answer and args.witness and decision.witness:
        print(_edge_list(decision.witness))
    return EXIT_OK


def _cmd_min_contract_vc(args) -> int:
    g = _load_graph(args.graph)
    if args.brute:
        cap = args.cap if args.cap is not None else g.m
        res = contraction_vc.brute_min_contract(g, args.d, cap, args.paper_convention)
        if res is None:
            raise BudgetExceeded(f"no set of at most {cap} edges achieves the drop")
        print(res)
        return EXIT_OK
    if args.approx:
        res = contraction_vc.min_contract_2approx(g, args.d, args.paper_convention)
        print("INFEASIBLE" if res is None else res)
        return EXIT_OK
    # exact: feasibility first, then grow k until the decision flips
    if vertex_cover.vc_branching(g).size < args.d:
        print("INFEASIBLE")
        return EXIT_OK
    if args.paper_convention:
        # the convention only changes the small-component optimum
        from .graphs import induced_subgraph

        small = all(
            vertex_cover.vc_branching(induced_subgraph(g, c)[0], budget=args.d) is not None
            for c in connected_components(g)
        )
        if small:
            value = contraction_vc.dp_min_contract(g, args.d, paper_convention=True)
            print("INFEASIBLE" if value == float("inf") else int(value))
            return EXIT_OK
    forest_bound = sum(len(c) - 1 for c in connected_components(g))
    for k in range(args.d, max(forest_bound, args.d) + 1):
        if contraction_vc.algorithm1(g, k, args.d).answer:
            print(k)
            return EXIT_OK
    raise AssertionError("a feasible drop is reachable within the spanning forest bound")


def _cmd_reduce(args) -> int:
    phi = _load_cnf(args.cnf)
    inst = _build_instance(phi, args)
    graph_path = f"{args.output}.gr"
    roles_path = f"{args.output}.roles"
    with open(graph_path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(inst.graph))
    with open(roles_path, "w", encoding="utf-8") as fh:
        fh.write(reductions.serialize_roles(inst))
    print(f"vertices={inst.graph.n}")
    print(f"edges={inst.graph.m}")
    print(f"threshold={inst.threshold}")
    print(f"graph={graph_path}")
    print(f"roles={roles_path}")
    return EXIT_OK


def _cmd_verify_claims(args) -> int:
    phi = _load_cnf(args.cnf)
    inst = _build_instance(phi, args)
    report = reductions.verify_claims(
        inst, sample_edges=args.sample_edges, full_scan=args.full_scan
    )
    for line in report.as_lines():
        print(line)
    return EXIT_OK


def _cmd_blocker_edge(args) -> int:
    g = _load_graph(args.graph)
    try:
        u, v = (int(t) for t in args.edge.split(","))
    except ValueError:
        raise InputError(f"bad edge {args.edge!r}, expected U,V") from None
    fam = _parse_family(args.family, _RELATIONS[args.relation])
    try:
        drops = transversal.drop_given_edge(g, (u, v), fam)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print("YES" if drops else "NO")
    return EXIT_OK


def _load_cnf(path: str) -> reductions.CleanFormula:
    try:
        with open(path, encoding="utf-8") as fh:
            return reductions.parse_cnf(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except reductions.CleanFormulaError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _build_instance(phi, args) -> reductions.GadgetInstance:
    if args.theorem == 1:
        if args.gadget == "c4":
            from .graphs import cycle_graph

            return reductions.build_double_copy_instance(phi, cycle_graph(4), 0, 2)
        pattern = _load_graph(args.gadget)
        try:
            return reductions.build_double_copy_instance(phi, pattern)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if args.theorem == 2:
        if args.clique is None:
            raise InputError("--clique is required with --theorem 2")
        try:
            return reductions.build_subdivided_clique_instance(phi, args.clique)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if args.path is None:
        raise InputError("--path is required with --theorem 3")
    try:
        return reductions.build_path_instance(phi, args.path)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _add_instance_flags(sub) -> None:
    sub.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    sub.add_argument("--gadget", default="c4", help="c4 or a pattern graph file (theorem 1)")
    sub.add_argument("--clique", type=int, help="clique size (theorem 2)")
    sub.add_argument("--path", type=int, help="path length in vertices (theorem 3)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="contrablock")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("vc", help="minimum vertex cover")
    p.add_argument("graph")
    p.add_argument("--bipartite", action="store_true", help="use the matching-based solver")
    p.add_argument("--modulator", help="comma-separated vertex list")
    p.set_defaults(func=_cmd_vc)

    p = subs.add_parser("tau", help="minimum hitting set")
    p.add_argument("graph")
    p.add_argument("--family", required=True, help="fvs | oct | vc | pattern:<file>")
    p.add_argument("--relation", choices=sorted(_RELATIONS), default="subgraph")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_tau)

    p = subs.add_parser("bc", help="contract at most K edges to reach a bipartite graph")
    p.add_argument("graph")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_bc)

    p = subs.add_parser("contract-vc", help="can k contractions drop the cover number by d?")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=_cmd_contract_vc)

    p = subs.add_parser("min-contract-vc", help="minimum contractions for a cover drop of d")
    p.add_argument("graph")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--approx", action="store_true", help="factor-2 estimate")
    p.add_argument("--brute", action="store_true", help="exhaustive oracle")
    p.add_argument("--cap", type=int, help="edge budget for --brute")
    p.add_argument("--paper-convention", action="store_true",
                   help="treat a full component collapse as unattainable")
    p.set_defaults(func=_cmd_min_contract_vc)

    p = subs.add_parser("reduce", help="build a hardness instance from a clean CNF")
    p.add_argument("cnf")
    _add_instance_flags(p)
    p.add_argument("-o", "--output", required=True, help="output prefix")
    p.set_defaults(func=_cmd_reduce)

    p = subs.add_parser("verify-claims", help="check the instance claims for a clean CNF")
    p.add_argument("cnf")
    _add_instance_flags(p)
    p.add_argument("--sample-edges", type=int)
    p.add_argument("--full-scan", action="store_true")
    p.set_defaults(func=_cmd_verify_claims)

    p = subs.add_parser("blocker-edge", help="does contracting one edge drop the hitting number?")
    p.add_argument("graph")
    p.add_argument("-e", "--edge", required=True, help="U,V")
    p.add_argument("--family", required=True)
    p.add_argument("--relation", choices=sorted(_RELATIONS), default="subgraph")
    p.set_defaults(func=_cmd_blocker_edge)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

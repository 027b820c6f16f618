"""Command-line surface: analyze, construct, psl2, catalog, reproduce, audit.

Exit codes: 0 all checks pass, 1 a check fails, 2 usage error, 3 budget
exceeded (with the offending budget named on stderr).
"""

import argparse
import json
import sys

from .config import DEFAULT, BudgetError


def _json_default(obj):
    import numpy as np

    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return str(obj)


def _emit(payload, path=None):
    text = json.dumps(payload, indent=2, sort_keys=True, default=_json_default)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_analyze(args):
    from . import analysis, graphs, perm

    degree, gens = perm.load_group_file(args.group)
    group = perm.bsgs(gens, degree=degree)
    with open(args.coset, "r", encoding="utf-8") as fh:
        sub_spec = json.load(fh)
    sub_gens = [perm.parse_cycles(s, degree) for s in sub_spec["generators"]]
    sub = perm.subgroup(group, sub_gens)
    swap = perm.parse_cycles(args.swap, degree)
    spec = graphs.CosetGraphSpec(group, sub, swap)
    result = graphs.coset_graph(spec)
    e_rep = analysis.classify_edge_action(result.graph, result.action,
                                          instance_id="analyze")
    v_rep = analysis.classify_vertex_action(result.graph, result.action,
                                            instance_id="analyze")
    s = graphs.s_arc_level(result.graph, result.action)
    payload = {
        "schema": 1,
        "vertices": result.graph.n,
        "edges": result.graph.m,
        "valency": result.valency,
        "connected": result.connected,
        "edge_kind": e_rep.edge_kind,
        "vertex_kind": v_rep.vertex_kind,
        "s_level": s,
        "onan_scott": {**e_rep.onan_scott, **v_rep.onan_scott},
    }
    _emit(payload, args.report)
    return 0


def cmd_construct(args):
    from . import structured

    params = {}
    for item in args.param or []:
        key, value = item.split("=", 1)
        params[key] = value
    if args.T is not None:
        params["t_name"] = args.T
    result = structured.build_construction(args.name, **params)
    if isinstance(result, dict):
        payload = {"schema": 1, "name": args.name, "symbolic": True,
                   "report": result}
        _emit(payload, args.report)
        return 0 if result.get("ok", True) else 1
    findings, v_rep, e_rep, graph, action = structured.analyze_construction(
        result
    )
    payload = {
        "schema": 1,
        "name": args.name,
        "symbolic": False,
        "vertices": findings["vertices"],
        "edges": findings["edges"],
        "vertex_kind": findings["vertex_kind"],
        "vertex_type": findings["vertex_type"],
        "edge_kind": findings["edge_kind"],
        "edge_type": findings["edge_type"],
        "half_kinds": findings["half_kinds"],
    }
    _emit(payload, args.report)
    return 0


def cmd_psl2(args):
    from . import psl2

    if args.psl2_cmd == "census":
        G = psl2.psl2_family(args.q, args.group)
        entries = psl2.enumerate_edge_primitive(G, args.q)
        payload = {
            "schema": 1,
            "q": args.q,
            "group": args.group,
            "entries": [
                {"signature": list(e.signature()), "labels": e.labels}
                for e in entries
            ],
        }
        if args.graph6:
            from . import graphs as graphs_mod

            payload["graph6"] = [
                graphs_mod.graph6_encode(e.graph)
                for e in entries
                if e.graph is not None and e.graph.n <= 1000
            ]
        _emit(payload, args.report)
        return 0
    if args.psl2_cmd == "reproduce":
        qs = [q for q in psl2.CENSUS_RANGE if q <= args.qmax]
        report = psl2.reproduce_table2(qs)
        ok = all(row["match"] for row in report)
        payload = {
            "schema": 1,
            "rows": [
                {k: row[k] for k in ("q", "group", "order", "match",
                                      "found", "expected")}
                for row in report
            ],
            "all_match": ok,
        }
        _emit(payload, args.report)
        return 0 if ok else 1
    raise SystemExit(2)


def cmd_catalog(args):
    from . import catalog, graphs

    named = catalog.named_graph(args.name, **_catalog_params(args))
    if args.format == "graph6":
        print(graphs.graph6_encode(named.graph))
    else:
        sys.stdout.write(graphs.adjacency_text(named.graph))
    return 0


def _catalog_params(args):
    out = {}
    if args.n is not None:
        out["n"] = args.n
    if args.m is not None:
        out["m"] = args.m
    return out


def cmd_reproduce(args):
    from . import psl2

    if args.table == "table2":
        qs = [q for q in psl2.CENSUS_RANGE if q <= args.qmax]
        report = psl2.reproduce_table2(qs)
        ok = all(row["match"] for row in report)
        payload = {
            "schema": 1,
            "table": "table2",
            "rows": [
                {k: row[k] for k in ("q", "group", "match")} for row in report
            ],
            "all_match": ok,
        }
        _emit(payload, args.report)
        return 0 if ok else 1
    if args.table == "table1":
        from .tables import reproduce_table1

        report = reproduce_table1(nmax=args.nmax, extended=args.extended)
        ok = all(row["match"] for row in report)
        payload = {"schema": 1, "table": "table1", "rows": report,
                   "all_match": ok}
        _emit(payload, args.report)
        return 0 if ok else 1
    raise SystemExit(2)


def cmd_audit(args):
    from . import analysis, catalog

    results = []
    for record in catalog.weiss_cubic_check():
        results.append(record)
    ok = all(r["ok"] for r in results)
    _emit({"schema": 1, "audit": "weiss", "rows": results, "all_match": ok},
          args.report)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="edgeprim",
        description="edge-primitive and edge-quasiprimitive graph analysis",
    )
    parser.add_argument("--seed", type=int, default=20240817,
                        help="seed for randomized property scans")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", help="classify a coset graph")
    p.add_argument("--group", required=True, help="generator file for G")
    p.add_argument("--coset", required=True,
                   help="JSON file with subgroup generators (cycle strings)")
    p.add_argument("--swap", required=True, help="swap element as cycles")
    p.add_argument("--report", help="output JSON path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="run a catalog construction")
    p.add_argument("name")
    p.add_argument("--T", help="simple group parameter, e.g. A5")
    p.add_argument("--param", action="append", help="k=v extra parameters")
    p.add_argument("--report", help="output JSON path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("psl2", help="linear-family census")
    psub = p.add_subparsers(dest="psl2_cmd", required=True)
    pc = psub.add_parser("census")
    pc.add_argument("--q", type=int, required=True)
    pc.add_argument("--group", default="psl")
    pc.add_argument("--graph6", action="store_true")
    pc.add_argument("--report")
    pr = psub.add_parser("reproduce")
    pr.add_argument("--qmax", type=int, default=41)
    pr.add_argument("--report")
    p.set_defaults(func=cmd_psl2)

    p = sub.add_parser("catalog", help="emit a named graph")
    p.add_argument("emit", choices=["emit"])
    p.add_argument("name")
    p.add_argument("--format", choices=["graph6", "adj"], default="graph6")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("reproduce", help="reproduce the reference tables")
    p.add_argument("table", choices=["table1", "table2"])
    p.add_argument("--qmax", type=int, default=41)
    p.add_argument("--nmax", type=int, default=65)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--report")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("audit", help="run the built-in instance audits")
    p.add_argument("--report")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc.budget_name} "
              f"(needed {exc.needed}, allowed {exc.allowed})", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

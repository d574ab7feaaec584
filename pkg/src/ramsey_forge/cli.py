"""Command-line front end. Every result is JSON on stdout.

Exit codes: 0 success or claim holds, 1 claim fails / pattern found / no
witness / timeout, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import datetime
import json
import sys

from . import __version__
from .colored import BIPARTITE, COMPLETE, find_mono_copy, find_rainbow_path, host_from_json
from .constructions import (Claim, ConstructionError, construct, result_from_json,
                            verify_claims, verify_construction)
from .graphs import (Graph6Error, GraphLimitError, SimpleGraph, bipartition, class_size_profiles,
                     chromatic_number, decomposition_family, invariants, parse_graph6,
                     partite_profile, to_graph6, FAMILY_LIMIT)
from .oracle import applicability_report, formula_bounds, homological_certificate
from .search import (EXHAUSTED, TIMEOUT, WITNESS, SearchLimitError, SearchProblem,
                     bipartite_constrained, bipartite_ramsey_k, constrained_ramsey,
                     exists_good_coloring, is_good, labeled_ramsey, ramsey_k)
from .structure import (P5Partition, StructureError, check_extended_sizes,
                        classify_bipartite_structure, recover_p5_partition, verify_p5_partition)
from .table import KnownValuesTable, MissingValue


class UsageError(ValueError):
    pass


# -- input helpers -------------------------------------------------------------------

def _graph(args, required=True) -> SimpleGraph | None:
    text = getattr(args, "graph", None)
    if getattr(args, "graph_file", None):
        with open(args.graph_file) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith(">>")]
        if len(lines) != 1:
            raise UsageError(f"{args.graph_file}: expected exactly one graph6 line")
        text = lines[0]
    if text is None:
        if required:
            raise UsageError("a graph is required (--graph or --graph-file)")
        return None
    return parse_graph6(text)


def _components(args) -> list[SimpleGraph]:
    if not args.components:
        return []
    return [parse_graph6(s.strip()) for s in args.components.split(",") if s.strip()]


def _host(args):
    if args.host_file:
        with open(args.host_file) as fh:
            data = json.load(fh)
    elif args.host:
        data = json.loads(args.host)
    else:
        raise UsageError("a host is required (--host or --host-file)")
    if "host" in data and isinstance(data["host"], dict):
        data = data["host"]
    return host_from_json(data)


def _budget(text):
    if text is None or str(text).lower() == "unbounded":
        return None
    k = int(text)
    if k < 1:
        raise UsageError("--budget must be a positive integer or 'unbounded'")
    return k


def _budget_arg(args):
    """--budget, or --colors as its alias; the two must agree when both are given."""
    if args.colors is not None and args.budget is not None and _budget(args.budget) != args.colors:
        raise UsageError("--colors and --budget disagree")
    if args.budget is not None:
        return args.budget
    return str(args.colors) if args.colors is not None else "unbounded"


def _table(args) -> KnownValuesTable:
    return KnownValuesTable.load(args.table) if args.table else KnownValuesTable()


def _search_kw(args) -> dict:
    kw = {"jobs": args.jobs, "time_limit": args.time_limit}
    if getattr(args, "edge_limit", None):
        kw["edge_limit"] = args.edge_limit
    return kw


def _meta(args) -> dict:
    return {"tool": "ramsey-forge", "version": __version__,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat()}


def _emit(args, obj: dict) -> None:
    if not args.no_meta:
        obj = dict(obj)
        obj["meta"] = _meta(args)
    if args.compact:
        text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    else:
        text = json.dumps(obj, sort_keys=True, indent=2)
    print(text)


def _write_cert(args, cert: dict) -> None:
    if args.emit_certificate:
        with open(args.emit_certificate, "w") as fh:
            json.dump(cert, fh, sort_keys=True, indent=2)
            fh.write("\n")


# -- subcommands ------------------------------------------------------------------------

def cmd_invariants(args) -> int:
    g = _graph(args)
    out = {"graph": to_graph6(g), "order": g.order, "size": g.size,
           "invariants": invariants(g).to_dict()}
    if bipartition(g) is not None and g.edges:
        out["partite_profile"] = partite_profile(g).to_dict()
    chi = chromatic_number(g)
    if chi >= 2:
        out["class_size_profiles"] = [list(k) for k in sorted(class_size_profiles(g, chi))]
    if chi >= 3 and g.order <= FAMILY_LIMIT:
        out["decomposition_family"] = decomposition_family(g, 2).to_dict()
    _emit(args, out)
    return 0


def cmd_construct(args) -> int:
    from .sampling import random_construction
    if not args.kind:
        raise UsageError("--kind is required")
    if args.random:
        res = random_construction(args.kind, args.seed)
    else:
        params = json.loads(args.params) if args.params else {}
        res = construct(args.kind, _components(args), params, _table(args))
    report = verify_construction(res) if args.verify else None
    cert = {"certificate": "construction", **res.to_json(report)}
    _write_cert(args, cert)
    _emit(args, cert)
    return 1 if report is not None and report["verdict"] != "PASS" else 0


def _verify_search_cert(cert, args) -> dict:
    prob = cert["problem"]
    mono = parse_graph6(prob["forbid_mono"]) if prob.get("forbid_mono") else None
    labeled = None
    if prob.get("forbid_mono_by_color"):
        labeled = [[parse_graph6(s) for s in ps] for ps in prob["forbid_mono_by_color"]]
    problem = SearchProblem(prob["shape"], int(prob["n"]), _budget(prob.get("budget")), mono,
                            prob.get("forbid_rainbow"), labeled)
    claimed = cert["status"]
    if claimed == WITNESS:
        host = host_from_json(cert["witness"])
        ok = is_good(host, problem)
        return {"verdict": "PASS" if ok else "FAIL", "claimed_status": claimed,
                "check": "witness re-verified by both detectors"}
    if claimed == EXHAUSTED:
        out = exists_good_coloring(problem, **_search_kw(args))
        if out.status == TIMEOUT:
            return {"verdict": "INCONCLUSIVE", "claimed_status": claimed,
                    "check": "re-search timed out"}
        return {"verdict": "PASS" if out.status == EXHAUSTED else "FAIL",
                "claimed_status": claimed, "recomputed_status": out.status,
                "check": "exhaustive re-search"}
    return {"verdict": "INCONCLUSIVE", "claimed_status": claimed,
            "check": "a timeout certifies nothing"}


def _verify_number_cert(cert, args) -> dict:
    res = _number(cert["command"], cert["inputs"], args)
    got = res.to_json(meta=False)
    want = cert["result"]
    same = got["value"] == want["value"] and got["status"] == want["status"]
    return {"verdict": "PASS" if same else "FAIL", "claimed_value": want["value"],
            "recomputed_value": got["value"], "check": "sweep recomputed"}


def cmd_verify(args) -> int:
    if args.cert:
        with open(args.cert) as fh:
            cert = json.load(fh)
        kind = cert.get("certificate", "construction")
        if kind == "construction":
            report = verify_construction(result_from_json(cert))
            old = cert.get("report")
            if old is not None:
                report["matches_embedded_report"] = old.get("verdict") == report["verdict"]
        elif kind == "search":
            report = _verify_search_cert(cert, args)
        elif kind == "number":
            report = _verify_number_cert(cert, args)
        elif kind == "structure":
            host = host_from_json(cert["host"])
            report = verify_p5_partition(host, P5Partition.from_json(cert["partition"]))
        else:
            raise UsageError(f"unknown certificate type {kind!r}")
        report["certificate"] = kind
    else:
        host = _host(args)
        claims = [Claim("no_mono", g) for g in _components(args)]
        g = _graph(args, required=False)
        if g is not None:
            claims.append(Claim("no_mono", g))
        if args.forbid_rainbow:
            claims.append(Claim("no_rainbow_path", t=args.forbid_rainbow))
        if not claims:
            raise UsageError("nothing to verify: give --graph, --components or --forbid-rainbow")
        report = verify_claims(host, claims)
    _emit(args, report)
    return 0 if report["verdict"] == "PASS" else 1


def cmd_structure(args) -> int:
    host = _host(args)
    if host.shape == COMPLETE:
        if args.partition:
            cert = P5Partition.from_json(json.loads(args.partition))
            report = verify_p5_partition(host, cert)
            report["partition"] = cert.to_json()
            _emit(args, report)
            return 0 if report["verdict"] == "PASS" else 1
        found = recover_p5_partition(host)
        rainbow = find_rainbow_path(host, 5)
        out = {"shape": COMPLETE, "has_rainbow_p5": rainbow is not None,
               "rainbow_p5": rainbow.to_json() if rainbow else None,
               "partition": None}
        if found is not None:
            cert, relabel = found
            out["partition"] = cert.to_json()
            out["relabel"] = {str(k): v for k, v in relabel.items()}
            g = _graph(args, required=False)
            if g is not None:
                out["extended_sizes"] = check_extended_sizes(cert, g)
            _write_cert(args, {"certificate": "structure", "host": host.to_json(),
                               "partition": cert.to_json()})
        _emit(args, out)
        return 0 if found is not None else 1
    t = args.forbid_rainbow or 5
    out = classify_bipartite_structure(host, t)
    _emit(args, out)
    return 0 if out["structure"] is not None else 1


def cmd_search(args) -> int:
    mono_text = args.forbid_mono_g6 or args.graph
    mono = parse_graph6(mono_text) if mono_text else None
    if args.n is None:
        raise UsageError("--n is required")
    if mono is None and not args.forbid_rainbow:
        raise UsageError("give a forbidden pattern (--graph / --forbid-mono-g6) or --forbid-rainbow")
    problem = SearchProblem(args.shape, args.n, _budget(_budget_arg(args)), mono,
                            args.forbid_rainbow)
    out = exists_good_coloring(problem, **_search_kw(args))
    cert = {"certificate": "search", **out.to_json(meta=not args.no_meta)}
    _write_cert(args, cert)
    _emit(args, cert)
    return 0 if out.status == WITNESS else 1


def _number(command: str, inputs: dict, args):
    kw = _search_kw(args)
    nmax = int(inputs["nmax"])
    if command == "ramsey":
        comps = [parse_graph6(s) for s in inputs.get("components", [])]
        if comps:
            return labeled_ramsey([(g,) for g in comps], nmax, quantity="R(G1,...,Gk)", **kw)
        return ramsey_k(parse_graph6(inputs["graph"]), int(inputs["colors"]), nmax, **kw)
    if command == "constrained":
        return constrained_ramsey(parse_graph6(inputs["graph"]), int(inputs["t"]), nmax,
                                  _budget(inputs.get("budget")), **kw)
    if command == "bipartite":
        h = parse_graph6(inputs["graph"])
        if inputs.get("t"):
            return bipartite_constrained(h, int(inputs["t"]), _budget(inputs.get("budget")),
                                         nmax, **kw)
        return bipartite_ramsey_k(h, int(inputs["colors"]), nmax, **kw)
    raise UsageError(f"unknown number command {command!r}")


def _number_cmd(args, command: str, inputs: dict) -> int:
    if args.nmax is None:
        raise UsageError("--nmax is required")
    inputs["nmax"] = args.nmax
    res = _number(command, inputs, args)
    body = res.to_json(meta=not args.no_meta)
    cert = {"certificate": "number", "command": command, "inputs": inputs, "result": body}
    _write_cert(args, cert)
    _emit(args, {**body, "inputs": inputs})
    return 0 if res.value is not None else 1


def cmd_ramsey(args) -> int:
    comps = _components(args)
    if comps:
        if len(comps) < 2:
            raise UsageError("--components needs at least two graphs for R(G1,...,Gk)")
        return _number_cmd(args, "ramsey", {"components": [to_graph6(g) for g in comps]})
    g = _graph(args)
    if args.colors is None:
        raise UsageError("--colors is required")
    return _number_cmd(args, "ramsey", {"graph": to_graph6(g), "colors": args.colors})


def cmd_constrained(args) -> int:
    g = _graph(args)
    return _number_cmd(args, "constrained", {"graph": to_graph6(g), "t": args.forbid_rainbow or 5,
                                             "budget": _budget_arg(args)})


def cmd_bipartite(args) -> int:
    g = _graph(args)
    if args.forbid_rainbow:
        return _number_cmd(args, "bipartite", {"graph": to_graph6(g), "t": args.forbid_rainbow,
                                               "budget": _budget_arg(args)})
    if args.colors is None:
        raise UsageError("give --colors for BR_k or --forbid-rainbow for h_k")
    return _number_cmd(args, "bipartite", {"graph": to_graph6(g), "colors": args.colors})


def _render(report: dict, bounds: dict) -> str:
    lines = [f"graph {report['graph']}", "", "theorem                        verdict   conclusion"]
    for v in report["verdicts"]:
        lines.append(f"{v['theorem']:<30} {v['verdict']:<9} {v['conclusion']}")
        for row in v["trace"]:
            mark = {True: "ok", False: "FAILS", None: "?"}[row["ok"]]
            lines.append(f"    [{mark}] {row['check']}: {json.dumps(row['value'])}")
    lines += ["", "rule              target               dir    value  status"]
    for e in bounds["entries"]:
        val = "-" if e["value"] is None else str(e["value"])
        lines.append(f"{e['rule']:<17} {e['target']:<20} {e['direction']:<6} {val:<6} "
                     f"{e['status']}")
    return "\n".join(lines)


def cmd_oracle(args) -> int:
    comps = _components(args)
    if comps and args.graph is None and args.graph_file is None:
        out = homological_certificate(comps)
        _emit(args, out)
        return 0 if out["verdict"] == "APPLIES" else 1
    g = _graph(args)
    table = _table(args)
    report = applicability_report(g, table)
    bounds = formula_bounds(g, table).to_json()
    if args.text:
        print(_render(report, bounds))
        return 0
    _emit(args, {"applicability": report, "bounds": bounds})
    return 0


COMMANDS = {
    "invariants": cmd_invariants, "construct": cmd_construct, "verify": cmd_verify,
    "structure": cmd_structure, "search": cmd_search, "ramsey": cmd_ramsey,
    "constrained": cmd_constrained, "bipartite": cmd_bipartite, "oracle": cmd_oracle,
}


def _jobs_default():
    from .search import default_jobs
    return default_jobs()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph6 string")
    common.add_argument("--graph-file", help="file holding one graph6 line")
    common.add_argument("--host", help="host colouring as inline JSON")
    common.add_argument("--host-file", help="host colouring JSON file")
    common.add_argument("--components", help="comma-separated graph6 strings")
    common.add_argument("--kind", help="construction kind")
    common.add_argument("--params", help="construction parameters as JSON")
    common.add_argument("--colors", type=int, help="number of colours k")
    common.add_argument("--budget", help="colour budget: an integer or 'unbounded'")
    common.add_argument("--nmax", type=int, help="largest n to try")
    common.add_argument("--n", type=int, help="host size (side size for bipartite)")
    common.add_argument("--shape", choices=(COMPLETE, BIPARTITE), default=COMPLETE)
    common.add_argument("--forbid-rainbow", type=int, choices=(4, 5))
    common.add_argument("--forbid-mono-g6", help="forbidden monochromatic pattern (graph6)")
    common.add_argument("--table", help="known-values table JSON")
    common.add_argument("--cert", help="certificate file to verify")
    common.add_argument("--partition", help="partition certificate JSON to check")
    common.add_argument("--emit-certificate", metavar="FILE")
    common.add_argument("--verify", action="store_true", help="verify the construction")
    common.add_argument("--random", action="store_true",
                        help="draw random valid construction parameters from --seed")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: RAMSEY_FORGE_JOBS or 1)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    common.add_argument("--edge-limit", type=int, default=None, help=argparse.SUPPRESS)
    common.add_argument("--compact", action="store_true")
    common.add_argument("--no-meta", action="store_true")
    common.add_argument("--text", action="store_true", help="oracle: human-readable table")
    parser = argparse.ArgumentParser(prog="ramsey-forge",
                                     description="Edge-colouring constructions, verifiers "
                                                 "and exhaustive Ramsey searches.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs is None:
        args.jobs = _jobs_default()
    try:
        return COMMANDS[args.command](args)
    except (UsageError, Graph6Error, GraphLimitError, ConstructionError, StructureError,
            SearchLimitError, MissingValue, OSError, KeyError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"ramsey-forge {args.command}: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

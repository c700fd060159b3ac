"""Command-line front end.

Exit codes: 0 every verdict true, 1 a verdict false, 2 usage or spec
error, 3 theorem not applicable (purely non-abelian group).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .catalogue import CATALOGUE
from .construct import AlphaSpecError, build_alpha, choose_alpha_data, subgroup_from_labels
from .decompose import find_abelian_direct_factor
from .groups import (
    DEFAULT_ORDER_CAP,
    Builtin,
    Cyclic,
    DirectProduct,
    GroupError,
    Permutation,
    Semidirect,
    build_group,
)
from .oracle import ORACLE_CAP, central_automorphisms, enumerate_homs_to_center, inner_automorphisms, oracle_cross_check
from .verify import alpha_summary, run_theorem_pipeline

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NA = 0, 1, 2, 3


class SpecError(GroupError):
    pass


def spec_from_json(node):
    """Turn a tagged JSON node into a group spec."""
    if not isinstance(node, dict) or "kind" not in node:
        raise SpecError(f"group spec node must be an object with a 'kind': {node!r}")
    kind = node["kind"]
    try:
        if kind == "cyclic":
            return Cyclic(int(node["order"]), node.get("name"))
        if kind == "direct_product":
            factors = node["factors"]
            if not isinstance(factors, list) or not factors:
                raise SpecError("direct_product needs a non-empty 'factors' list")
            return DirectProduct(tuple(spec_from_json(f) for f in factors))
        if kind == "semidirect":
            action = tuple(tuple(w if isinstance(w, str) else tuple(w) for w in imgs)
                           for imgs in node["action"])
            return Semidirect(spec_from_json(node["base"]), spec_from_json(node["actor"]), action)
        if kind == "permutation":
            names = node.get("names")
            return Permutation(int(node["degree"]), tuple(node["generators"]),
                               tuple(names) if names is not None else None)
        if kind == "builtin":
            return Builtin(str(node["name"]))
    except KeyError as e:
        raise SpecError(f"{kind} node is missing field {e}") from None
    except (TypeError, ValueError) as e:
        raise SpecError(f"bad {kind} node: {e}") from None
    raise SpecError(f"unknown group spec kind {kind!r}")


def load_group(ref: str, order_cap: int = DEFAULT_ORDER_CAP):
    """``builtin:NAME`` or a path to a ``{"construct": ...}`` JSON file."""
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        return build_group(Builtin(name), order_cap=order_cap)
    try:
        doc = json.loads(Path(ref).read_text())
    except OSError as e:
        raise SpecError(f"cannot read spec file {ref}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise SpecError(f"spec file {ref} is not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "construct" not in doc:
        raise SpecError('spec file must be a JSON object {"construct": <group spec>}')
    name = doc.get("name") or Path(ref).stem
    return build_group(spec_from_json(doc["construct"]), order_cap=order_cap, name=name)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _verdict_code(report) -> int:
    if not report.applicable:
        return EXIT_NA
    return EXIT_OK if report.passed else EXIT_FAIL


def _human_report(d: dict) -> str:
    lines = [f"{d['group']}: order {d['order']}, p = {d['prime']}"]
    if not d["applicable"]:
        lines.append("  purely non-abelian: theorem not applicable")
        return "\n".join(lines) + "\n"
    dec = d["decomposition"]
    lines.append(f"  G = H x K with |H| = {dec['H_order']} <{', '.join(dec['H_generators'])}>, "
                 f"|K| = {dec['K_order']} <{', '.join(dec['K_generators'])}>")
    a = d["alpha"]
    lines.append(f"  M = <{', '.join(a['M_generators'])}> (order {a['M_order']}), "
                 f"h = {a['h']}, g = {a['g']}")
    for x, y in a["images"].items():
        if x != y:
            lines.append(f"    alpha({x}) = {y}")
    for name, ok in (d.get("checks") or {}).items():
        lines.append(f"  {'PASS' if ok else 'FAIL'} {name}")
    if d.get("oracle") is not None:
        lines.append(f"  {'PASS' if d['oracle'] else 'FAIL'} oracle_cross_check")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    G = load_group(args.spec, args.order_cap)
    rep = run_theorem_pipeline(G, with_oracle=True)
    d = rep.to_dict(timings=args.timings)
    _emit(args, _human_report(d) if args.human else dumps(d))
    return _verdict_code(rep)


def _overrides(G, args) -> dict:
    out = {}
    if args.M is not None:
        out["M"] = subgroup_from_labels(G, args.M)
    if args.h is not None:
        out["h"] = G.element(args.h)
    if args.g is not None:
        out["g"] = G.element(args.g)
    return out


def cmd_construct(args) -> int:
    G = load_group(args.spec, args.order_cap)
    overrides = _overrides(G, args)
    if args.verify:
        rep = run_theorem_pipeline(G, alpha_overrides=overrides, with_oracle=True)
        d = rep.to_dict(timings=args.timings)
        _emit(args, _human_report(d) if args.human else dumps(d))
        return _verdict_code(rep)
    dec = find_abelian_direct_factor(G)
    d = {"group": G.name, "order": G.order, "prime": G.prime, "applicable": dec is not None,
         "decomposition": None, "alpha": None}
    if dec is not None:
        spec = choose_alpha_data(dec, **overrides)
        d["decomposition"] = dec.summary()
        d["alpha"] = alpha_summary(G, dec, spec, build_alpha(dec, spec))
    _emit(args, _human_report(d) if args.human else dumps(d))
    return EXIT_OK if dec is not None else EXIT_NA


def catalogue_row(entry, order_cap: int = DEFAULT_ORDER_CAP) -> dict:
    G = build_group(Builtin(entry.name), order_cap=order_cap)
    rep = run_theorem_pipeline(G, with_oracle=G.order <= ORACLE_CAP)
    dec = rep.decomposition or {}
    ok = rep.applicable == entry.applicable and (rep.passed or not rep.applicable)
    return {
        "name": entry.name,
        "order": G.order,
        "prime": G.prime,
        "applicable": rep.applicable,
        "expected_applicable": entry.applicable,
        "H_order": dec.get("H_order"),
        "K_order": dec.get("K_order"),
        "checks_pass": None if rep.checks is None else all(rep.checks.values()),
        "oracle": rep.oracle,
        "pass": ok,
    }


def run_catalogue(max_order: int, jobs: int = 1) -> dict:
    entries = [e for e in CATALOGUE if e.order <= max_order]
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        rows = list(pool.map(catalogue_row, entries))
    return {"max_order": max_order, "rows": rows, "all_pass": all(r["pass"] for r in rows)}


def cmd_catalogue(args) -> int:
    result = run_catalogue(args.max_order, args.jobs)
    if args.human:
        lines = [f"{'name':<18}{'order':>6}{'p':>3}  {'applicable':<11}{'|H|':>4}{'|K|':>5}  "
                 f"{'checks':<7}{'oracle':<7}result"]
        for r in result["rows"]:
            lines.append(f"{r['name']:<18}{r['order']:>6}{r['prime']:>3}  {str(r['applicable']):<11}"
                         f"{r['H_order'] or '-':>4}{r['K_order'] or '-':>5}  "
                         f"{_tri(r['checks_pass']):<7}{_tri(r['oracle']):<7}"
                         f"{'pass' if r['pass'] else 'FAIL'}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps(result))
    return EXIT_OK if result["all_pass"] else EXIT_FAIL


def _tri(v) -> str:
    return "-" if v is None else ("pass" if v else "FAIL")


def cmd_paper_example(args) -> int:
    from .paper_example import paper_example

    result = paper_example()
    if args.human:
        lines = [f"{result['shape']}: {result['candidate_count']} candidate actions, order {result['order']}"]
        for c in result["candidates"]:
            e = c["explicit_alpha"]
            lines.append(
                f"  y->{c['action']['y']:<8} b->{c['action']['b']:<8} pipeline "
                f"{'pass' if c['pipeline_pass'] else 'FAIL'}  |Z| = {c['center_order']}"
                f"{'' if c['center_matches'] else ' (expected 243)'}  relators "
                f"{'ok' if c['relators_satisfied'] else 'no'}  explicit map "
                f"{('order ' + str(e['order'])) if e['realizable'] else 'unrealizable'}"
                f" {'pass' if c['explicit_alpha_pass'] else 'FAIL'}")
        lines.append(f"  claimed |Aut(G)| = {result['aut_count_claimed']} (not verified)")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps(result))
    return EXIT_OK if result["all_pass"] else EXIT_FAIL


def cmd_oracle(args) -> int:
    G = load_group(args.spec, args.order_cap)
    rep = run_theorem_pipeline(G)
    d = {"group": G.name, "order": G.order, "prime": G.prime, "applicable": rep.applicable,
         "homs_to_center": None, "central_automorphisms": None, "inner_automorphisms": None,
         "oracle": None}
    if rep.applicable:
        dec = find_abelian_direct_factor(G)
        alpha = build_alpha(dec, choose_alpha_data(dec))
        d["homs_to_center"] = len(enumerate_homs_to_center(G))
        d["central_automorphisms"] = len(central_automorphisms(G))
        d["inner_automorphisms"] = len(inner_automorphisms(G))
        d["oracle"] = oracle_cross_check(G, alpha)
    _emit(args, dumps(d))
    if not rep.applicable:
        return EXIT_NA
    return EXIT_OK if d["oracle"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="human", action="store_false", help="machine-readable JSON (default)")
    fmt.add_argument("--human", dest="human", action="store_true", help="human-readable text")
    common.set_defaults(human=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    common.add_argument("--timings", action="store_true", help="include timings_ms in reports")

    parser = argparse.ArgumentParser(
        prog="noninner",
        description="Non-inner central automorphisms of order p for p-groups with an abelian direct factor.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run the full theorem pipeline")
    p.add_argument("spec", help="spec JSON path or builtin:NAME")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common], help="build the automorphism")
    p.add_argument("spec")
    p.add_argument("--M", action="append", metavar="LABEL", help="generator of M (repeatable)")
    p.add_argument("--h", metavar="LABEL")
    p.add_argument("--g", metavar="LABEL")
    p.add_argument("--verify", action="store_true", help="also run every check")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("catalogue", parents=[common], help="run every catalogue group")
    p.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_catalogue)

    p = sub.add_parser("paper-example", parents=[common], help="the order 3^7 example")
    p.set_defaults(func=cmd_paper_example)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-check")
    p.add_argument("spec")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except AlphaSpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

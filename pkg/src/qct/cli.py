"""Command line front end.

Exit codes: 0 when the answer is affirmative (or the check passes), 1 when it
is negative, 2 for usage and input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from qct import admissibility as adm
from qct import modules as mod
from qct.errors import QCTError
from qct.quiver import Quiver, components, is_connected, load_quiver, serialize

OK, NEGATIVE, ERROR = 0, 1, 2


class Outcome:
    """What a subcommand produced: a verdict plus renderings in each format."""

    def __init__(self, ok: bool, data, text: str, dot: str | None = None):
        self.ok = ok
        self.data = data
        self.text = text
        self.dot = dot


def _module_list_text(gens: mod.ModuleList) -> str:
    return "  ".join(gens.labels())


def _need_n(args) -> int:
    if args.n is None:
        raise QCTError(f"{args.command} needs --n")
    return args.n


def cmd_check(q: Quiver, args) -> Outcome:
    n = _need_n(args)
    pre = adm.is_n_pre_admissible(q, n)
    report = adm.is_n_admissible(q, n)
    data = report.to_json()
    data["n"] = n
    data["pre_admissible"] = pre.verdict
    text = report.to_text()
    if pre.verdict and not report.verdict:
        text += f"\n  ({n}-pre-admissible)"
    return Outcome(report.verdict, data, text)


def cmd_flow_paths(q: Quiver, args) -> Outcome:
    rows, lines = [], []
    for fp in adm.enumerate_flow_paths(q):
        qv = adm.q_values(fp, q)
        rows.append({
            "vertices": list(fp.vertices),
            "arrows": list(fp.arrows),
            "k": qv.k,
            "q1": qv.q1,
            "qk": qv.qk,
            "q": qv.q,
            "k_plus_q": qv.total,
            "context": fp.context.to_json(),
        })
        lines.append(f"{fp}  k={qv.k} q1={qv.q1} qk={qv.qk} q={qv.q} k+q={qv.total}")
    return Outcome(True, rows, "\n".join(lines) if lines else "(no flow paths)")


def cmd_degree(q: Quiver, args) -> Outcome:
    N = adm.admissible_degree(q)
    lat = adm.divisor_lattice(N)
    return Outcome(True, lat.to_json(), str(N), lat.to_dot())


def cmd_module(q: Quiver, args) -> Outcome:
    n = _need_n(args)
    if not adm.is_n_admissible(q, n):
        return Outcome(False, [], f"not {n}-admissible: no {n}-cluster tilting subcategory")
    if adm.classify_shape(q).is_cycle:
        family = mod.cycle_family(q, n, args.field)
        text = "\n".join(_module_list_text(g) for g in family)
        return Outcome(True, [g.to_json() for g in family], text)
    gens = mod.build_M(q, n)
    return Outcome(True, gens.to_json(), _module_list_text(gens))


def cmd_subcats(q: Quiver, args) -> Outcome:
    if args.n is not None:
        wanted = [args.n]
    elif adm.classify_shape(q).is_cycle:
        N = adm.admissible_degree(q)
        wanted = [1] + [d for d in range(2, N + 1) if N % d == 0]
    else:
        wanted = list(adm.divisor_lattice(adm.admissible_degree(q)).divisors)
    rows, lines = [], []
    found_any = False
    for n in wanted:
        subs = mod.cluster_tilting_subcategories(q, n, args.field)
        found_any |= bool(subs)
        rows.append({"n": n, "subcategories": [g.to_json() for g in subs]})
        if not subs:
            lines.append(f"n={n}: none")
        for g in subs:
            lines.append(f"n={n}: {_module_list_text(g)}")
    return Outcome(found_any, rows, "\n".join(lines))


def cmd_lattice(q: Quiver, args) -> Outcome:
    lat = mod.lattice_of_ct(q, args.field)
    lines = [f"N = {lat.N}"]
    for n, gens in lat.subcats:
        lines.append(f"C_{n}: {len(gens.indecomposables)} indecomposables")
    for small, big in lat.covers:
        lines.append(f"C_{small} < C_{big}")
    return Outcome(True, lat.to_json(), "\n".join(lines), lat.to_dot())


def _load_gens(q: Quiver, path: str) -> mod.ModuleList:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return mod.ModuleList.from_json(q, data)


def _default_gens(q: Quiver, n: int, field: int) -> list[mod.ModuleList]:
    return mod.cluster_tilting_subcategories(q, n, field)


def _verify_text(report: dict) -> str:
    lines = ["pass" if report["pass"] else "fail"]
    for c in report["counterexamples"]:
        lines.append(f"  {c['module']}: i={c['i']} direction={c['direction']} ({c['reason']})")
    return "\n".join(lines)


def cmd_verify(q: Quiver, args) -> Outcome:
    from qct.oracle import verify_n_cluster_tilting

    n = _need_n(args)
    cap = args.max_resolution if args.max_resolution is not None else n + 1
    if args.gens:
        candidates = [_load_gens(q, args.gens)]
    else:
        candidates = _default_gens(q, n, args.field)
        if not candidates:
            data = {"pass": False, "n": n, "field": args.field, "counterexamples": [],
                    "note": f"quiver is not {n}-admissible; pass --gens to check a candidate"}
            return Outcome(False, data, f"fail\n  {data['note']}")
    reports = [verify_n_cluster_tilting(q, n, g, args.field, max_resolution=cap) for g in candidates]
    if len(reports) == 1:
        data = reports[0]
    else:
        data = dict(reports[0])
        data["pass"] = all(r["pass"] for r in reports)
        data["counterexamples"] = [dict(c, member=i) for i, r in enumerate(reports) for c in r["counterexamples"]]
    return Outcome(data["pass"], data, _verify_text(data))


def cmd_nz(q: Quiver, args) -> Outcome:
    from qct.oracle import verify_nZ

    n = _need_n(args)
    admits = adm.admits_nZ(q, n)
    data = {"n": n, "admits_nZ": admits, "verify": None}
    text = f"admits {n}Z-cluster tilting: {'yes' if admits else 'no'}"
    ok = admits
    if args.gens:
        report = verify_nZ(q, n, _load_gens(q, args.gens), args.field)
        data["verify"] = report
        text += "\nOmega^n closure: " + ("pass" if report["pass"] else "fail")
        for c in report["counterexamples"]:
            text += f"\n  {c['module']}: Omega^{n} = {' + '.join(c['syzygy'])}"
        ok = ok and report["pass"]
    return Outcome(ok, data, text)


def cmd_ar_quiver(q: Quiver, args) -> Outcome:
    from qct.oracle import ar_quiver

    ar = ar_quiver(q, args.field)
    lines = [f"{len(ar.nodes)} modules, {ar.edge_count} irreducible maps, {len(ar.tau_pairs)} tau pairs"]
    for a, b, k in ar.arrows:
        lines.append(f"  {a.label} -> {b.label}" + (f" (x{k})" if k > 1 else ""))
    for x, t in ar.tau_pairs:
        lines.append(f"  tau({x.label}) = {t.label}")
    ok = not ar.mesh_failures()
    return Outcome(ok, ar.to_json(), "\n".join(lines), ar.to_dot())


def cmd_generate(q: Quiver, args) -> Outcome:
    n = _need_n(args)
    out = adm.generate_admissible(n, q, args.seed)
    text = serialize(out)
    return Outcome(True, {"quiver": text}, text.rstrip("\n"))


COMMANDS: dict[str, Callable] = {
    "check": cmd_check,
    "flow-paths": cmd_flow_paths,
    "degree": cmd_degree,
    "module": cmd_module,
    "subcats": cmd_subcats,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
    "nz": cmd_nz,
    "ar-quiver": cmd_ar_quiver,
    "generate": cmd_generate,
}


def _prime(text: str) -> int:
    p = int(text)
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qct", description="n-cluster tilting for radical square zero algebras")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("quiver", help="quiver file")
        sp.add_argument("--n", type=int)
        sp.add_argument("--field", type=_prime, default=2)
        sp.add_argument("--format", choices=("text", "json", "dot"), default="dot" if name == "ar-quiver" else "text")
        sp.add_argument("--per-component", action="store_true")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--gens")
        sp.add_argument("--max-resolution", type=int)
    return parser


def _render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(outcome.data, indent=2, sort_keys=False)
    if fmt == "dot":
        if outcome.dot is None:
            raise QCTError("this subcommand has no DOT output")
        return outcome.dot.rstrip("\n")
    return outcome.text


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else ERROR
    if args.n is not None and args.n < 1:
        print("error: --n must be positive", file=err)
        return ERROR
    cmd = COMMANDS[args.command]
    try:
        q = load_quiver(args.quiver)
        if args.per_component:
            parts = components(q)
            outcomes = [cmd(c, args) for c in parts]
            if args.format == "json":
                data = [{"component": i, "vertices": list(c.vertices), "result": o.data}
                        for i, (c, o) in enumerate(zip(parts, outcomes))]
                print(json.dumps(data, indent=2), file=out)
            else:
                for i, (c, o) in enumerate(zip(parts, outcomes)):
                    print(f"# component {i}: {' '.join(c.vertices)}", file=out)
                    print(_render(o, args.format), file=out)
            return OK if all(o.ok for o in outcomes) else NEGATIVE
        if not is_connected(q):
            print(f"error: quiver has {len(components(q))} components; use --per-component", file=err)
            return ERROR
        outcome = cmd(q, args)
        print(_render(outcome, args.format), file=out)
        return OK if outcome.ok else NEGATIVE
    except (QCTError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=err)
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

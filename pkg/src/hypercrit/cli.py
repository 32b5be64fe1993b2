"""Command-line front end.

Exit status: 0 when every requested verdict holds, 1 when a verdict is false,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from hypercrit.certify import emit_bundle, generate_bundle, parse_bundle, verify_bundle
from hypercrit.color import chromatic_number
from hypercrit.core import Hypergraph, emit_edge_list, parse_edge_list
from hypercrit.corpus import FIXTURES, get_fixture
from hypercrit.report import MODES, render_text, render_tsv, run_report
from hypercrit.setpairs import (
    MAX_AUDIT_GROUND,
    bollobas_sum,
    edge_bound,
    extract_setpair_system,
    permutation_event_audit,
    verify_cross_intersecting,
)
from hypercrit.transversal import transversal_number

OK, FAILED, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _load(args) -> Hypergraph:
    if args.input and args.builtin:
        raise InputError("give either --input or --builtin, not both")
    if args.builtin:
        try:
            return get_fixture(args.builtin).hypergraph
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    if args.input:
        try:
            data = sys.stdin.buffer.read() if args.input == "-" else Path(args.input).read_bytes()
        except OSError as exc:
            raise InputError(str(exc)) from None
        try:
            return parse_edge_list(data)
        except ValueError as exc:
            raise InputError(f"{args.input}: {exc}") from None
    raise InputError("no hypergraph given; use --input FILE or --builtin NAME")


def _fmt_set(vs) -> str:
    return " ".join(map(str, vs))


def _emit(args, pairs: list[tuple[str, object]], text: str) -> None:
    if args.format == "tsv":
        sys.stdout.write("".join(f"{k}\t{v}\n" for k, v in pairs))
    else:
        sys.stdout.write(text)


def cmd_chi(args) -> int:
    H = _load(args)
    try:
        k, col = chromatic_number(H)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    classes = col.classes()
    pairs = [("chi", k)] + [(f"class.{c}", _fmt_set(vs)) for c, vs in classes.items()]
    text = f"chromatic number: {k}\n" + "".join(f"colour {c}: {_fmt_set(vs)}\n" for c, vs in classes.items())
    _emit(args, pairs, text)
    return OK


def cmd_tau(args) -> int:
    H = _load(args)
    tau, T = transversal_number(H)
    _emit(args, [("tau", tau), ("witness", _fmt_set(T))], f"transversal number: {tau}\nwitness: {_fmt_set(T)}\n")
    return OK


def _report(args, mode: str, seed: bool = False) -> int:
    H = _load(args)
    if mode in ("transversal",) and not H.is_uniform(3):
        raise InputError("transversal criticality needs a 3-uniform hypergraph")
    rep = run_report(H, mode, jobs=args.jobs, with_seed_check=seed)
    sys.stdout.write(render_tsv(rep) if args.format == "tsv" else render_text(rep))
    return OK if rep.ok else FAILED


def cmd_critical(args) -> int:
    return _report(args, args.mode)


def cmd_report(args) -> int:
    return _report(args, args.mode, seed=args.seed_check)


def cmd_cert_generate(args) -> int:
    H = _load(args)
    try:
        b = generate_bundle(H, jobs=args.jobs)
    except ValueError as exc:
        sys.stderr.write(f"hypercrit: {exc}\n")
        return FAILED
    data = emit_bundle(b)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return OK


def cmd_cert_verify(args) -> int:
    H = _load(args)
    try:
        b = parse_bundle(Path(args.bundle).read_bytes())
    except (OSError, ValueError) as exc:
        raise InputError(f"{args.bundle}: {exc}") from None
    res = verify_bundle(H, b)
    pairs: list[tuple[str, object]] = []
    lines = []
    for c in res.entries:
        key = _fmt_set(c.key) if c.kind == "E" else str(c.key)
        pairs.append((f"{c.kind} {key}", "pass" if c.passed else "fail"))
        lines.append(f"{c.kind} {key} : {_fmt_set(c.blue)}  {'pass' if c.passed else 'FAIL ' + c.reason}")
    for e in res.missing_edges:
        pairs.append((f"E {_fmt_set(e)}", "missing"))
        lines.append(f"E {_fmt_set(e)}  MISSING")
    for v in res.missing_vertices:
        pairs.append((f"V {v}", "missing"))
        lines.append(f"V {v}  MISSING")
    pairs += [("passed", res.n_passed), ("expected", res.n_expected), ("ok", int(res.passed))]
    lines.append(f"{res.n_passed}/{res.n_expected} certificates pass; complete: {'yes' if res.complete else 'no'}")
    _emit(args, pairs, "\n".join(lines) + "\n")
    return OK if res.passed else FAILED


def cmd_bollobas(args) -> int:
    H = _load(args)
    if not H.is_uniform(3):
        raise InputError("set-pair extraction needs a 3-uniform hypergraph")
    try:
        S = extract_setpair_system(H, jobs=args.jobs)
    except ValueError as exc:
        sys.stderr.write(f"hypercrit: {exc}\n")
        return FAILED
    cross = verify_cross_intersecting(S)
    total = bollobas_sum(S)
    bound = edge_bound(3, 3)
    pairs: list[tuple[str, object]] = []
    lines = []
    for a, b in S.pairs:
        pairs.append((f"pair.{'-'.join(map(str, a))}", _fmt_set(b)))
        lines.append(f"A={{{','.join(map(str, a))}}}  B={{{','.join(map(str, b))}}}")
    pairs += [("cross_intersecting", int(cross)), ("bollobas_sum", str(total)), ("edges", len(S)), ("edge_bound", bound)]
    lines += [
        f"cross-intersecting: {'yes' if cross else 'no'}",
        f"bollobas sum: {total}",
        f"pairs {len(S)} <= bound {bound}: {'yes' if len(S) <= bound else 'no'}",
    ]
    ok = cross and total <= 1 and len(S) <= bound
    if len(S.ground) <= MAX_AUDIT_GROUND:
        audit = permutation_event_audit(S)
        for (a, _), c in zip(S.pairs, audit.counts):
            pairs.append((f"count.{'-'.join(map(str, a))}", c))
            lines.append(f"  c[{','.join(map(str, a))}] = {c} / {audit.permutations}")
        pairs += [
            ("permutations", audit.permutations),
            ("events_disjoint", int(audit.disjoint)),
            ("probabilities_match", int(audit.probabilities_match)),
            ("count_total", audit.total),
        ]
        lines += [
            f"permutations of ground set: {audit.permutations}",
            f"events pairwise disjoint: {'yes' if audit.disjoint else 'no'}",
            f"event probabilities match binomials: {'yes' if audit.probabilities_match else 'no'}",
            f"sum of counts: {audit.total}",
        ]
        ok = ok and audit.disjoint and audit.probabilities_match
    else:
        lines.append(f"permutation audit skipped: ground set exceeds {MAX_AUDIT_GROUND} elements")
    _emit(args, pairs, "\n".join(lines) + "\n")
    return OK if ok else FAILED


def cmd_builtin(args) -> int:
    sys.stdout.buffer.write(emit_edge_list(get_fixture(args.name).hypergraph))
    sys.stdout.flush()
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (results do not depend on it)")
    source = argparse.ArgumentParser(add_help=False, parents=[common])
    source.add_argument("--input", metavar="FILE", help="edge-list file ('-' for stdin)")
    source.add_argument("--builtin", metavar="NAME", help=f"built-in fixture: {', '.join(FIXTURES)}")

    parser = argparse.ArgumentParser(prog="hypercrit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("chi", parents=[source], help="weak chromatic number").set_defaults(func=cmd_chi)
    sub.add_parser("tau", parents=[source], help="transversal number").set_defaults(func=cmd_tau)

    p = sub.add_parser("critical", parents=[source], help="criticality verdicts")
    p.add_argument("--mode", choices=MODES, default="full")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("report", parents=[source], help="full report with bound checks")
    p.add_argument("--mode", choices=MODES, default="full")
    p.add_argument("--seed-check", action="store_true", help="also verify the shipped certificate file")
    p.set_defaults(func=cmd_report)

    cert = sub.add_parser("cert", help="certificate bundles").add_subparsers(dest="cert_command", required=True)
    p = cert.add_parser("generate", parents=[source])
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_cert_generate)
    p = cert.add_parser("verify", parents=[source])
    p.add_argument("--bundle", metavar="FILE", required=True)
    p.set_defaults(func=cmd_cert_verify)

    sub.add_parser("bollobas", parents=[source], help="set-pair system and permutation audit").set_defaults(
        func=cmd_bollobas
    )

    p = sub.add_parser("builtin", parents=[common], help="print a built-in fixture as an edge list")
    p.add_argument("name", choices=sorted(FIXTURES))
    p.set_defaults(func=cmd_builtin)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        sys.stderr.write("hypercrit: --jobs must be at least 1\n")
        return USAGE
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"hypercrit: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

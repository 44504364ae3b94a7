"""Command line interface.

Exit codes: 0 success; 2 bad input (file parse, flags, family parameters,
unsupported instance shapes); 3 when any instance's verdict is VIOLATED,
which is the counterexample alarm and is never masked by other failures;
4 when verdicts stayed UNRESOLVED (budget ran out, or exactness was
turned off) and nothing was VIOLATED.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Optional

from . import report
from .analysis import (
    HOLDS,
    UNRESOLVED,
    VIOLATED,
    inequality_suite,
    verify_conjecture,
)
from .coloring import (
    EdgeColoring,
    brooks_edge_color,
    greedy_color,
    is_proper,
    vizing_edge_color_hypergraph,
)
from .core import Hypergraph, UnsupportedInputError
from .hgr import HgrParseError, digest, parse_hgr, serialize_hgr
from .instances import GenerationError, generate, parse_family, survey_instance
from .oracle import Budget, chromatic_index, criticality_report, extract_critical


def _env_int(name: str, fallback: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return fallback
    try:
        return int(value)
    except ValueError:
        raise GenerationError(f"{name} must be an integer, got {value!r}")


def _env_float(name: str, fallback: float) -> float:
    value = os.environ.get(name)
    if value is None:
        return fallback
    try:
        return float(value)
    except ValueError:
        raise GenerationError(f"{name} must be a number, got {value!r}")


def _budget(args: argparse.Namespace) -> Budget:
    nodes = args.budget
    if nodes is None:
        nodes = _env_int("HYPERCOLOR_MAX_NODES", 10_000_000)
    limit = args.time_limit
    if limit is None:
        limit = _env_float("HYPERCOLOR_TIME_LIMIT", 30.0)
    return Budget(max_nodes=nodes, time_limit=limit if limit > 0 else None)


def _add_budget_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--budget",
        type=int,
        default=None,
        metavar="NODES",
        help="search nodes per exact call (default 10000000, "
        "env HYPERCOLOR_MAX_NODES)",
    )
    sub.add_argument(
        "--time-limit",
        type=float,
        default=None,
        help="seconds per exact call, 0 to disable (default 30, "
        "env HYPERCOLOR_TIME_LIMIT)",
    )


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "input", nargs="?", help="hypergraph file in hgr format, or - for stdin"
    )
    sub.add_argument(
        "--family",
        help="generate the input instead of reading a file (e.g. fano, "
        "affine-plane:3, random-linear:n=10,m=8,k=3,seed=1)",
    )


def _load_input(args: argparse.Namespace) -> Hypergraph:
    if args.family is not None and args.input is not None:
        raise GenerationError("give either an input file or --family, not both")
    if args.family is not None:
        return generate(parse_family(args.family))
    if args.input is None:
        raise GenerationError("no input: give a file (or -) or --family")
    if args.input == "-":
        return parse_hgr(sys.stdin.read())
    with open(args.input, "r", encoding="utf-8") as fh:
        return parse_hgr(fh.read())


def cmd_stats(args: argparse.Namespace) -> int:
    h = _load_input(args)
    sys.stdout.write(report.stats_json(h) if args.json else report.render_stats(h))
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    h = _load_input(args)
    bracket_note = None
    if args.method == "greedy":
        coloring = greedy_color(h, order=args.order, seed=args.seed)
    elif args.method == "brooks":
        coloring = brooks_edge_color(h)
    elif args.method == "vizing":
        coloring = vizing_edge_color_hypergraph(h)
    else:
        res = chromatic_index(h, _budget(args))
        coloring = EdgeColoring(dict(res.witness), res.upper)
        if res.exact is None:
            bracket_note = (
                f"budget exhausted: q is in [{res.lower}, {res.upper}]; "
                "the coloring shown achieves the upper end"
            )
    if h.m and not is_proper(h, coloring):
        raise RuntimeError("internal error: emitted coloring is not proper")
    sys.stdout.write(
        report.coloring_json(h, coloring, args.method)
        if args.json
        else report.render_coloring(h, coloring, args.method)
    )
    if bracket_note is not None:
        print(bracket_note, file=sys.stderr)
        return 4
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    h = _load_input(args)
    verdict = verify_conjecture(h, _budget(args), use_exact=args.exact)
    if args.json:
        sys.stdout.write(report.verdict_json(h, verdict))
    else:
        text = report.render_verdict(h, verdict)
        if args.inequalities:
            text += "\n".join(report.render_inequalities(inequality_suite(h))) + "\n"
        sys.stdout.write(text)
    if verdict.status == VIOLATED:
        return 3
    if verdict.status == UNRESOLVED:
        return 4
    return 0


def cmd_critical(args: argparse.Namespace) -> int:
    h = _load_input(args)
    budget = _budget(args)
    rep = criticality_report(h, budget)
    core = None if args.no_extract else extract_critical(h, budget)
    sys.stdout.write(
        report.criticality_json(h, rep, core)
        if args.json
        else report.render_criticality(h, rep, core)
    )
    if not rep.lemma_ok:
        print(
            "internal error: a critical hyperedge has degree below q - 1",
            file=sys.stderr,
        )
        return 1
    if not rep.complete or (core is not None and not core.complete):
        return 4
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    spec = parse_family(args.family)
    if args.seed is not None:
        if spec.family not in ("random-linear", "random"):
            raise GenerationError(f"--seed does not apply to {spec.family}")
        spec = replace(spec, seed=args.seed)
    h = generate(spec)
    text = serialize_hgr(h)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    norm = text.replace("..", ":")
    lo_txt, sep, hi_txt = norm.partition(":")
    try:
        lo = int(lo_txt)
        hi = int(hi_txt) if sep else lo
    except ValueError:
        raise GenerationError(f"{flag} must be LO..HI, got {text!r}")
    if lo > hi:
        raise GenerationError(f"{flag} range is empty: {text!r}")
    return lo, hi


def _survey_worker(task: tuple) -> dict:
    (seed, index, n_range, m_range, ks, use_exact, max_nodes, time_limit) = task
    spec, h = survey_instance(seed, index, n_range, m_range, ks)
    verdict = verify_conjecture(
        h,
        Budget(max_nodes=max_nodes, time_limit=time_limit),
        use_exact=use_exact,
    )
    row = {
        "index": index,
        "family": spec.label(),
        "input_sha256": digest(h),
        "n": h.n,
        "m": h.m,
        "k": spec.k,
    }
    row.update(report.verdict_dict(verdict))
    return row


def cmd_survey(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise GenerationError("--count must be non-negative")
    n_range = _parse_range(args.n_range, "--n-range")
    m_range = _parse_range(args.m_range, "--m-range")
    if n_range[0] < 2:
        raise GenerationError("--n-range must start at 2 or more")
    if m_range[0] < 1:
        raise GenerationError("--m-range must start at 1 or more")
    try:
        ks = tuple(int(part) for part in args.k.split(","))
    except ValueError:
        raise GenerationError(f"--k must be a comma list of sizes, got {args.k!r}")
    if any(k < 2 for k in ks) or not ks:
        raise GenerationError("--k sizes must all be at least 2")
    budget = _budget(args)
    tasks = [
        (
            args.seed,
            i,
            n_range,
            m_range,
            ks,
            args.exact,
            budget.max_nodes,
            budget.time_limit,
        )
        for i in range(args.count)
    ]
    if args.jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(
                pool.map(
                    _survey_worker,
                    tasks,
                    chunksize=max(1, len(tasks) // (args.jobs * 4)),
                )
            )
    else:
        rows = [_survey_worker(t) for t in tasks]
    rows.sort(key=lambda r: r["index"])
    counts = {HOLDS: 0, VIOLATED: 0, UNRESOLVED: 0}
    for row in rows:
        counts[row["status"]] += 1
    if args.json:
        import json

        payload = {
            "tool": f"hypercolor {report.TOOL_VERSION}",
            "master_seed": args.seed,
            "instances": rows,
            "holds": counts[HOLDS],
            "violated": counts[VIOLATED],
            "unresolved": counts[UNRESOLVED],
        }
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"tool: hypercolor {report.TOOL_VERSION}", f"master-seed: {args.seed}"]
        for row in rows:
            q = row["q_exact"]
            q_text = str(q) if q is not None else f"[{row['q_lower']},{row['q_upper']}]"
            conds = ",".join(row["conditions"]) if row["conditions"] else "none"
            lines.append(
                f"[{row['index']}] family={row['family']} n={row['n']} "
                f"m={row['m']} k={row['k']} "
                f"delta2={row['stats']['two_section_max_degree']} "
                f"q={q_text} bound={row['bounds']['two_section']} "
                f"status={row['status']} conditions={conds}"
            )
        lines += [
            f"instances: {len(rows)}",
            f"holds: {counts[HOLDS]}",
            f"violated: {counts[VIOLATED]}",
            f"unresolved: {counts[UNRESOLVED]}",
        ]
        sys.stdout.write("\n".join(lines) + "\n")
    if counts[VIOLATED]:
        return 3
    if counts[UNRESOLVED]:
        return 4
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercolor",
        description="Hypergraph edge coloring and degree-bound verification.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"hypercolor {report.TOOL_VERSION}",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_stats = subs.add_parser("stats", help="print structural invariants")
    _add_input_flags(p_stats)
    p_stats.add_argument("--json", action="store_true")
    p_stats.set_defaults(func=cmd_stats)

    p_color = subs.add_parser("color", help="color the hyperedges")
    _add_input_flags(p_color)
    p_color.add_argument(
        "--method",
        choices=["greedy", "brooks", "vizing", "exact"],
        default="greedy",
    )
    p_color.add_argument(
        "--order",
        choices=["index", "desc-degree", "random"],
        default="desc-degree",
        help="hyperedge order for --method greedy",
    )
    p_color.add_argument("--seed", type=int, default=0, help="seed for --order random")
    p_color.add_argument("--json", action="store_true")
    _add_budget_flags(p_color)
    p_color.set_defaults(func=cmd_color)

    p_verify = subs.add_parser(
        "verify", help="check q against the two-section degree bound"
    )
    _add_input_flags(p_verify)
    p_verify.add_argument(
        "--exact",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="run the exact oracle (--no-exact brackets q constructively)",
    )
    p_verify.add_argument(
        "--inequalities",
        action="store_true",
        help="append the structural inequality checks",
    )
    p_verify.add_argument("--json", action="store_true")
    _add_budget_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_crit = subs.add_parser(
        "critical", help="per-hyperedge criticality and a critical core"
    )
    _add_input_flags(p_crit)
    p_crit.add_argument(
        "--no-extract",
        action="store_true",
        help="only tabulate criticality, skip core extraction",
    )
    p_crit.add_argument("--json", action="store_true")
    _add_budget_flags(p_crit)
    p_crit.set_defaults(func=cmd_critical)

    p_gen = subs.add_parser("gen", help="generate an instance file")
    p_gen.add_argument(
        "--family",
        required=True,
        help="family description, e.g. fano or affine-plane:3",
    )
    p_gen.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed override for the random families",
    )
    p_gen.add_argument("-o", "--out", help="write to a file instead of stdout")
    p_gen.set_defaults(func=cmd_gen)

    p_survey = subs.add_parser(
        "survey", help="verify a batch of seeded random linear instances"
    )
    p_survey.add_argument(
        "--family",
        choices=["random-linear"],
        default="random-linear",
        help="instance family to sample (only random-linear)",
    )
    p_survey.add_argument("--count", type=int, required=True)
    p_survey.add_argument("--seed", type=int, default=0, help="master seed")
    p_survey.add_argument("--n-range", default="6..12", help="vertex range LO..HI")
    p_survey.add_argument("--m-range", default="4..16", help="edge range LO..HI")
    p_survey.add_argument("--k", default="2,3,4", help="edge sizes, comma list")
    p_survey.add_argument("--jobs", type=int, default=1)
    p_survey.add_argument(
        "--exact",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="run the exact oracle per instance",
    )
    p_survey.add_argument("--json", action="store_true")
    _add_budget_flags(p_survey)
    p_survey.set_defaults(func=cmd_survey)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        HgrParseError,
        GenerationError,
        UnsupportedInputError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

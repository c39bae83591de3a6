"""Command-line front end: build groups, enumerate parameters, search, verify.

Exit codes: 0 hit/pass, 1 no-hit/fail, 2 usage or IO error.  All persisted
element sets are 1-indexed; in-memory computation is 0-indexed and the
boundary is exactly (de)serialization.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Tuple

from .groups import GroupTable, GroupTableError, cyclic_group, dihedral_group, \
    direct_product, parse_table, serialize_table
from .params import Params, check_feasible, enumerate_feasible
from .search import PROPOSE_RANDOM, PROPOSE_SWEEP, STOP_ALL, STOP_FIRST, \
    SearchConfig, default_alpha, run_search, schedule_preset
from .verify import certificate_json, make_certificate

WORKERS_ENV = "PDSEARCH_WORKERS"


class UsageError(Exception):
    """Bad arguments or unusable input files; mapped to exit code 2."""


def _parse_spec_at(text: str, pos: int) -> Tuple[GroupTable, int]:
    if text.startswith("product:", pos):
        left, pos = _parse_spec_at(text, pos + len("product:"))
        if pos >= len(text) or text[pos] != "x":
            raise UsageError(f"product spec needs an 'x' between operands: {text!r}")
        right, pos = _parse_spec_at(text, pos + 1)
        return direct_product(left, right), pos
    for head, build in (("cyclic:", cyclic_group), ("dihedral:", dihedral_group)):
        if text.startswith(head, pos):
            start = pos + len(head)
            end = start
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == start:
                raise UsageError(f"missing order after {head!r} in {text!r}")
            return build(int(text[start:end])), end
    raise UsageError(f"unrecognized group spec at position {pos} in {text!r}")


def parse_group_spec(spec: str) -> GroupTable:
    """Build a group from a constructive spec string: cyclic:m | dihedral:m |
    product:<spec>x<spec> (right-associative)."""
    table, pos = _parse_spec_at(spec, 0)
    if pos != len(spec):
        raise UsageError(f"trailing text {spec[pos:]!r} in group spec {spec!r}")
    return table


def _load_group(arg: str) -> GroupTable:
    path = Path(arg)
    if path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read group file {arg}: {exc}") from None
        return parse_table(text, label=path.stem)
    if path.is_dir():
        raise UsageError(f"{arg} is a directory; only `search` accepts one")
    return parse_group_spec(arg)


def _load_group_dir(arg: str) -> List[GroupTable]:
    files = sorted(p for p in Path(arg).iterdir()
                   if p.is_file() and not p.name.startswith("."))
    if not files:
        raise UsageError(f"directory {arg} holds no table files")
    tables = []
    for p in files:
        tables.append(parse_table(p.read_text(), label=p.stem))
    return tables


def _resolve_workers(value: Optional[int]) -> int:
    if value is None:
        raw = os.environ.get(WORKERS_ENV)
        if raw is None:
            return 1
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"worker count must be >= 1, got {value}")
    return value


def _parse_element_list(text: str) -> List[int]:
    tokens = text.replace("[", " ").replace("]", " ").replace(",", " ").split()
    if not tokens:
        raise UsageError("empty element set")
    values = []
    for t in tokens:
        try:
            values.append(int(t))
        except ValueError:
            raise UsageError(f"non-integer element {t!r} in set") from None
    return values


def _to_zero_indexed(values: List[int], n: int, zero_indexed: bool) -> List[int]:
    low, high = (0, n - 1) if zero_indexed else (1, n)
    for v in values:
        if not low <= v <= high:
            raise UsageError(f"element {v} outside the valid range {low}..{high}")
    if len(set(values)) != len(values):
        raise UsageError("duplicate elements in set")
    return sorted(v if zero_indexed else v - 1 for v in values)


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _json_document(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_gen_group(args) -> int:
    table = parse_group_spec(args.spec)
    _write_output(serialize_table(table), args.out)
    return 0


def _search_one_group(group: GroupTable, params: Params, passes: List[int],
                      args, workers: int) -> Tuple[dict, float]:
    stop_mode = STOP_FIRST if args.stop == "first" else STOP_ALL
    alpha = args.alpha if args.alpha is not None else default_alpha(group, params)
    results = []
    wall = 0.0
    offset = 0
    for budget in passes:
        config = SearchConfig(alpha=alpha, max_trials=budget,
                              base_seed=args.seed + offset, stop_mode=stop_mode,
                              worker_count=workers, proposal_mode=args.proposals)
        pass_results, summary = run_search(group, params, config)
        results.extend(replace(r, trial_index=r.trial_index + offset)
                       for r in pass_results)
        wall += summary.wall_time_s
        offset += budget
        if stop_mode == STOP_FIRST and summary.hit_count:
            break
    results.sort(key=lambda r: r.trial_index)

    hits = []
    for r in results:
        if r.final_error != 0:
            continue
        cert = make_certificate(group, params, r.final_set)
        if not cert.passed:
            raise RuntimeError(
                f"zero-error set failed independent verification on trial "
                f"{r.trial_index}; this is a bug: "
                + "; ".join(cert.pds_check.failures + cert.srg_check.failures))
        hits.append({"trial_index": r.trial_index, "seed": r.seed,
                     "certificate": cert.to_json_dict()})

    record = {
        "group_label": group.label,
        "n": params.n,
        "k": params.k,
        "lambda": params.lam,
        "mu": params.mu,
        "config": {
            "alpha": alpha,
            "base_seed": args.seed,
            "max_trials": sum(passes),
            "passes": list(passes),
            "stop_mode": stop_mode,
            "proposal_mode": args.proposals,
        },
        "trials_used": len(results),
        "hit_count": len(hits),
        "hits": hits,
    }
    return record, wall


def cmd_search(args) -> int:
    workers = _resolve_workers(args.workers)
    if Path(args.group).is_dir():
        groups = _load_group_dir(args.group)
    else:
        groups = [_load_group(args.group)]

    n = groups[0].n
    for g in groups[1:]:
        if g.n != n:
            raise UsageError(
                f"group {g.label} has order {g.n}, expected {n}; "
                f"a sweep directory must hold groups of one order")
    params = Params(n, args.k, args.lam, args.mu)

    screen = check_feasible(params)
    if isinstance(screen, str):
        if not args.skip_feasibility:
            raise UsageError(
                f"parameters ({params.n},{params.k},{params.lam},{params.mu}) "
                f"fail feasibility: {screen} (pass --skip-feasibility to search anyway)")
        print(f"# feasibility override: {screen}", file=sys.stderr)

    if args.preset_schedule:
        passes = schedule_preset(n, params.k, srg_known=not args.srg_unknown)
        if passes is None:
            raise UsageError(
                f"no trial-schedule preset covers order {n}; supply --max-trials")
    else:
        passes = [args.max_trials]

    records = []
    total_hits = 0
    for group in groups:
        record, wall = _search_one_group(group, params, passes, args, workers)
        records.append(record)
        total_hits += record["hit_count"]
        print(f"# {group.label}: trials_used={record['trials_used']} "
              f"hits={record['hit_count']} workers={workers} "
              f"wall_time={wall:.2f}s", file=sys.stderr)

    document = records if len(records) > 1 else records[0]
    _write_output(_json_document(document), args.out)
    return 0 if total_hits else 1


def cmd_verify(args) -> int:
    group = _load_group(args.group)
    params = Params(group.n, args.k, args.lam, args.mu)
    if args.set is not None:
        values = _parse_element_list(args.set)
    else:
        try:
            text = Path(args.set_file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read set file {args.set_file}: {exc}") from None
        values = _parse_element_list(text)
    elems = _to_zero_indexed(values, group.n, args.zero_indexed)

    cert = make_certificate(group, params, elems)
    _write_output(certificate_json(cert), args.out)
    for failure in cert.pds_check.failures + cert.srg_check.failures:
        print(f"# {failure}", file=sys.stderr)
    return 0 if cert.passed else 1


def cmd_enumerate(args) -> int:
    if args.n < 5:
        print(f"# no feasible parameters below order 5, got n={args.n}",
              file=sys.stderr)
        rows = []
    else:
        rows = enumerate_feasible(args.n, primitive_only=args.primitive_only)
    if args.json:
        payload = [{
            "n": fp.params.n, "k": fp.params.k,
            "lambda": fp.params.lam, "mu": fp.params.mu,
            "m_plus": fp.m_plus, "m_minus": fp.m_minus,
            "conference": fp.conference,
        } for fp in rows]
        _write_output(_json_document(payload), args.out)
        return 0
    lines = [f"{'n':>5} {'k':>5} {'lambda':>7} {'mu':>5} {'m+':>6} {'m-':>6}  conference"]
    for fp in rows:
        p = fp.params
        lines.append(f"{p.n:>5} {p.k:>5} {p.lam:>7} {p.mu:>5} "
                     f"{fp.m_plus:>6} {fp.m_minus:>6}  {'yes' if fp.conference else 'no'}")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdsearch",
        description="Search for partial difference sets in finite groups and "
                    "certify the hits as strongly regular Cayley graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-group", help="build a group and write its table file")
    p.add_argument("spec", help="cyclic:m | dihedral:m | product:<spec>x<spec>")
    p.add_argument("out", nargs="?", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_gen_group)

    p = sub.add_parser("search", help="hill-climb for a PDS with given parameters")
    p.add_argument("group", help="table file, group spec, or directory of table files")
    p.add_argument("k", type=int, help="subset size")
    p.add_argument("lam", type=int, metavar="lambda", help="in-set difference count")
    p.add_argument("mu", type=int, help="out-of-set difference count")
    p.add_argument("--alpha", type=int, default=None,
                   help="consecutive non-improving proposals before giving up "
                        "(default (n-1)*k)")
    budget = p.add_mutually_exclusive_group()
    budget.add_argument("--max-trials", type=int, default=1000,
                        help="trial budget (default 1000)")
    budget.add_argument("--preset-schedule", action="store_true",
                        help="use the built-in per-order trial schedule")
    p.add_argument("--srg-unknown", action="store_true",
                   help="with --preset-schedule: the parameters have no known "
                        "SRG, enabling the presets above order 144")
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--workers", type=int, default=None,
                   help=f"parallel worker processes (default ${WORKERS_ENV} or 1)")
    p.add_argument("--stop", choices=("first", "all"), default="first",
                   help="stop at the first hit or run every trial (default first)")
    p.add_argument("--proposals", choices=(PROPOSE_RANDOM, PROPOSE_SWEEP),
                   default=PROPOSE_RANDOM,
                   help="swap proposal scheme (default random)")
    p.add_argument("--skip-feasibility", action="store_true",
                   help="search even when the parameters fail screening")
    p.add_argument("--out", default=None, help="write the run record here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="certify a candidate set as a PDS and SRG")
    p.add_argument("group", help="table file or group spec")
    p.add_argument("k", type=int, help="subset size")
    p.add_argument("lam", type=int, metavar="lambda", help="in-set difference count")
    p.add_argument("mu", type=int, help="out-of-set difference count")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--set", help="inline element list, e.g. '2,4,5,10,11,13'")
    which.add_argument("--set-file", help="file holding the element list")
    p.add_argument("--zero-indexed", action="store_true",
                   help="treat the input set as 0-indexed (default 1-indexed)")
    p.add_argument("--out", default=None, help="write the certificate here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list feasible (n,k,lambda,mu) for an order")
    p.add_argument("n", type=int, help="group order")
    p.add_argument("--primitive-only", action="store_true",
                   help="restrict to k <= (n-1)/2")
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p.add_argument("--out", default=None, help="write the listing here")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pdsearch: error: {exc}", file=sys.stderr)
        return 2
    except (GroupTableError, OSError) as exc:
        print(f"pdsearch: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"pdsearch: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

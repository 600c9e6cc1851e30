"""Command-line front end.

Subcommands: ``homfly`` (invariants and coefficient table of one link),
``verify`` (identity checks), ``random`` (seeded braid-word generator),
``catalog`` (built-in links with recomputed data).  Output is deterministic:
identical invocations print identical bytes.

Exit codes: 0 success, 1 bad input, 2 resource limit exceeded,
3 at least one verification failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import catalog
from .identities import (
    verify_prop31,
    verify_skein_F,
    verify_split_F,
    verify_thm13,
    verify_thm14,
    verify_thm15,
)
from .combinatorics import verify_lemma, verify_partition_identity
from .links import DiagramError, LinkDiagram, ParseError, close_braid, parse_braid
from .report import VerificationReport
from .rng import SplitMix64, random_braid
from .skein import (
    DEFAULT_MAX_NODES,
    ResourceLimitExceeded,
    SkeinEngine,
    coeff_table,
    homfly,
)

VERIFY_TARGETS = ("prop31", "thm13", "thm14", "thm15", "lemmas", "skeinF", "splitF", "all")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_FAILED = 3


class _InputError(Exception):
    pass


def _max_nodes(args) -> int:
    if args.max_nodes is not None:
        return args.max_nodes
    env = os.environ.get("SKEIN_MAX_NODES")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _InputError(f"SKEIN_MAX_NODES must be an integer, got {env!r}") from None
    return DEFAULT_MAX_NODES


def _load_file(path: str) -> LinkDiagram:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: invalid JSON ({exc})") from None
    return LinkDiagram.from_json_dict(obj)


def _resolve_links(args, allow_stdin: bool) -> list[tuple[str, LinkDiagram]]:
    """Resolve the link selection flags into labeled diagrams."""
    given = [flag for flag in ("catalog", "braid", "file") if getattr(args, flag, None)]
    if len(given) > 1:
        raise _InputError("give exactly one of --catalog, --braid, --file")
    if args.catalog:
        try:
            entry = catalog.get(args.catalog)
        except KeyError as exc:
            raise _InputError(str(exc.args[0])) from None
        return [(entry.name, entry.diagram())]
    if args.braid:
        return [(args.braid.strip(), close_braid(parse_braid(args.braid)))]
    if getattr(args, "file", None):
        return [(args.file, _load_file(args.file))]
    if allow_stdin:
        try:
            lines = [] if sys.stdin.isatty() else sys.stdin.read().splitlines()
        except (OSError, ValueError):
            lines = []
        links = []
        for line in lines:
            line = line.strip()
            if not line:
                continue
            links.append((line, close_braid(parse_braid(line))))
        if links:
            return links
    return []


# -- homfly ------------------------------------------------------------------


def _homfly_payload(label: str, diagram: LinkDiagram, max_nodes: int) -> dict:
    engine = SkeinEngine(max_nodes=max_nodes)
    framed = engine.framed_invariant(diagram)
    table = coeff_table(diagram, engine=engine)
    poly = homfly(diagram, engine=engine)
    return {
        "link": label,
        "components": table.components,
        "writhe": table.writhe,
        "total_linking": table.total_linking,
        "framed": framed,
        "homfly": poly,
        "table": table,
    }


def _print_homfly_text(payload: dict, out) -> None:
    table = payload["table"]
    print(f"link: {payload['link']}", file=out)
    print(
        f"components: {table.components}  writhe: {table.writhe}"
        f"  total_linking: {table.total_linking}",
        file=out,
    )
    print(f"framed: {payload['framed']}", file=out)
    print(f"homfly: {payload['homfly']}", file=out)
    for g in table.genus_range():
        print(f"h[g={g}] (z^{2 * g - table.components}): {table.h_at(g)}", file=out)
    for g in table.genus_range():
        print(f"p[g={g}] (z^{2 * g + 1 - table.components}): {table.p_at(g)}", file=out)


def cmd_homfly(args, out) -> int:
    links = _resolve_links(args, allow_stdin=False)
    if not links:
        raise _InputError("give one of --catalog, --braid, --file")
    label, diagram = links[0]
    if diagram.num_components == 0:
        raise _InputError("the empty diagram has no coefficient table")
    payload = _homfly_payload(label, diagram, _max_nodes(args))
    if args.format == "json":
        table = payload["table"]
        obj = {
            "link": payload["link"],
            "components": table.components,
            "writhe": table.writhe,
            "total_linking": table.total_linking,
            "framed": payload["framed"].to_quadruples(),
            "homfly": payload["homfly"].to_quadruples(),
            "h": {str(g): table.h_at(g).to_triples() for g in table.genus_range()},
            "p": {str(g): table.p_at(g).to_triples() for g in table.genus_range()},
        }
        print(json.dumps(obj, sort_keys=True, indent=2), file=out)
    else:
        _print_homfly_text(payload, out)
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _lemma_reports(args) -> list[VerificationReport]:
    reports = []
    m_max = args.m_max
    n_max = args.n_max
    for m in range(2, m_max + 1):
        reports.append(verify_lemma("5.1", m))
    for m in range(3, m_max + 1):
        reports.append(verify_lemma("5.2", m))
    for m in range(1, m_max + 1):
        reports.append(verify_lemma("5.3", m))
    n_start = 1 if args.include_lemma54_n1 else 2
    for n in range(n_start, n_max + 1):
        reports.append(verify_lemma("5.4", n))
    for m in range(2, m_max + 1):
        reports.append(verify_partition_identity(m))
    return reports


def _link_reports(
    target: str, label: str, diagram: LinkDiagram, max_nodes: int
) -> tuple[list[VerificationReport], list[str]]:
    engine = SkeinEngine(max_nodes=max_nodes)
    L = diagram.num_components
    reports: list[VerificationReport] = []
    skipped: list[str] = []

    def skip(name: str, why: str) -> None:
        skipped.append(f"{name} [{label}]: SKIP ({why})")

    want = (
        (target,)
        if target != "all"
        else ("prop31", "thm13", "thm14", "thm15", "skeinF", "splitF")
    )
    if L == 0:
        skip(target, "empty diagram")
        return reports, skipped
    for name in want:
        if name == "prop31":
            if L < 2:
                skip(name, "needs >= 2 components")
            else:
                reports.append(verify_prop31(diagram, engine=engine, label=label))
        elif name == "thm13":
            if L < 2:
                skip(name, "needs >= 2 components")
            else:
                for g in range(L - 1):
                    reports.append(verify_thm13(diagram, g, engine=engine, label=label))
        elif name == "thm14":
            reports.append(verify_thm14(diagram, engine=engine, label=label))
        elif name == "thm15":
            if L < 2:
                skip(name, "needs >= 2 components")
            else:
                reports.append(verify_thm15(diagram, engine=engine, label=label))
        elif name == "skeinF":
            inter = [
                cid for cid in diagram.crossing_ids() if not diagram.is_self_crossing(cid)
            ]
            if not inter:
                skip(name, "no inter-component crossings")
            for cid in inter:
                reports.append(
                    verify_skein_F(diagram, cid, engine=engine, label=f"{label} c{cid}")
                )
        elif name == "splitF":
            if L < 2:
                skip(name, "needs >= 2 components")
            else:
                knots = [diagram.sublink([alpha]) for alpha in range(L)]
                reports.append(
                    verify_split_F(knots, engine=engine, label=f"{label} (components split)")
                )
    return reports, skipped


def cmd_verify(args, out) -> int:
    target = args.target
    reports: list[VerificationReport] = []
    skipped: list[str] = []

    if target in ("lemmas", "all"):
        reports.extend(_lemma_reports(args))

    if target != "lemmas":
        links = _resolve_links(args, allow_stdin=True)
        if not links:
            if target == "all":
                links = [(entry.name, entry.diagram()) for entry in catalog.CATALOG]
            else:
                raise _InputError(
                    "give one of --catalog, --braid, --file, or pipe braid lines on stdin"
                )
        max_nodes = _max_nodes(args)
        for label, diagram in links:
            link_reports, link_skips = _link_reports(target, label, diagram, max_nodes)
            reports.extend(link_reports)
            skipped.extend(link_skips)

    all_passed = all(r.passed for r in reports)
    if args.format == "json":
        obj = {
            "reports": [r.to_json_dict() for r in reports],
            "skipped": skipped,
            "passed": all_passed,
        }
        print(json.dumps(obj, sort_keys=True, indent=2), file=out)
    else:
        for r in reports:
            print(r.summary(), file=out)
        for s in skipped:
            print(s, file=out)
        print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed", file=out)
    return EXIT_OK if all_passed else EXIT_FAILED


# -- random -------------------------------------------------------------------


def cmd_random(args, out) -> int:
    if args.strands < 2:
        raise _InputError("--strands must be at least 2")
    if args.length < 0:
        raise _InputError("--length must be nonnegative")
    if args.count < 1:
        raise _InputError("--count must be positive")
    rng = SplitMix64(args.seed)
    for _ in range(args.count):
        word = random_braid(rng, args.strands, args.length)
        print(word.as_text(), file=out)
    return EXIT_OK


# -- catalog ------------------------------------------------------------------


def cmd_catalog(args, out) -> int:
    rows = []
    for entry in catalog.CATALOG:
        diagram = entry.diagram()
        rows.append(
            {
                "name": entry.name,
                "components": diagram.num_components,
                "writhe": diagram.writhe(),
                "total_linking": diagram.total_linking(),
                "braid": entry.braid,
                "summary": entry.summary,
            }
        )
    if args.format == "json":
        print(json.dumps({"links": rows}, sort_keys=True, indent=2), file=out)
    else:
        for row in rows:
            print(
                f"{row['name']} L={row['components']} w={row['writhe']}"
                f" lk={row['total_linking']}  {row['summary']}  [{row['braid']}]",
                file=out,
            )
    return EXIT_OK


# -- argument wiring ------------------------------------------------------------


def _add_link_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--catalog", help="name of a built-in link")
    parser.add_argument("--braid", help="braid word, e.g. 'strands=2; 1 1'")
    parser.add_argument("--file", help="path of a diagram JSON file")
    parser.add_argument(
        "--max-nodes",
        type=int,
        default=None,
        help="skein resolution node budget (default: SKEIN_MAX_NODES or 10^7)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homflypt",
        description="Exact HOMFLY-PT polynomials and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_homfly = sub.add_parser("homfly", help="compute the invariants of one link")
    _add_link_flags(p_homfly)
    p_homfly.add_argument("--format", choices=("text", "json"), default="text")
    p_homfly.set_defaults(func=cmd_homfly)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("target", choices=VERIFY_TARGETS)
    _add_link_flags(p_verify)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--m-max", type=int, default=10, help="largest m for the counting lemmas")
    p_verify.add_argument("--n-max", type=int, default=12, help="largest n for the binomial lemma")
    p_verify.add_argument(
        "--include-lemma54-n1",
        action="store_true",
        help="also check the documented failing n=1 case of the binomial lemma",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_random = sub.add_parser("random", help="emit seeded pseudo-random braid words")
    p_random.add_argument("--strands", type=int, default=3)
    p_random.add_argument("--length", type=int, default=8)
    p_random.add_argument("--seed", type=int, default=0)
    p_random.add_argument("--count", type=int, default=1)
    p_random.set_defaults(func=cmd_random)

    p_catalog = sub.add_parser("catalog", help="list built-in links")
    p_catalog.add_argument("--format", choices=("text", "json"), default="text")
    p_catalog.set_defaults(func=cmd_catalog)

    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stream = out if out is not None else sys.stdout
    try:
        return args.func(args, stream)
    except (_InputError, ParseError, DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()

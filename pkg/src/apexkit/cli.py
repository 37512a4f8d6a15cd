"""Command-line front end.

Commands read graph6 lines from a file (or stdin), emit JSON-lines on
stdout for pipelines, and switch to aligned tables with ``--pretty``.
Exit status: 0 clean, 1 a domain check failed, 2 usage.  Commands that
write result files drop a ``<file>.manifest.json`` next to each one
with config and content digests, so reruns are byte-comparable.  Pure
report commands can replay from a content-addressed cache directory
(``--cache`` or ``APEXKIT_CACHE``).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass

from . import __version__
from .audit import audit_graph
from .catalog import BLOCK_NAMES, block, load_catalog
from .graphs import MalformedGraph6, decode_graph6, encode_graph6
from .minors import PATTERNS
from .search import (
    SearchConfig,
    disconnected_search,
    generate_connected_planar,
    generate_planar,
    heavy_nonplanar_search,
    unique_cut_search,
    verify_catalog,
)
from .structure import (
    HeavyAmbiguous,
    NotATwoCut,
    NotClassifiable,
    NotConnectivity2,
    classify,
)

USAGE_ERROR = 2


@dataclass(frozen=True)
class RunManifest:
    """What produced an output file: the command, its config, and
    digests tying inputs to outputs."""

    command: str
    config: dict
    version: str
    wall_time_s: float
    inputs: dict[str, str]
    outputs: dict[str, str]


def _sha256_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _write_manifest(
    command: str,
    config: dict,
    inputs: dict[str, str],
    outputs: list[str],
    started: float,
) -> None:
    manifest = RunManifest(
        command=command,
        config=config,
        version=__version__,
        wall_time_s=round(time.time() - started, 3),
        inputs=inputs,
        outputs={path: _sha256_file(path) for path in outputs},
    )
    for path in outputs:
        with open(path + ".manifest.json", "w", encoding="ascii") as fh:
            json.dump(asdict(manifest), fh, indent=1, sort_keys=True)
            fh.write("\n")


def _read_lines(source: str | None) -> list[str]:
    if source in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(source, encoding="ascii") as fh:
            text = fh.read()
    return [line.strip() for line in text.splitlines() if line.strip()]


def _print_rows(rows: list[dict], pretty: bool) -> None:
    if not pretty:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
        return
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    cells = [
        ["-" if row.get(c) is None else str(row.get(c, "")) for c in columns]
        for row in rows
    ]
    widths = [
        max(len(c), *(len(line[i]) for line in cells)) if cells else len(c)
        for i, c in enumerate(columns)
    ]
    print("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
    for line in cells:
        print("  ".join(v.ljust(w) for v, w in zip(line, widths)))


# -- result cache -----------------------------------------------------------


def _cache_dir(args: argparse.Namespace) -> str | None:
    return args.cache or os.environ.get("APEXKIT_CACHE") or None


def _cache_lookup(cache: str | None, key: str) -> tuple[str, int] | None:
    if cache is None:
        return None
    path = os.path.join(cache, key[:2], key + ".json")
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        stored = json.load(fh)
    return stored["stdout"], int(stored["exit"])


def _cache_store(
    cache: str | None, key: str, meta: dict, stdout: str, code: int
) -> None:
    if cache is None:
        return
    folder = os.path.join(cache, key[:2])
    os.makedirs(folder, exist_ok=True)
    payload = dict(meta, stdout=stdout, exit=code)
    with open(os.path.join(folder, key + ".json"), "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True)


def _cached_report(
    args: argparse.Namespace,
    command: str,
    config: dict,
    lines: list[str],
    render,
) -> int:
    """Replay a pure report from the cache, or compute and store it.
    ``render`` returns (rows, exit_code); rows go to stdout in the
    requested format either way."""
    cache = _cache_dir(args)
    input_digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()
    key = hashlib.sha256(
        json.dumps(
            {"command": command, "config": config, "input": input_digest},
            sort_keys=True,
        ).encode()
    ).hexdigest()
    hit = _cache_lookup(cache, key)
    if hit is not None:
        stdout, code = hit
        sys.stdout.write(stdout)
        return code
    rows, code = render()
    if args.pretty:
        _print_rows(rows, pretty=True)
        return code
    stdout = "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    sys.stdout.write(stdout)
    _cache_store(
        cache,
        key,
        {"command": command, "config": config, "input": input_digest},
        stdout,
        code,
    )
    return code


# -- commands ---------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    lines = _read_lines(args.input)
    if not lines:
        print("verify: no graphs in input", file=sys.stderr)
        return USAGE_ERROR

    def render() -> tuple[list[dict], int]:
        report = verify_catalog(lines, pairwise_minors=args.pairwise_minors)
        rows = list(report["rows"])
        rows.append({"summary": report["summary"]})
        return rows, 0 if report["summary"]["all_pass"] else 1

    return _cached_report(
        args,
        "verify",
        {"pairwise_minors": args.pairwise_minors},
        lines,
        render,
    )


def cmd_classify(args: argparse.Namespace) -> int:
    lines = _read_lines(args.input)
    if not lines:
        print("classify: no graphs in input", file=sys.stderr)
        return USAGE_ERROR

    def render() -> tuple[list[dict], int]:
        rows: list[dict] = []
        census: dict[str, int] = {}
        failed = False
        for index, word in enumerate(lines):
            try:
                decision = classify(decode_graph6(word))
            except (
                MalformedGraph6,
                NotClassifiable,
                NotConnectivity2,
                HeavyAmbiguous,
                NotATwoCut,
            ) as exc:
                rows.append({"index": index, "g6": word, "error": str(exc)})
                failed = True
                continue
            row = {"index": index, "g6": word}
            row.update(decision.as_json())
            rows.append(row)
            census[decision.label] = census.get(decision.label, 0) + 1
        rows.append({"census": dict(sorted(census.items()))})
        return rows, 1 if failed else 0

    return _cached_report(args, "classify", {}, lines, render)


def cmd_audit(args: argparse.Namespace) -> int:
    lines = _read_lines(args.input)
    if not lines:
        print("audit: no graphs in input", file=sys.stderr)
        return USAGE_ERROR
    if args.cap < 1:
        print("audit: --cap must be at least 1", file=sys.stderr)
        return USAGE_ERROR

    def render() -> tuple[list[dict], int]:
        rows: list[dict] = []
        fails = truncated = 0
        for index, word in enumerate(lines):
            try:
                g = decode_graph6(word)
            except MalformedGraph6 as exc:
                rows.append({"index": index, "g6": word, "error": str(exc)})
                fails += 1
                continue
            report = audit_graph(g, cap=args.cap)
            for row in report.as_rows():
                row.update(index=index, g6=word)
                rows.append(row)
                if row["status"] == "fail":
                    fails += 1
                elif row["status"] == "truncated":
                    truncated += 1
        rows.append(
            {
                "summary": {
                    "graphs": len(lines),
                    "fail_rows": fails,
                    "truncated_rows": truncated,
                }
            }
        )
        return rows, 1 if fails else 0

    return _cached_report(args, "audit", {"cap": args.cap}, lines, render)


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return int(lo), int(hi)
        return int(lo), int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected N or LO..HI, got {text!r}"
        ) from None


def _emit_result_lines(
    words: tuple[str, ...] | list[str],
    args: argparse.Namespace,
    command: str,
    config: dict,
    stats: dict | None,
    started: float,
) -> int:
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.writelines(word + "\n" for word in words)
        _write_manifest(command, config, {}, [args.output], started)
        summary = {"output": args.output, "count": len(words)}
        if stats is not None:
            summary["stats"] = stats
        print(json.dumps(summary, sort_keys=True))
    else:
        for word in words:
            print(word)
        if stats is not None:
            print(json.dumps({"stats": stats}, sort_keys=True), file=sys.stderr)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    started = time.time()
    if args.mode == "unique-cut":
        checkpoint = None if args.no_checkpoint else (
            args.checkpoint or args.output + ".journal.jsonl"
        )
        cfg = SearchConfig(
            heavy_order_range=args.heavy_range,
            light_kinds=tuple(args.kinds.split(",")),
            min_attach_degree=args.min_attach,
            workers=args.workers,
            source=args.source,
            output=args.output,
            checkpoint=checkpoint,
            batch_size=args.batch_size,
        )
        result = unique_cut_search(cfg)
        _write_manifest(
            "search unique-cut",
            {
                "heavy_order_range": list(cfg.heavy_order_range),
                "light_kinds": list(cfg.light_kinds),
                "min_attach_degree": cfg.min_attach_degree,
                "batch_size": cfg.batch_size,
                "workers": cfg.workers,
                "source": cfg.source,
                "checkpoint": checkpoint,
            },
            {},
            [args.output],
            started,
        )
        print(
            json.dumps(
                {
                    "output": args.output,
                    "count": len(result.obstructions),
                    "stats": result.stats,
                },
                sort_keys=True,
            )
        )
        return 0
    if args.mode == "heavy-nonplanar":
        result = heavy_nonplanar_search()
        return _emit_result_lines(
            result.obstructions,
            args,
            "search heavy-nonplanar",
            {},
            result.stats,
            started,
        )
    if args.mode == "disconnected":
        result = disconnected_search(max_order=args.max_order)
        return _emit_result_lines(
            result.obstructions,
            args,
            "search disconnected",
            {"max_order": args.max_order},
            result.stats,
            started,
        )
    # gen-planar
    lo, hi = args.orders
    generator = (
        generate_connected_planar if args.connected_only else generate_planar
    )
    config = {
        "orders": [lo, hi],
        "connected_only": args.connected_only,
        "workers": args.workers,
    }
    if args.count_only:

        def render() -> tuple[list[dict], int]:
            rows = []
            total = 0
            for n in range(lo, hi + 1):
                count = sum(1 for _ in generator(n, workers=args.workers))
                rows.append({"n": n, "count": count})
                total += count
            rows.append({"total": total})
            return rows, 0

        return _cached_report(args, "search gen-planar", config, [], render)
    words = [
        word
        for n in range(lo, hi + 1)
        for word in generator(n, workers=args.workers)
    ]
    return _emit_result_lines(
        words, args, "search gen-planar", config, None, started
    )


def cmd_catalog(args: argparse.Namespace) -> int:
    started = time.time()
    if args.action == "show":
        name = args.name
        if name in PATTERNS:
            print(encode_graph6(PATTERNS[name]))
            return 0
        if name in BLOCK_NAMES:
            for entry in block(name):
                print(entry.g6)
            return 0
        if name == "all":
            for entry in load_catalog():
                print(entry.g6)
            return 0
        print(
            f"catalog: unknown name {name!r}; patterns: "
            f"{', '.join(sorted(PATTERNS))}; blocks: {', '.join(BLOCK_NAMES)}; "
            "or 'all'",
            file=sys.stderr,
        )
        return USAGE_ERROR
    # export
    if args.figure not in BLOCK_NAMES:
        print(
            f"catalog: unknown figure {args.figure!r}; "
            f"blocks: {', '.join(BLOCK_NAMES)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    output = args.output or args.figure + ".g6"
    entries = block(args.figure)
    with open(output, "w", encoding="ascii") as fh:
        fh.writelines(entry.g6 + "\n" for entry in entries)
    _write_manifest(
        "catalog export", {"figure": args.figure}, {}, [output], started
    )
    print(json.dumps({"output": output, "count": len(entries)}))
    return 0


# -- argument wiring --------------------------------------------------------


def _env_workers() -> int:
    try:
        return max(1, int(os.environ.get("APEXKIT_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apexkit",
        description="verify, classify, audit and re-discover the "
        "connectivity-two apex obstructions",
    )
    parser.add_argument(
        "--version", action="version", version=f"apexkit {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "input",
            nargs="?",
            help="graph6 file, one graph per line; '-' or absent for stdin",
        )
        p.add_argument("--pretty", action="store_true", help="aligned table")
        p.add_argument("--cache", help="result cache directory")

    p = sub.add_parser("verify", help="re-check a stream of graphs")
    common(p)
    p.add_argument(
        "--pairwise-minors",
        action="store_true",
        help="also check no listed graph is a minor of another (slow)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="five-way structural class per graph")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("audit", help="replay the structural checks per graph")
    common(p)
    p.add_argument(
        "--cap",
        type=int,
        default=10000,
        help="budget per universal witness check (default %(default)s)",
    )
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("search", help="run a discovery engine")
    mode = p.add_subparsers(dest="mode", required=True)

    uc = mode.add_parser("unique-cut", help="attachment search, checkpointed")
    uc.add_argument("--output", default="unique_cut_obstructions.g6")
    uc.add_argument(
        "--checkpoint", help="journal path (default: <output>.journal.jsonl)"
    )
    uc.add_argument("--no-checkpoint", action="store_true")
    uc.add_argument("--workers", type=int, default=_env_workers())
    uc.add_argument(
        "--heavy-range", dest="heavy_range", type=_parse_range, default=(5, 9)
    )
    uc.add_argument("--kinds", default="K5,K33,K33e")
    uc.add_argument("--min-attach", dest="min_attach", type=int, default=3)
    uc.add_argument("--batch-size", dest="batch_size", type=int, default=200)
    uc.add_argument("--source", help="heavy sides from this graph6 file")
    uc.set_defaults(func=cmd_search)

    hn = mode.add_parser("heavy-nonplanar", help="nonplanar-side construction")
    hn.add_argument("--output")
    hn.set_defaults(func=cmd_search)

    dc = mode.add_parser("disconnected", help="two-piece obstructions")
    dc.add_argument("--output")
    dc.add_argument("--max-order", dest="max_order", type=int, default=12)
    dc.set_defaults(func=cmd_search)

    gp = mode.add_parser("gen-planar", help="planar graphs per order")
    gp.add_argument(
        "-n",
        "--orders",
        dest="orders",
        type=_parse_range,
        required=True,
        help="order or range, e.g. 7 or 5..9",
    )
    gp.add_argument("--count-only", dest="count_only", action="store_true")
    gp.add_argument(
        "--connected-only", dest="connected_only", action="store_true"
    )
    gp.add_argument("--workers", type=int, default=_env_workers())
    gp.add_argument("--output")
    gp.add_argument("--pretty", action="store_true")
    gp.add_argument("--cache", help="result cache directory")
    gp.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="embedded catalog access")
    cat = p.add_subparsers(dest="action", required=True)
    show = cat.add_parser("show", help="emit a named pattern or block")
    show.add_argument("name")
    show.set_defaults(func=cmd_catalog)
    export = cat.add_parser("export", help="write a block to a file")
    export.add_argument("--figure", required=True)
    export.add_argument("--output")
    export.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream consumer (head, grep -m) closed early; not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 141
    except OSError as exc:
        print(f"apexkit: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

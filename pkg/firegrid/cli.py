"""
FIREGRID command line
Subcommands: simulate, duel, certify, render, search.

Exit codes: 0 success (or a verified/CanContain answer), 1 refuted/CannotContain,
2 inconclusive, 3 invalid input (config, trace or identifiers).
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from firegrid.analysis.certify import DEFAULT_CERTIFY_CLIP, QUERIES, certify_trace
from firegrid.analysis.minimax import MAX_SEARCH_NODES, SEARCH_DEADLINE_SECONDS, Verdict, bounded_minimax
from firegrid.config import LOG_LEVEL, RunConfig, build_run, config_from_mapping, load_config
from firegrid.errors import ConfigError, FiregridError
from firegrid.render import DEFAULT_CELL_PX, Bounds, render_ascii, render_svg
from firegrid.runner import format_summary, run_duel
from firegrid.trace import load_trace, play, save_trace, write_trace

logger = logging.getLogger(__name__)

EXIT_INVALID = 3
SEARCH_EXIT_CODES = {Verdict.CAN_CONTAIN: 0, Verdict.CANNOT_CONTAIN: 1, Verdict.INCONCLUSIVE: 2}


def _write_text(path: str, text: str, what: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.info(f"✅ {what} written to {target}")


def _with_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    overrides = {
        "seed": args.seed,
        "horizon": args.horizon,
        "clip_radius": args.clip,
        "out": args.out,
        "svg": args.svg,
        "ascii": args.ascii,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if not overrides:
        return config
    return config_from_mapping({**config.model_dump(), **overrides})


def cmd_simulate(args: argparse.Namespace) -> int:
    config = _with_overrides(load_config(args.config), args)
    strategy, adversary = build_run(config)
    logger.info(f"🚀 Simulating {config.strategy} vs {config.adversary} from {config.ignition_cell}")
    trace = play(config.ignition_cell, strategy, adversary, config.horizon)
    logger.info(f"📊 outcome={trace.outcome.footer()} placed={trace.protected_count} burned={trace.burned_count}")

    verdict = certify_trace(trace, "containment", config.clip_radius)
    logger.info(f"🔍 {verdict.line()}")

    if config.out:
        save_trace(trace, config.out)
    else:
        sys.stdout.write(write_trace(trace))
    if config.svg:
        _write_text(config.svg, render_svg(trace), "SVG")
    if config.ascii:
        _write_text(config.ascii, render_ascii(trace), "ASCII grid")
    return 0


def cmd_duel(args: argparse.Namespace) -> int:
    rows = run_duel(args.strategy, args.adversary, horizon=args.horizon, seed=args.seed, workers=args.workers)
    summary = format_summary(rows)
    if args.out:
        _write_text(args.out, summary, "duel summary")
    else:
        sys.stdout.write(summary)
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    trace = load_trace(args.trace)
    result = certify_trace(trace, args.query, args.clip)
    print(result.line())
    return result.exit_code


def parse_bounds(text: str) -> Bounds:
    """`x_min,y_min,x_max,y_max` as four integers"""
    parts = text.split(",")
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bounds must be integers, got '{text}'")
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"bounds need x_min,y_min,x_max,y_max, got '{text}'")
    return values


def cmd_render(args: argparse.Namespace) -> int:
    trace = load_trace(args.trace)
    if args.svg:
        _write_text(args.svg, render_svg(trace, bounds=args.bounds, cell_px=args.cell_px), "SVG")
    if args.ascii:
        _write_text(args.ascii, render_ascii(trace, bounds=args.bounds), "ASCII grid")
    if not args.svg and not args.ascii:
        sys.stdout.write(render_ascii(trace, bounds=args.bounds))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    result = bounded_minimax(
        args.adversary,
        candidate_radius=args.radius,
        horizon=args.horizon,
        max_nodes=args.max_nodes,
        deadline_seconds=args.deadline,
    )
    print(result.describe())
    return SEARCH_EXIT_CODES[result.verdict]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default=LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], type=str.upper,
                        help="logging level (default from FIREGRID_LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog="firegrid", description="Online firefighter games on the square lattice")
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", parents=[common], help="run one configured game and write its trace")
    simulate.add_argument("config", help="YAML config path or scenario:<name>")
    simulate.add_argument("--seed", type=int, default=None, help="override the config seed")
    simulate.add_argument("--horizon", type=int, default=None, help="override the config horizon")
    simulate.add_argument("--clip", type=int, default=None, help="override the config clip radius")
    simulate.add_argument("--out", default=None, help="trace path (default: stdout)")
    simulate.add_argument("--svg", default=None, help="also render an SVG figure")
    simulate.add_argument("--ascii", default=None, help="also render an ASCII grid")
    simulate.set_defaults(handler=cmd_simulate)

    duel = sub.add_parser("duel", parents=[common], help="play a strategy x adversary matrix")
    duel.add_argument("--strategy", action="append", required=True, help="strategy id (repeatable)")
    duel.add_argument("--adversary", action="append", required=True, help="adversary id (repeatable)")
    duel.add_argument("--horizon", type=int, default=50)
    duel.add_argument("--seed", type=int, default=0)
    duel.add_argument("--workers", type=int, default=1, help="process pool size")
    duel.add_argument("--out", default=None, help="summary path (default: stdout)")
    duel.set_defaults(handler=cmd_duel)

    certify = sub.add_parser("certify", parents=[common], help="verify a trace's containment or escape")
    certify.add_argument("trace", help="trace file")
    certify.add_argument("--query", choices=QUERIES, default="containment")
    certify.add_argument("--clip", type=int, default=DEFAULT_CERTIFY_CLIP, help="clip radius for barrier certificates")
    certify.set_defaults(handler=cmd_certify)

    render = sub.add_parser("render", parents=[common], help="draw a trace as SVG and/or ASCII")
    render.add_argument("trace", help="trace file")
    render.add_argument("--svg", default=None)
    render.add_argument("--ascii", default=None)
    render.add_argument("--cell-px", type=int, default=DEFAULT_CELL_PX)
    render.add_argument("--bounds", type=parse_bounds, default=None,
                        help="x_min,y_min,x_max,y_max (default: fit the touched cells)")
    render.set_defaults(handler=cmd_render)

    search = sub.add_parser("search", parents=[common], help="bounded minimax against an adversary")
    search.add_argument("--adversary", default="thm1")
    search.add_argument("--radius", type=int, default=6, help="candidate universe radius")
    search.add_argument("--horizon", type=int, default=5)
    search.add_argument("--max-nodes", type=int, default=MAX_SEARCH_NODES)
    search.add_argument("--deadline", type=float, default=SEARCH_DEADLINE_SECONDS, help="seconds")
    search.set_defaults(handler=cmd_search)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level, logging.INFO),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except ConfigError as e:
        for message in e.messages:
            logger.error(f"❌ {message}")
        return EXIT_INVALID
    except FiregridError as e:
        logger.error(f"❌ {args.command} failed: {e}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"❌ {args.command} failed: {e}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

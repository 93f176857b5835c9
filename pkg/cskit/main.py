import json
import logging
import sys
from argparse import ArgumentParser, Namespace

from cskit import config
from cskit.db.init_db import cache_status, clear_cache
from cskit.errors import EXIT_COUNTEREXAMPLE, EXIT_OK, CskitError, ParseError
from cskit.services.classify import classify
from cskit.services.inspect import inspect_element, inspect_to_json
from cskit.services.posets import bruhat_interval, interval_to_dot, interval_to_json
from cskit.services.verify import SUITES, verify
from cskit.utils.export import to_csv_text, to_json_text, write_text
from cskit.utils.parsing import parse_element, parse_root_system, parse_subset

logger = logging.getLogger(__name__)


def _add_element_args(parser: ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="comma-separated generator indices, e.g. 2,4,5,3,4,2,1")
    group.add_argument("--oneline", help="one-line permutation (type A), e.g. 4231")


def _add_run_args(parser: ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, default=None, help="process-pool size (default CSKIT_WORKERS)")
    parser.add_argument("--cap", type=int, default=None, help="largest group order to enumerate (default CSKIT_GROUP_CAP)")
    parser.add_argument("--no-cache", action="store_true", help="do not read or write the group cache")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="cskit", description="Spherical and toric Schubert variety combinatorics")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level (default CSKIT_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify every element of a Weyl group")
    p.add_argument("type", help="Cartan type and rank, e.g. A3")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    _add_run_args(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("verify", help="run an exhaustive property suite")
    p.add_argument("property", help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("type", help="Cartan type and rank, e.g. A3")
    p.add_argument("--out", default=None, help="report file (default stdout)")
    _add_run_args(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("inspect", help="report on one element or word")
    p.add_argument("type", help="Cartan type and rank, e.g. A5")
    _add_element_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_inspect)

    p = sub.add_parser("interval", help="emit the Bruhat interval below an element")
    p.add_argument("type", help="Cartan type and rank, e.g. A3")
    _add_element_args(p)
    p.add_argument("--parabolic", default=None, help="restrict to W^I, e.g. 1,3")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(handler=cmd_interval)

    p = sub.add_parser("cache", help="inspect or clear the group cache")
    p.add_argument("action", choices=("status", "clear"))
    p.set_defaults(handler=cmd_cache)
    return parser


def cmd_classify(args: Namespace) -> int:
    rs = parse_root_system(args.type)
    records = classify(rs, workers=args.workers, cap=args.cap, use_cache=not args.no_cache)
    text = to_json_text(records) if args.format == "json" else to_csv_text(records)
    write_text(text, args.out)
    return EXIT_OK


def cmd_verify(args: Namespace) -> int:
    rs = parse_root_system(args.type)
    reports = verify(args.property, rs, workers=args.workers, cap=args.cap, use_cache=not args.no_cache)
    write_text(to_json_text(reports[0] if len(reports) == 1 else reports), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_inspect(args: Namespace) -> int:
    rs = parse_root_system(args.type)
    w, word = parse_element(rs, word=args.word, one_line=args.oneline)
    text = inspect_element(w, word) if args.format == "text" else to_json_text(inspect_to_json(w, word))
    write_text(text)
    return EXIT_OK


def cmd_interval(args: Namespace) -> int:
    rs = parse_root_system(args.type)
    w, _ = parse_element(rs, word=args.word, one_line=args.oneline)
    poset = bruhat_interval(w, parse_subset(args.parabolic) if args.parabolic else None)
    text = interval_to_dot(poset) if args.format == "dot" else to_json_text(interval_to_json(poset))
    write_text(text, args.out)
    return EXIT_OK


def cmd_cache(args: Namespace) -> int:
    cache_dir = config.cache_dir()
    if cache_dir is None:
        raise ParseError("CSKIT_CACHE_DIR is not set; there is no cache to manage")
    if args.action == "clear":
        removed = clear_cache(cache_dir)
        write_text(json.dumps({"removed": removed}, sort_keys=True) + "\n")
    else:
        write_text(to_json_text(cache_status(cache_dir)))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except CskitError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

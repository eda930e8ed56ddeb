# Entry point for the PatternHall command line

import argparse
import logging
import sys

from controller import converter, manager
from core.config import get_server_address
from core.errors import PatternHallError
from core.laws import LAWS
from utils.file_utils import read_series

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_LAW_FAILURE = 1
EXIT_USAGE = 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="patternhall",
        description="Hopf algebras of interval partitions and vincular patterns, pattern counting "
                    "and permutation entropy of numeric series",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count a vincular pattern in a numeric series")
    count.add_argument("series", help="series file (whitespace/comma separated numbers)")
    count.add_argument("--pattern", required=True, help="vincular pattern, e.g. 21|3")
    count.add_argument("--partition", help="composition of the series length, e.g. [3,3]")
    count.add_argument("--column", type=int, help="read this CSV column (1-based)")
    count.add_argument("--json", action="store_true")

    entropy = sub.add_parser("entropy", help="permutation entropy of a numeric series")
    entropy.add_argument("series")
    entropy.add_argument("--order", type=int, help="window length (consecutive mode)")
    entropy.add_argument("--delay", type=int, default=1)
    entropy.add_argument("--base", type=float, help="logarithm base (default: nats)")
    entropy.add_argument("--mode", choices=["consecutive", "vincular"], default="consecutive")
    entropy.add_argument("--pattern", action="append", dest="patterns", help="vincular pattern (repeatable)")
    entropy.add_argument("--partition", help="composition of the series length (vincular mode)")
    entropy.add_argument("--column", type=int)
    entropy.add_argument("--json", action="store_true")

    evaluate = sub.add_parser("eval", help="evaluate an algebra expression")
    evaluate.add_argument("expression")
    evaluate.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="check an algebraic law on all small inputs")
    verify.add_argument("--law", required=True, choices=sorted(LAWS), metavar="LAW",
                        help="one of: " + ", ".join(sorted(LAWS)))
    verify.add_argument("--max-size", type=int, default=4)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--spot-checks", type=int)
    verify.add_argument("--json", action="store_true")

    laws = sub.add_parser("laws", help="list the verifiable laws")
    laws.add_argument("--json", action="store_true")

    serve = sub.add_parser("serve", help="run the local REST agent")
    serve.add_argument("--host")
    serve.add_argument("--port", type=int)
    return parser


def _emit(result, formatter, as_json):
    print(converter.to_json(result) if as_json else formatter(result))


def run(args):
    if args.command == "count":
        series = read_series(args.series, args.column)
        _emit(manager.cmd_count(series, args.pattern, args.partition), converter.format_count, args.json)
    elif args.command == "entropy":
        series = read_series(args.series, args.column)
        result = manager.cmd_entropy(series, order=args.order, delay=args.delay, base=args.base, mode=args.mode,
                                     patterns=args.patterns, partition_text=args.partition)
        _emit(result, converter.format_entropy, args.json)
    elif args.command == "eval":
        _emit(manager.cmd_eval(args.expression), converter.format_eval, args.json)
    elif args.command == "verify":
        result = manager.cmd_verify(args.law, args.max_size, seed=args.seed, spot_checks=args.spot_checks)
        _emit(result, converter.format_verify, args.json)
        return EXIT_OK if result["passed"] else EXIT_LAW_FAILURE
    elif args.command == "laws":
        _emit(manager.list_laws(), converter.format_laws, args.json)
    elif args.command == "serve":
        from server.local_server import run_server
        host, port = get_server_address()
        run_server(host=args.host or host, port=args.port or port)
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        return run(args)
    except PatternHallError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())

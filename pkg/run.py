"""
Bounded-distance network creation games - command line entry point.

    python run.py gen prime-tree --p 3 -o prime3.json
    python run.py check prime3.json
    python run.py analyze prime3.json --csv prime3.csv
"""

import argparse
import logging
import sys

from config import Config
from core.errors import ResourceLimitError

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """Parser factory"""
    from cli.commands import FAMILIES, cmd_analyze, cmd_best_response, cmd_check, cmd_dynamics, cmd_export, cmd_gen

    parser = argparse.ArgumentParser(prog='bdncg', description="Bounded-distance network creation games")
    parser.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    parser.add_argument('--budget', type=int, default=None,
                        help=f"solver node-expansion cap (default {Config.BUDGET}, env BDNCG_BUDGET)")
    parser.add_argument('--timeout', type=float, default=None,
                        help="solver wall-clock cap in seconds (env BDNCG_TIMEOUT)")
    parser.add_argument('--jobs', type=int, default=None,
                        help=f"worker threads for per-player checks (default {Config.JOBS})")
    sub = parser.add_subparsers(dest='command', required=True)

    # gen
    gen = sub.add_parser('gen', help="generate an instance file")
    gen.add_argument('family', choices=FAMILIES)
    gen.add_argument('-o', '--output', required=True)
    gen.add_argument('--variant', choices=['max', 'sum'], default='max')
    gen.add_argument('--owner', choices=['center', 'leaves'], default='leaves')
    for name in ('n', 'k', 'h', 'p', 'R', 'B', 'ones', 'pendants', 'beta'):
        gen.add_argument(f'--{name}', type=int, default=None)
    gen.add_argument('--D', type=float, default=None, help="SUM average-distance bound, B = round(D*n)")
    gen.add_argument('--base', default=None,
                     help="embedded graph for reductions: cycle:N, path:N, complete:N, star:N, petersen, file:PATH")
    gen.add_argument('--gadget-file', default=None, help="instance file whose graph is the gadget")
    gen.add_argument('--attach', choices=['spread', 'neighborhood'], default='spread',
                     help="gadget pendants: round-robin over the gadget, or all on N(anchor)")
    gen.add_argument('--anchor', type=int, default=0, help="gadget node whose neighbourhood pendants buy")
    gen.set_defaults(func=cmd_gen)

    # check
    check = sub.add_parser('check', help="verify whether an instance is a Nash equilibrium")
    check.add_argument('input')
    check.add_argument('--json', action='store_true')
    check.set_defaults(func=cmd_check)

    # best-response
    br = sub.add_parser('best-response', help="exact best response of one player")
    br.add_argument('input')
    br.add_argument('--player', required=True, help="player id or 'last'")
    br.add_argument('--json', action='store_true')
    br.set_defaults(func=cmd_best_response)

    # dynamics
    dyn = sub.add_parser('dynamics', help="run best-response dynamics")
    dyn.add_argument('input')
    dyn.add_argument('--schedule', choices=['round-robin', 'random'], default='round-robin')
    dyn.add_argument('--seed', type=int, default=None)
    dyn.add_argument('--max-rounds', type=int, default=100)
    dyn.add_argument('--from-empty', action='store_true', help="start from the empty profile")
    dyn.add_argument('--trace', default=None, help="JSONL file with one line per deviation")
    dyn.add_argument('-o', '--output', default=None, help="write the final profile as an instance file")
    dyn.add_argument('--json', action='store_true')
    dyn.set_defaults(func=cmd_dynamics)

    # analyze
    analyze = sub.add_parser('analyze', help="ratio and equilibrium bound checks")
    analyze.add_argument('input')
    analyze.add_argument('--csv', default=None)
    analyze.add_argument('--json', action='store_true')
    analyze.set_defaults(func=cmd_analyze)

    # export
    export = sub.add_parser('export', help="export the graph as DOT or an edge list")
    export.add_argument('input')
    export.add_argument('--format', choices=['dot', 'edgelist'], default='dot')
    export.add_argument('-o', '--output', default=None)
    export.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)

    # Configure Logging
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, Config.LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    try:
        Config.validate()
        return args.func(args)
    except ResourceLimitError as e:
        logger.error(str(e))
        print(f"Resource limit: {e}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as e:
        logger.error(str(e))
        print(f"Error: {e}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())

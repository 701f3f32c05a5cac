import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from config import DEFAULT_LAMBDA, DEFAULT_REPLICATIONS, DEFAULT_SEED, configure_logging
from main.experiment import (
    ExperimentSpec,
    dump_json,
    render_table,
    run_benchmark,
    run_evaluate,
    run_generate,
    run_select,
    summary_path,
    write_text,
)
from main.tools import algorithm_help
from utils import parse_k_list, parse_name_list

logger = logging.getLogger(__name__)

# model field -> CLI flag it comes from
FLAG_NAMES = {
    'algorithms': 'algo',
    'k_list': 'k',
    'lam': 'lambda',
    'master_seed': 'seed',
}


# --- Argument parsing ---
def _add_common(parser: argparse.ArgumentParser, with_algo: bool = True):
    parser.add_argument('--graph', required=True, type=Path, help='edge-list file')
    parser.add_argument('--model', default='ic', help='diffusion model: ic or lt')
    parser.add_argument('--weights', default=None, help='uniform:<p>, trivalency or wc')
    parser.add_argument('--lambda', dest='lam', type=float, default=DEFAULT_LAMBDA, help='weight of informed nodes')
    parser.add_argument('--replications', type=int, default=DEFAULT_REPLICATIONS, help='Monte Carlo replications')
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED, help='master seed')
    parser.add_argument('--out', type=Path, default=None, help='output file (stdout when omitted)')
    parser.add_argument('--format', default='csv', help='csv or json')
    if with_algo:
        parser.add_argument('--algo', default='lazy-greedy', help=f'comma separated algorithm names ({algorithm_help()})')
        parser.add_argument('--k', default='1', help='comma separated budgets, e.g. 1,5,10')
        parser.add_argument('--evaluator', default='monte-carlo', help='monte-carlo or exact')
        parser.add_argument('--timing', action=argparse.BooleanOptionalAction, default=True,
                            help='record wall times (--no-timing writes 0.0 for byte-identical output)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='icm',
        description='Information coverage maximization: select, evaluate, generate, benchmark.',
    )
    parser.add_argument('--log-level', default=None, help='overrides ICM_LOG_LEVEL')
    sub = parser.add_subparsers(dest='command', required=True)

    _add_common(sub.add_parser('select', help='run seed selectors for each k'))
    _add_common(sub.add_parser('benchmark', help='select, then score on a held-out seed'))

    evaluate = sub.add_parser('evaluate', help='estimate W(S) for a seeds file')
    _add_common(evaluate, with_algo=False)
    evaluate.add_argument('--seeds', required=True, type=Path, help='file of node labels')

    generate = sub.add_parser('generate', help='write a generated or fixture graph')
    generate.add_argument('--kind', required=True, help='erdos-renyi, scale-free or fixture')
    generate.add_argument('--n', type=int, default=None)
    generate.add_argument('--p', type=float, default=None)
    generate.add_argument('--m0', type=int, default=None)
    generate.add_argument('--name', default=None, help='fixture name')
    generate.add_argument('--weights', default=None, help='uniform:<p>, trivalency or wc')
    generate.add_argument('--seed', type=int, default=DEFAULT_SEED)
    generate.add_argument('--out', type=Path, default=None)
    return parser


def _spec_from_args(args) -> ExperimentSpec:
    try:
        k_list = parse_k_list(args.k)
    except ValueError as e:
        raise ValueError(f"invalid field 'k': {e}")
    return ExperimentSpec(
        graph=args.graph,
        model=args.model,
        weights=args.weights,
        algorithms=parse_name_list(args.algo),
        k_list=k_list,
        lam=args.lam,
        replications=args.replications,
        master_seed=args.seed,
        evaluator=args.evaluator,
        out=args.out,
        format=args.format,
        timing=args.timing,
    )


# --- Commands ---
def cmd_select(args) -> int:
    spec = _spec_from_args(args)
    table = run_select(spec)
    write_text(render_table(table, spec.format), spec.out)
    return 0


def cmd_evaluate(args) -> int:
    if args.format not in ('csv', 'json'):
        raise ValueError(f"invalid field 'format': expected csv or json, got {args.format!r}")
    table = run_evaluate(
        graph=args.graph,
        seeds_text=args.seeds.read_text(encoding='utf-8'),
        model=args.model,
        lam=args.lam,
        replications=args.replications,
        master_seed=args.seed,
        weights=args.weights,
    )
    write_text(render_table(table, args.format), args.out)
    return 0


def cmd_generate(args) -> int:
    text = run_generate(
        kind=args.kind,
        seed=args.seed,
        n=args.n,
        p=args.p,
        m0=args.m0,
        name=args.name,
        weights=args.weights,
    )
    write_text(text, args.out)
    return 0


def cmd_benchmark(args) -> int:
    spec = _spec_from_args(args)
    result = run_benchmark(spec)
    write_text(render_table(result['table'], spec.format), spec.out)
    if spec.out is not None:
        write_text(dump_json(result['summary']), summary_path(spec.out))
    return 0


commands = {
    'select': cmd_select,
    'evaluate': cmd_evaluate,
    'generate': cmd_generate,
    'benchmark': cmd_benchmark,
}


# --- CLI Entry Point ---
def run_cli(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command, return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        return commands[args.command](args)
    except ValidationError as e:
        error = e.errors()[0]
        field = '.'.join(FLAG_NAMES.get(str(part), str(part)) for part in error['loc']) or 'input'
        print(f"error: invalid field '{field}': {error['msg']}", file=sys.stderr)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(run_cli())

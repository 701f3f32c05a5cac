"""
Registry of seed-selection algorithms exposed by the CLI and the API.

Every adapter declares only the arguments it needs; call_algorithm passes the
matching subset of the available context (model, cfg, evaluator, seed ...).
"""

import inspect
from typing import Any, Callable, Dict

from selection.exhaustive import exhaustive_optimal
from selection.greedy import lazy_greedy, plain_greedy
from selection.heuristics import baseline_out_degree, baseline_random, effective_degree_rank
from selection.schema import SelectionResult


def run_lazy_greedy(g, k, model, cfg, evaluator):
    return lazy_greedy(g, model, k, cfg, evaluator=evaluator)


def run_plain_greedy(g, k, model, cfg, evaluator):
    return plain_greedy(g, model, k, cfg, evaluator=evaluator)


def run_effective_degree(g, k):
    return effective_degree_rank(g, k)


def run_out_degree(g, k):
    return baseline_out_degree(g, k)


def run_random(g, k, seed):
    return baseline_random(g, k, seed)


def run_exhaustive(g, k, model, cfg):
    return exhaustive_optimal(g, model, k, cfg.lam)


all_algorithms = [
    {
        'name': 'lazy-greedy',
        'description': 'Lazy-forward greedy on W(S); (1 - 1/e) guarantee with exact evaluation.',
        'function': run_lazy_greedy,
    },
    {
        'name': 'greedy',
        'description': 'Plain greedy that re-evaluates every candidate each round (reference).',
        'function': run_plain_greedy,
    },
    {
        'name': 'effective-degree',
        'description': 'Effective degree rank: out-degree minus already covered out-neighbours.',
        'function': run_effective_degree,
    },
    {
        'name': 'out-degree',
        'description': 'Top-k nodes by raw out-degree.',
        'function': run_out_degree,
    },
    {
        'name': 'random',
        'description': 'Uniform random k-subset, deterministic given the seed.',
        'function': run_random,
    },
    {
        'name': 'exhaustive',
        'description': 'Exact optimum over all k-subsets (tiny graphs only).',
        'function': run_exhaustive,
    },
]

algorithm_functions: Dict[str, Callable[..., SelectionResult]] = {a['name']: a['function'] for a in all_algorithms}


def algorithm_help() -> str:
    """One 'name: description' entry per registered algorithm, for CLI help."""
    return '; '.join(f"{a['name']}: {a['description']}" for a in all_algorithms)


def call_algorithm(name: str, **context: Any) -> SelectionResult:
    """Run a registered algorithm with the context arguments it declares."""
    fn = algorithm_functions.get(name)
    if fn is None:
        raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(algorithm_functions)}")

    sig = inspect.signature(fn)
    missing = [k for k, v in sig.parameters.items() if k not in context and v.default is inspect.Parameter.empty]
    if missing:
        raise ValueError(f"algorithm {name!r} needs {', '.join(missing)}")
    call_args = {k: context[k] for k in sig.parameters if k in context}
    return fn(**call_args)

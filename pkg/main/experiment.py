"""
Experiment runners behind the CLI verbs: select, evaluate, generate and
benchmark. Each returns a pandas DataFrame (or graph text) and leaves printing
to the caller.
"""

import json
import logging
import time
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import DEFAULT_LAMBDA, DEFAULT_REPLICATIONS, DEFAULT_SEED, HELDOUT_SEED_OFFSET
from graph.fixtures import get_fixture
from graph.generate import erdos_renyi, scale_free
from graph.store import DirectedGraph, assign_weights, describe, load_graph, require_parameters, save_graph
from diffusion.outcome import Model
from estimator.exact import exact_breakdown
from estimator.monte_carlo import CoverageConfig, estimate_coverage
from estimator.objective import EVALUATORS
from main.tools import algorithm_functions, call_algorithm
from selection.schema import SelectionResult
from utils import git_blob_hash, parse_weight_scheme, read_seed_labels

logger = logging.getLogger(__name__)

SELECT_COLUMNS = [
    'algorithm', 'k', 'lambda', 'seeds', 'objective', 'std_error', 'evaluations', 'wall_time_s',
]
BENCHMARK_COLUMNS = [
    'algorithm', 'k', 'lambda', 'seeds', 'objective', 'std_error',
    'active_mean', 'informed_mean', 'evaluations', 'wall_time_s',
]


# --- Pydantic Models ---
class ExperimentSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: Path
    model: Model = Model.IC
    weights: Optional[str] = None
    algorithms: List[str] = Field(default_factory=lambda: ['lazy-greedy'])
    k_list: List[int] = Field(default_factory=lambda: [1])
    lam: float = Field(DEFAULT_LAMBDA, ge=0.0, le=1.0)
    replications: int = Field(DEFAULT_REPLICATIONS, ge=1)
    master_seed: int = Field(DEFAULT_SEED, ge=0, lt=2 ** 64)
    evaluator: str = 'monte-carlo'
    out: Optional[Path] = None
    format: Literal['csv', 'json'] = 'csv'
    timing: bool = True

    @field_validator('graph')
    @classmethod
    def graph_exists(cls, value: Path) -> Path:
        if not value.is_file():
            raise ValueError(f"graph file not found: {value}")
        return value

    @field_validator('weights')
    @classmethod
    def weights_parse(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            parse_weight_scheme(value)
        return value

    @field_validator('algorithms')
    @classmethod
    def algorithms_known(cls, value: List[str]) -> List[str]:
        if not value:
            raise ValueError("at least one algorithm is required")
        unknown = [name for name in value if name not in algorithm_functions]
        if unknown:
            raise ValueError(f"unknown algorithm(s) {', '.join(unknown)}; choose from {', '.join(algorithm_functions)}")
        return value

    @field_validator('k_list')
    @classmethod
    def k_list_valid(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("at least one k is required")
        if any(k < 0 for k in value):
            raise ValueError("every k must be non-negative")
        return value

    @field_validator('evaluator')
    @classmethod
    def evaluator_known(cls, value: str) -> str:
        if value not in EVALUATORS:
            raise ValueError(f"unknown evaluator {value!r}; choose from {', '.join(EVALUATORS)}")
        return value

    def coverage_config(self, offset: int = 0) -> CoverageConfig:
        return CoverageConfig(
            lam=self.lam,
            replications=self.replications,
            master_seed=(self.master_seed + offset) % 2 ** 64,
        )


# ============================================================================
# Shared helpers
# ============================================================================

def prepare_graph(path: Path, model: Model, weights: Optional[str], master_seed: int) -> DirectedGraph:
    """Load a graph, apply the weight scheme if one is given, and check the model's parameters."""
    g = load_graph(path)
    if weights:
        scheme, p = parse_weight_scheme(weights)
        g = assign_weights(g, scheme, p=p, seed=master_seed)
    require_parameters(g, model)
    return g


def format_seeds(g: DirectedGraph, seeds: List[int]) -> str:
    return ';'.join(g.labels[v] for v in seeds)


def evaluate_seeds(g: DirectedGraph, seeds: List[int], model: Model, cfg: CoverageConfig, evaluator: str) -> Dict[str, float]:
    """Objective value with std_error and the E|A| / E|L| split."""
    if evaluator == 'exact':
        active, informed = exact_breakdown(g, seeds, model)
        return {
            'objective': active + cfg.lam * informed,
            'std_error': 0.0,
            'active_mean': active,
            'informed_mean': informed,
        }
    estimate = estimate_coverage(g, seeds, model, cfg)
    return {
        'objective': estimate.mean,
        'std_error': estimate.std_error,
        'active_mean': estimate.active_mean,
        'informed_mean': estimate.informed_mean,
    }


def graph_metadata(path: Path, g: DirectedGraph) -> Dict[str, Any]:
    return {
        'path': str(path),
        'content_hash': git_blob_hash(Path(path).read_bytes()),
        **describe(g),
    }


def _select(spec: ExperimentSpec, g: DirectedGraph, algorithm: str, k: int) -> SelectionResult:
    return call_algorithm(
        algorithm,
        g=g,
        k=k,
        model=spec.model,
        cfg=spec.coverage_config(),
        evaluator=spec.evaluator,
        seed=spec.master_seed,
    )


# ============================================================================
# Commands
# ============================================================================

def run_select(spec: ExperimentSpec) -> pd.DataFrame:
    """One row per (algorithm, k): seeds, objective with std_error, evaluations, wall time."""
    g = prepare_graph(spec.graph, spec.model, spec.weights, spec.master_seed)
    cfg = spec.coverage_config()

    rows = []
    for algorithm in spec.algorithms:
        for k in spec.k_list:
            result = _select(spec, g, algorithm, k)
            value = evaluate_seeds(g, result.seeds, spec.model, cfg, spec.evaluator)
            rows.append({
                'algorithm': algorithm,
                'k': k,
                'lambda': spec.lam,
                'seeds': format_seeds(g, result.seeds),
                'objective': value['objective'],
                'std_error': value['std_error'],
                'evaluations': result.total_evaluations,
                'wall_time_s': result.wall_time if spec.timing else 0.0,
            })
            logger.info("%s k=%d -> %s", algorithm, k, rows[-1]['seeds'])
    return pd.DataFrame(rows, columns=SELECT_COLUMNS)


def run_evaluate(
    graph: Path,
    seeds_text: str,
    model: Model,
    lam: float,
    replications: int,
    master_seed: int,
    weights: Optional[str] = None,
) -> pd.DataFrame:
    """
    Evaluate a given seed set. E|A| and E|L| come from the same replications,
    so objective = active_mean + lambda * informed_mean.
    """
    cfg = CoverageConfig(lam=lam, replications=replications, master_seed=master_seed)
    g = prepare_graph(graph, model, weights, master_seed)
    seeds = g.node_ids(read_seed_labels(seeds_text))
    estimate = estimate_coverage(g, seeds, model, cfg)
    return pd.DataFrame([{
        'seeds': format_seeds(g, seeds),
        'lambda': lam,
        'replications': estimate.R_used,
        'mean': estimate.mean,
        'std_error': estimate.std_error,
        'active_mean': estimate.active_mean,
        'informed_mean': estimate.informed_mean,
    }])


def run_generate(
    kind: str,
    seed: int,
    n: Optional[int] = None,
    p: Optional[float] = None,
    m0: Optional[int] = None,
    name: Optional[str] = None,
    weights: Optional[str] = None,
) -> str:
    """Build a benchmark or fixture graph and return its edge-list text."""
    if kind == 'erdos-renyi':
        if n is None or p is None:
            raise ValueError("erdos-renyi needs --n and --p")
        g = erdos_renyi(n, p, seed)
    elif kind == 'scale-free':
        if n is None or m0 is None:
            raise ValueError("scale-free needs --n and --m0")
        g = scale_free(n, m0, seed)
    elif kind == 'fixture':
        if not name:
            raise ValueError("fixture needs --name")
        g = get_fixture(name)
    else:
        raise ValueError(f"unknown graph kind {kind!r}; choose erdos-renyi, scale-free or fixture")

    if weights:
        scheme, prob = parse_weight_scheme(weights)
        g = assign_weights(g, scheme, p=prob, seed=seed)
    return save_graph(g)


def run_benchmark(spec: ExperimentSpec) -> Dict[str, Any]:
    """
    Select with the master seed, then score every selection with one held-out
    estimator seed (master_seed + 1) so reported values carry no selection bias.

    Returns:
        {'table': DataFrame, 'summary': dict} ready for CSV / JSON output
    """
    g = prepare_graph(spec.graph, spec.model, spec.weights, spec.master_seed)
    heldout_cfg = spec.coverage_config(offset=HELDOUT_SEED_OFFSET)

    start_time = time.perf_counter()
    rows = []
    for algorithm in spec.algorithms:
        for k in spec.k_list:
            result = _select(spec, g, algorithm, k)
            estimate = estimate_coverage(g, result.seeds, spec.model, heldout_cfg)
            rows.append({
                'algorithm': algorithm,
                'k': k,
                'lambda': spec.lam,
                'seeds': format_seeds(g, result.seeds),
                'objective': estimate.mean,
                'std_error': estimate.std_error,
                'active_mean': estimate.active_mean,
                'informed_mean': estimate.informed_mean,
                'evaluations': result.total_evaluations,
                'wall_time_s': result.wall_time if spec.timing else 0.0,
            })
    total_time = time.perf_counter() - start_time if spec.timing else 0.0

    table = pd.DataFrame(rows, columns=BENCHMARK_COLUMNS)
    summary = {
        'config': {
            'model': spec.model.value,
            'weights': spec.weights,
            'algorithms': list(spec.algorithms),
            'k_list': list(spec.k_list),
            'lambda': spec.lam,
            'replications': spec.replications,
            'master_seed': spec.master_seed,
            'heldout_seed': heldout_cfg.master_seed,
            'evaluator': spec.evaluator,
        },
        'graph': graph_metadata(spec.graph, g),
        'rows': table.to_dict(orient='records'),
        'wall_time_s': total_time,
    }
    return {'table': table, 'summary': summary}


# ============================================================================
# Output
# ============================================================================

def _json_default(value):
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


def dump_json(payload) -> str:
    return json.dumps(payload, indent=2, default=_json_default) + "\n"


def render_table(df: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return dump_json(df.to_dict(orient="records"))
    return df.to_csv(index=False, lineterminator="\n")


def write_text(text: str, out: Optional[Path]):
    if out is None:
        print(text, end='')
        return
    with open(out, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)


def summary_path(out: Path) -> Path:
    return out.with_name(f"{out.stem}.summary.json")

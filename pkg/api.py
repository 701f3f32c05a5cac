import io
from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from config import DEFAULT_LAMBDA, DEFAULT_SEED, configure_logging
from graph.store import DirectedGraph, assign_weights, load_graph, require_parameters
from diffusion.outcome import Model
from estimator.monte_carlo import CoverageConfig, estimate_coverage
from main.tools import call_algorithm
from utils import parse_weight_scheme

# --- Initialize ---
configure_logging()

app = FastAPI(title="Information Coverage API")

# Requests are served synchronously; keep replication counts modest.
API_MAX_REPLICATIONS = 100_000


# --- Pydantic Models ---
class GraphPayload(BaseModel):
    edges: str = Field(..., description="edge list: `src dst [ic_prob [lt_weight]]` per line")
    model: Model = Model.IC
    weights: Optional[str] = None
    lam: float = Field(DEFAULT_LAMBDA, ge=0.0, le=1.0)
    replications: int = Field(1_000, ge=1, le=API_MAX_REPLICATIONS)
    master_seed: int = Field(DEFAULT_SEED, ge=0, lt=2 ** 64)


class EvaluateRequest(GraphPayload):
    seeds: List[str]


class SelectRequest(GraphPayload):
    algorithm: str = "lazy-greedy"
    k: int = Field(1, ge=0)
    evaluator: str = "monte-carlo"


class EvaluateResponse(BaseModel):
    mean: float
    std_error: float
    active_mean: float
    informed_mean: float
    replications: int


class SelectResponse(BaseModel):
    algorithm: str
    seeds: List[str]
    marginal_gains: List[float]
    evaluations: int
    objective_value: Optional[float] = None


def _graph_from_payload(payload: GraphPayload) -> DirectedGraph:
    g = load_graph(io.StringIO(payload.edges))
    if payload.weights:
        scheme, p = parse_weight_scheme(payload.weights)
        g = assign_weights(g, scheme, p=p, seed=payload.master_seed)
    require_parameters(g, payload.model)
    return g


def _config(payload: GraphPayload) -> CoverageConfig:
    return CoverageConfig(lam=payload.lam, replications=payload.replications, master_seed=payload.master_seed)


@app.post("/api/evaluate", response_model=EvaluateResponse)
def evaluate(request: EvaluateRequest):
    """Estimate W(S) for a seed set given by node labels."""
    try:
        g = _graph_from_payload(request)
        estimate = estimate_coverage(g, g.node_ids(request.seeds), request.model, _config(request))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
    return EvaluateResponse(
        mean=estimate.mean,
        std_error=estimate.std_error,
        active_mean=estimate.active_mean,
        informed_mean=estimate.informed_mean,
        replications=estimate.R_used,
    )


@app.post("/api/select", response_model=SelectResponse)
def select(request: SelectRequest):
    """Run one seed selector."""
    try:
        g = _graph_from_payload(request)
        result = call_algorithm(
            request.algorithm,
            g=g,
            k=request.k,
            model=request.model,
            cfg=_config(request),
            evaluator=request.evaluator,
            seed=request.master_seed,
        )
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
    return SelectResponse(
        algorithm=result.algorithm,
        seeds=[g.labels[v] for v in result.seeds],
        marginal_gains=result.marginal_gains,
        evaluations=result.total_evaluations,
        objective_value=result.objective_value,
    )


@app.get("/api/health")
def health_check():
    """Health check endpoint."""
    return {"status": "healthy"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="127.0.0.1", port=8000)

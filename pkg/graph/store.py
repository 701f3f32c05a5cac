import io
import re
import math
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import LT_TOLERANCE
from utils import WEIGHT_SCHEMES

logger = logging.getLogger(__name__)

TRIVALENCY_VALUES = (0.1, 0.01, 0.001)

_HEADER_RE = re.compile(r'#\s*n\s*=\s*(\d+)(?:\s+m\s*=\s*(\d+))?')


class GraphFormatError(ValueError):
    """Edge-list input that cannot form a valid graph."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(ValueError):
    """Diffusion parameters that are missing or out of range."""


class InvalidSeedError(ValueError):
    """Seed ids outside the graph, duplicated, or unknown labels."""


@dataclass(frozen=True)
class LtViolation:
    node: int
    total: float


class DirectedGraph:
    """
    Immutable directed graph with dense ids 0..n-1 and two parameters per arc:
    ic_prob (IC activation probability) and lt_weight (LT influence weight).
    Unset parameters are NaN.

    Arc e goes src[e] -> dst[e]; out/in adjacency lists hold (neighbour, e)
    pairs in ascending neighbour order.
    """

    def __init__(
        self,
        n: int,
        src: Sequence[int],
        dst: Sequence[int],
        ic_prob: Optional[Sequence[float]] = None,
        lt_weight: Optional[Sequence[float]] = None,
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise GraphFormatError(f"node count must be non-negative, got {n}")
        src_arr = np.asarray(src, dtype=np.int64).reshape(-1)
        dst_arr = np.asarray(dst, dtype=np.int64).reshape(-1)
        if src_arr.shape != dst_arr.shape:
            raise GraphFormatError("src and dst must have the same length")
        m = src_arr.size

        ic_arr = _param_array(ic_prob, m, "ic_prob")
        lt_arr = _param_array(lt_weight, m, "lt_weight")

        seen = set()
        for e in range(m):
            u, v = int(src_arr[e]), int(dst_arr[e])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphFormatError(f"self-loop at node {u}")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))

        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise GraphFormatError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise GraphFormatError("node labels must be unique")

        for arr in (src_arr, dst_arr, ic_arr, lt_arr):
            arr.flags.writeable = False

        self.n = n
        self.m = m
        self.src = src_arr
        self.dst = dst_arr
        self.ic_prob = ic_arr
        self.lt_weight = lt_arr
        self.labels = labels
        self.label_to_id: Dict[str, int] = {label: i for i, label in enumerate(labels)}

        out_edges: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        in_edges: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for e in range(m):
            u, v = int(src_arr[e]), int(dst_arr[e])
            out_edges[u].append((v, e))
            in_edges[v].append((u, e))
        self.out_edges = tuple(tuple(sorted(edges)) for edges in out_edges)
        self.in_edges = tuple(tuple(sorted(edges)) for edges in in_edges)

        # plain-list views for the simulators' inner loops
        self.ic_list = tuple(ic_arr.tolist())
        self.lt_list = tuple(lt_arr.tolist())

    # --- Adjacency ---
    @property
    def out_adj(self) -> Tuple[Tuple[Tuple[int, float, float], ...], ...]:
        """Per node: (target, ic_prob, lt_weight) for every outgoing arc."""
        return tuple(
            tuple((v, self.ic_list[e], self.lt_list[e]) for v, e in edges)
            for edges in self.out_edges
        )

    @property
    def in_adj(self) -> Tuple[Tuple[Tuple[int, float, float], ...], ...]:
        """Per node: (source, ic_prob, lt_weight) for every incoming arc."""
        return tuple(
            tuple((u, self.ic_list[e], self.lt_list[e]) for u, e in edges)
            for edges in self.in_edges
        )

    def out_degree(self, v: int) -> int:
        return len(self.out_edges[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_edges[v])

    def out_neighbours(self, v: int) -> List[int]:
        return [w for w, _ in self.out_edges[v]]

    def edge_list(self) -> List[Tuple[int, int, float, float]]:
        """All arcs as (src, dst, ic_prob, lt_weight) in arc order."""
        return [
            (int(self.src[e]), int(self.dst[e]), self.ic_list[e], self.lt_list[e])
            for e in range(self.m)
        ]

    def has_ic(self) -> bool:
        return not bool(np.isnan(self.ic_prob).any())

    def has_lt(self) -> bool:
        return not bool(np.isnan(self.lt_weight).any())

    def with_parameters(
        self,
        ic_prob: Optional[Sequence[float]] = None,
        lt_weight: Optional[Sequence[float]] = None,
    ) -> "DirectedGraph":
        """Copy of the graph with one or both parameter vectors replaced."""
        return DirectedGraph(
            self.n,
            self.src,
            self.dst,
            ic_prob=self.ic_prob if ic_prob is None else ic_prob,
            lt_weight=self.lt_weight if lt_weight is None else lt_weight,
            labels=self.labels,
        )

    def node_ids(self, labels: Sequence[str]) -> List[int]:
        """Map original labels to ids; unknown labels are rejected by name."""
        ids = []
        for label in labels:
            key = str(label)
            if key not in self.label_to_id:
                raise InvalidSeedError(f"unknown node label: {key!r}")
            ids.append(self.label_to_id[key])
        return ids

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, m={self.m})"


def _param_array(values, m: int, name: str) -> np.ndarray:
    if values is None:
        return np.full(m, np.nan)
    arr = np.array(values, dtype=float).reshape(-1)
    if arr.size != m:
        raise ParameterError(f"{name} has {arr.size} values for {m} arcs")
    finite = arr[~np.isnan(arr)]
    if finite.size and (finite.min() < 0.0 or finite.max() > 1.0):
        raise ParameterError(f"every {name} must be in [0, 1]")
    return arr


# ============================================================================
# Edge-list ingestion
# ============================================================================

def load_graph(source) -> DirectedGraph:
    """
    Load a graph from an edge list.

    Args:
        source: text stream, path-like, or the edge-list text itself when it
            contains a newline

    Lines are `src dst [ic_prob [lt_weight]]`; `#` lines are comments, and a
    `# n=<n> m=<m>` header keeps isolated integer-labelled nodes.

    Returns:
        DirectedGraph with dense ids; parameters missing from the file are NaN
    """
    text = _read_source(source)

    header_n = None
    rows = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            header = _HEADER_RE.match(line)
            if header and header_n is None:
                header_n = int(header.group(1))
            continue

        tokens = line.split()
        if len(tokens) < 2 or len(tokens) > 4:
            raise GraphFormatError(f"expected 'src dst [ic_prob [lt_weight]]', got {line!r}", line_no)

        params = []
        for token in tokens[2:]:
            try:
                value = float(token)
            except ValueError:
                raise GraphFormatError(f"not a number: {token!r}", line_no)
            if not math.isnan(value) and not 0.0 <= value <= 1.0:
                raise GraphFormatError(f"parameter {value} outside [0, 1]", line_no)
            params.append(value)
        while len(params) < 2:
            params.append(math.nan)

        rows.append((line_no, tokens[0], tokens[1], params[0], params[1]))

    labels = _assign_ids(rows, header_n)
    label_to_id = {label: i for i, label in enumerate(labels)}

    src, dst, ic, lt = [], [], [], []
    seen = {}
    for line_no, a, b, p, w in rows:
        if a == b:
            raise GraphFormatError(f"self-loop at {a}", line_no)
        key = (a, b)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {a} -> {b} (first at line {seen[key]})", line_no)
        seen[key] = line_no
        src.append(label_to_id[a])
        dst.append(label_to_id[b])
        ic.append(p)
        lt.append(w)

    g = DirectedGraph(len(labels), src, dst, ic_prob=ic, lt_weight=lt, labels=labels)
    logger.info("Loaded graph with n=%d m=%d", g.n, g.m)
    return g


def _read_source(source) -> str:
    if isinstance(source, io.TextIOBase) or hasattr(source, 'read'):
        return source.read()
    if isinstance(source, str) and '\n' in source:
        return source
    with open(source, 'r', encoding='utf-8') as f:
        return f.read()


def _canonical_int(label: str) -> Optional[int]:
    if re.fullmatch(r'\d+', label) and (label == '0' or not label.startswith('0')):
        return int(label)
    return None


def _assign_ids(rows, header_n: Optional[int]) -> List[str]:
    """Dense id order: numeric for integer labels, first appearance otherwise."""
    order: Dict[str, None] = {}
    for _, a, b, _, _ in rows:
        order.setdefault(a)
        order.setdefault(b)
    labels = list(order)

    ints = [_canonical_int(label) for label in labels]
    if all(value is not None for value in ints):
        if header_n is not None and all(value < header_n for value in ints):
            return [str(i) for i in range(header_n)]
        return [str(value) for value in sorted(ints)]
    return labels


def save_graph(g: DirectedGraph, sink=None) -> str:
    """
    Serialize to `src dst ic_prob lt_weight` lines under a `# n=<n> m=<m>`
    header, using original labels. Writes to sink (stream or path) when given.

    Returns:
        The serialized text
    """
    lines = [f"# n={g.n} m={g.m}"]
    for u, v, p, w in g.edge_list():
        lines.append(f"{g.labels[u]} {g.labels[v]} {_format_param(p)} {_format_param(w)}")
    text = "\n".join(lines) + "\n"

    if sink is not None:
        if hasattr(sink, 'write'):
            sink.write(text)
        else:
            with open(sink, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
    return text


def _format_param(value: float) -> str:
    return "nan" if math.isnan(value) else repr(float(value))


# ============================================================================
# Parameter assignment and validation
# ============================================================================

def assign_weights(
    g: DirectedGraph,
    scheme: str,
    p: Optional[float] = None,
    seed: Optional[int] = None,
) -> DirectedGraph:
    """
    Assign diffusion parameters with a standard scheme.

    Args:
        g: graph to parameterize (left unchanged)
        scheme: "uniform-ic", "trivalency" or "weighted-cascade"
        p: probability for uniform-ic
        seed: required for trivalency

    Returns:
        New DirectedGraph. uniform-ic and trivalency set ic_prob only;
        weighted-cascade sets ic_prob and lt_weight to 1/in-degree(dst).
    """
    if scheme not in WEIGHT_SCHEMES:
        raise ParameterError(f"unknown weight scheme: {scheme!r}")

    if scheme == "uniform-ic":
        if p is None or not 0.0 <= p <= 1.0:
            raise ParameterError(f"uniform-ic needs p in [0, 1], got {p}")
        return g.with_parameters(ic_prob=np.full(g.m, float(p)))

    if scheme == "trivalency":
        if seed is None:
            raise ParameterError("trivalency needs a seed")
        rng = np.random.Generator(np.random.Philox(key=int(seed) & 0xFFFFFFFFFFFFFFFF))
        picks = rng.integers(0, len(TRIVALENCY_VALUES), size=g.m)
        return g.with_parameters(ic_prob=np.asarray(TRIVALENCY_VALUES)[picks])

    in_degree = np.bincount(g.dst, minlength=g.n) if g.m else np.zeros(g.n, dtype=np.int64)
    weights = [1.0 / int(in_degree[int(v)]) for v in g.dst]
    return g.with_parameters(ic_prob=weights, lt_weight=weights)


def validate_lt(g: DirectedGraph, tolerance: float = LT_TOLERANCE) -> List[LtViolation]:
    """Nodes whose incoming lt_weight sum exceeds 1 + tolerance."""
    violations = []
    for v in range(g.n):
        total = math.fsum(g.lt_list[e] for _, e in g.in_edges[v] if not math.isnan(g.lt_list[e]))
        if total > 1.0 + tolerance:
            violations.append(LtViolation(node=v, total=total))
    return violations


def require_parameters(g: DirectedGraph, model) -> None:
    """Reject a graph that lacks the parameters the chosen model reads."""
    name = getattr(model, 'value', model)
    if name == "ic":
        if not g.has_ic():
            raise ParameterError("ic_prob is unset on some arcs; assign weights first")
    elif name == "lt":
        if not g.has_lt():
            raise ParameterError("lt_weight is unset on some arcs; use the weighted-cascade scheme")
        violations = validate_lt(g)
        if violations:
            worst = violations[0]
            raise ParameterError(
                f"incoming lt_weight sum {worst.total:.6g} > 1 at node {g.labels[worst.node]} "
                f"({len(violations)} violation(s))"
            )
    else:
        raise ParameterError(f"unknown diffusion model: {model!r}")


def describe(g: DirectedGraph) -> Dict[str, object]:
    """Summary statistics for run metadata."""
    out_degrees = [len(edges) for edges in g.out_edges]
    return {
        'n': g.n,
        'm': g.m,
        'max_out_degree': max(out_degrees) if out_degrees else 0,
        'mean_out_degree': (g.m / g.n) if g.n else 0.0,
        'has_ic_prob': g.has_ic(),
        'has_lt_weight': g.has_lt(),
    }

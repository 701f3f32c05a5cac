from dataclasses import dataclass, field
from typing import List, Optional

from utils import round_gain


@dataclass(frozen=True)
class SelectionResult:
    """
    Ordered seeds from one selector run.

    marginal_gains holds the gain of each seed when it was added (greedy
    selectors) or its ranking score (degree heuristics). evaluations_per_step
    counts objective evaluations spent choosing each seed; the first step
    includes the initial singleton pass.
    """
    algorithm: str
    seeds: List[int]
    marginal_gains: List[float]
    evaluations_per_step: List[int]
    objective_value: Optional[float] = None
    wall_time: float = 0.0

    @property
    def total_evaluations(self) -> int:
        return sum(self.evaluations_per_step)

    @property
    def k(self) -> int:
        return len(self.seeds)


@dataclass(order=True)
class LazyQueueEntry:
    """
    Heap entry for lazy-forward greedy, ordered by (-gain, node) so the
    largest cached gain pops first and ties go to the smallest id.
    """
    sort_key: tuple = field(init=False, repr=False)
    node: int = field(compare=False)
    delta: float = field(compare=False)
    stamp: int = field(compare=False)

    def __post_init__(self):
        self.sort_key = (-round_gain(self.delta), self.node)

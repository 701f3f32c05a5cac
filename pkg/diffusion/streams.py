"""
Counter-based random streams for replications.

Replication i of a run with master seed s reads from a Philox generator keyed
by s with its counter starting at i << 128, so its draws depend only on
(s, i), never on which thread runs it or in what order.
"""

from dataclasses import dataclass
from typing import Iterator

import numpy as np

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class ReplicationStream:
    master_seed: int
    replication_index: int

    def __post_init__(self):
        if self.replication_index < 0:
            raise ValueError(f"replication_index must be non-negative, got {self.replication_index}")

    def generator(self) -> np.random.Generator:
        bit_generator = np.random.Philox(
            key=self.master_seed & _MASK64,
            counter=self.replication_index << 128,
        )
        return np.random.Generator(bit_generator)

    def uniforms(self, size: int) -> np.ndarray:
        """The first `size` uniforms on [0, 1) of this stream."""
        return self.generator().random(size)


def replication_streams(master_seed: int, count: int, start: int = 0) -> Iterator[ReplicationStream]:
    for index in range(start, start + count):
        yield ReplicationStream(master_seed, index)

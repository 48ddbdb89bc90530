"""
Reproducible random streams.

A SeedSpec names a stream; each fixed-size chunk of work inside that stream
gets its own generator, derived as

    SeedSequence(entropy=master_seed, spawn_key=(stream_index, chunk_index)) -> PCG64

so a chunk's draws depend only on (master_seed, stream_index, chunk_index),
never on which worker runs it or in which order.
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

DEFAULT_SEED = 4972
CHUNK_SIZE = 1 << 16
MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class SeedSpec:
    """
    Seed of one sampling stream.

    Fields:
        master_seed: unsigned 64-bit integer
        stream_index: which independent stream under the master seed
    """

    master_seed: int = DEFAULT_SEED
    stream_index: int = 0

    def __post_init__(self):
        if not 0 <= self.master_seed <= MAX_SEED:
            raise ValueError(
                f"master_seed must be an unsigned 64-bit integer, got {self.master_seed}"
            )
        if self.stream_index < 0:
            raise ValueError(f"stream_index cannot be negative, got {self.stream_index}")

    def generator(self, chunk_index: int = 0) -> np.random.Generator:
        """Generator for one chunk of this stream."""
        sequence = np.random.SeedSequence(
            entropy=self.master_seed, spawn_key=(self.stream_index, chunk_index)
        )
        return np.random.Generator(np.random.PCG64(sequence))

    def with_stream(self, stream_index: int) -> "SeedSpec":
        return SeedSpec(master_seed=self.master_seed, stream_index=stream_index)


def chunk_sizes(n: int, chunk_size: int = CHUNK_SIZE) -> Iterator[Tuple[int, int]]:
    """(chunk_index, size) pairs covering n samples; the last chunk may be short."""
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be positive, got {chunk_size}")
    for index, start in enumerate(range(0, n, chunk_size)):
        yield index, min(chunk_size, n - start)

"""
Vectorised search for counterexamples to quantified equations

A law is a function of one index array per quantified variable returning a
boolean array (True where the law holds). The search walks the quantified
index space in row-major blocks, so the first failure found is the
lexicographically least witness.
"""

import logging
from math import prod
from typing import Callable, Iterator, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_CHUNK = 1 << 20

Law = Callable[..., np.ndarray]


def index_blocks(dims: Sequence[int], chunk: int = DEFAULT_CHUNK) -> Iterator[Tuple[np.ndarray, ...]]:
    """Yield the index tuples of the box `dims` in row-major order, `chunk` at a time"""
    total = prod(dims)
    for start in range(0, total, chunk):
        flat = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield tuple(np.asarray(axis, dtype=np.int64) for axis in np.unravel_index(flat, tuple(dims)))


def _holds(law: Law, indices: Tuple[np.ndarray, ...]) -> np.ndarray:
    result = np.asarray(law(*indices), dtype=bool)
    return np.broadcast_to(result, indices[0].shape)


def first_witness(dims: Sequence[int], law: Law, chunk: int = DEFAULT_CHUNK) -> Optional[Tuple[int, ...]]:
    """
    Exhaustively search for the lexicographically least tuple violating `law`

    Args:
        dims: size of each quantified variable's range
        law: vectorised predicate over one index array per variable
        chunk: number of tuples evaluated per block

    Returns:
        The least failing tuple, or None when the law holds everywhere
    """
    if any(d == 0 for d in dims):
        return None
    for indices in index_blocks(dims, chunk):
        bad = np.flatnonzero(~_holds(law, indices))
        if bad.size:
            first = int(bad[0])
            return tuple(int(axis[first]) for axis in indices)
    return None


def sampled_witness(
    dims: Sequence[int],
    law: Law,
    samples: int,
    seed: int,
    chunk: int = DEFAULT_CHUNK,
) -> Optional[Tuple[int, ...]]:
    """
    Search `samples` seeded random tuples for a violation of `law`

    The least failing tuple of the first failing block is returned, which
    keeps the answer a function of the seed alone.
    """
    rng = np.random.default_rng(seed)
    drawn = 0
    while drawn < samples:
        count = min(chunk, samples - drawn)
        indices = tuple(rng.integers(0, d, size=count, dtype=np.int64) for d in dims)
        bad = ~_holds(law, indices)
        if bad.any():
            failing = np.stack([axis[bad] for axis in indices], axis=1)
            order = np.lexsort(failing.T[::-1])
            return tuple(int(v) for v in failing[order[0]])
        drawn += count
    logger.debug("sampled %d tuples over %s without a violation", samples, tuple(dims))
    return None


def table_key(array: np.ndarray) -> bytes:
    """Canonical byte image of an index table, used for equality and hashing"""
    return np.ascontiguousarray(array, dtype=np.int64).tobytes()


def frozen(array) -> np.ndarray:
    """Return an int64 read-only copy of `array`"""
    result = np.array(array, dtype=np.int64)
    result.setflags(write=False)
    return result

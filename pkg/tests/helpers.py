"""Shared enumeration helpers and hypothesis strategies."""

from __future__ import annotations

import itertools
from typing import Iterator

from hypothesis import strategies as st


def all_positions(max_heaps: int, max_value: int) -> Iterator[tuple[int, ...]]:
    """Every canonical position with at most max_heaps heaps, values <= max_value."""
    for k in range(max_heaps + 1):
        yield from itertools.combinations(range(1, max_value + 1), k)


def canonical_positions(max_heaps: int = 4, max_value: int = 12):
    return st.sets(st.integers(1, max_value), max_size=max_heaps).map(
        lambda s: tuple(sorted(s))
    )


@st.composite
def raw_states(draw, max_heaps: int = 5, max_value: int = 16):
    """Valid raw states: distinct positives, any number of zero heaps, shuffled."""
    positives = draw(st.sets(st.integers(1, max_value), max_size=max_heaps))
    min_zeros = 0 if positives else 1
    n_zeros = draw(
        st.integers(min_zeros, max(min_zeros, max_heaps - len(positives)))
    )
    return tuple(draw(st.permutations(list(positives) + [0] * n_zeros)))

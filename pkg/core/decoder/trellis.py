"""
Trellis of a feed-forward rate-1/n convolutional code
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np


def generator_taps(generator: int, constraint_length: int) -> np.ndarray:
    """
    Tap vector of an octal generator, delay 0 first

    The generator is read MSB-first: 0o35 = 11101 -> taps (1, 1, 1, 0, 1)
    on delays 0..4.
    """
    bits = [(generator >> (constraint_length - 1 - d)) & 1 for d in range(constraint_length)]
    return np.array(bits, dtype=np.uint8)


@dataclass(frozen=True)
class Trellis:
    """
    State-transition tables

    State s packs the last (constraint_length - 1) inputs with the most recent
    one in the MSB. Input u from state s leads to (u << (m-1)) | (s >> 1).
    """

    generators: Tuple[int, ...]
    constraint_length: int
    next_state: np.ndarray      # (S, 2)
    outputs: np.ndarray         # (S, 2, n) code bits
    prev_state: np.ndarray      # (S, 2) predecessors of each state
    prev_input: np.ndarray      # (S, 2) input bit on the edge from prev_state

    @property
    def n_states(self) -> int:
        return self.next_state.shape[0]

    @property
    def memory(self) -> int:
        return self.constraint_length - 1

    @property
    def n_outputs(self) -> int:
        return len(self.generators)

    @property
    def output_signs(self) -> np.ndarray:
        """(S, 2, n) array of 1 - 2c, i.e. +1 for code bit 0"""
        return 1.0 - 2.0 * self.outputs


@lru_cache(maxsize=8)
def build_trellis(generators: Tuple[int, ...] = (0o35, 0o23), constraint_length: int = 5) -> Trellis:
    """Build (and cache) the trellis of the given code"""
    memory = constraint_length - 1
    n_states = 1 << memory
    taps = [generator_taps(g, constraint_length) for g in generators]

    next_state = np.zeros((n_states, 2), dtype=np.int64)
    outputs = np.zeros((n_states, 2, len(generators)), dtype=np.uint8)
    for state in range(n_states):
        history = [(state >> (memory - 1 - d)) & 1 for d in range(memory)]
        for u in (0, 1):
            register = np.array([u] + history, dtype=np.uint8)
            next_state[state, u] = (u << (memory - 1)) | (state >> 1)
            for g, tap in enumerate(taps):
                outputs[state, u, g] = int(register @ tap) & 1

    prev_state = np.zeros((n_states, 2), dtype=np.int64)
    prev_input = np.zeros((n_states, 2), dtype=np.int64)
    filled = np.zeros(n_states, dtype=np.int64)
    for state in range(n_states):
        for u in (0, 1):
            target = next_state[state, u]
            prev_state[target, filled[target]] = state
            prev_input[target, filled[target]] = u
            filled[target] += 1

    for array in (next_state, outputs, prev_state, prev_input):
        array.setflags(write=False)
    return Trellis(
        generators=tuple(generators),
        constraint_length=constraint_length,
        next_state=next_state,
        outputs=outputs,
        prev_state=prev_state,
        prev_input=prev_input,
    )

"""
Soft-input Viterbi decoder, the maximum-likelihood sequence reference
"""

from typing import Tuple

import numpy as np

from core.errors import BadLength
from .maxlog_map import NEG_INF, branch_metrics
from .trellis import build_trellis


def viterbi_decode(coded_llrs: np.ndarray, n_info: int, generators: Tuple[int, ...] = (0o35, 0o23),
                   constraint_length: int = 5) -> np.ndarray:
    """
    Most likely info sequence of a zero-terminated codeword

    Args:
        coded_llrs: 2 * (n_info + tail) LLRs, log P(0)/P(1), codeword order
        n_info: information bits (tail excluded)

    Returns:
        np.ndarray: n_info hard decisions
    """
    trellis = build_trellis(tuple(generators), constraint_length)
    n_steps = n_info + trellis.memory
    llrs = np.asarray(coded_llrs, dtype=float).reshape(-1)
    if llrs.shape[0] != n_steps * trellis.n_outputs:
        raise BadLength(f"Viterbi expects {n_steps * trellis.n_outputs} coded LLRs, got {llrs.shape[0]}")

    gamma = branch_metrics(trellis, llrs)
    metric = np.full(trellis.n_states, NEG_INF)
    metric[0] = 0.0
    survivor = np.zeros((n_steps, trellis.n_states), dtype=np.int64)
    prev_state, prev_input = trellis.prev_state, trellis.prev_input
    for k in range(n_steps):
        candidates = metric[prev_state] + gamma[k][prev_state, prev_input]
        choice = candidates.argmax(axis=1)
        survivor[k] = choice
        metric = candidates[np.arange(trellis.n_states), choice]

    decisions = np.zeros(n_steps, dtype=np.uint8)
    state = 0
    for k in range(n_steps - 1, -1, -1):
        branch = survivor[k, state]
        decisions[k] = prev_input[state, branch]
        state = prev_state[state, branch]
    return decisions[:n_info]

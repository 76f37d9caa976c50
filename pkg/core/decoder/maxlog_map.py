"""
Max-Log-MAP soft-input soft-output decoder for zero-terminated convolutional codes
LLR convention: log P(b=0) / P(b=1).
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from core.errors import BadLength
from .trellis import Trellis, build_trellis

logger = logging.getLogger(__name__)

NEG_INF = -1e30
LLR_CAP = 50.0


@dataclass(frozen=True)
class DecoderOutput:
    """Soft and hard decoder results for one frame"""

    extrinsic: np.ndarray       # coded-bit extrinsic LLRs, codeword order
    app_coded: np.ndarray       # coded-bit a-posteriori LLRs
    app_info: np.ndarray        # info-bit a-posteriori LLRs, tail included
    info_bits: np.ndarray       # hard decisions, tail dropped


def branch_metrics(trellis: Trellis, coded_llrs: np.ndarray) -> np.ndarray:
    """gamma[k, s, u] = 1/2 sum_b llr[k, b] * (1 - 2 c_b(s, u))"""
    pairs = coded_llrs.reshape(-1, trellis.n_outputs)
    return 0.5 * np.einsum('kb,sub->ksu', pairs, trellis.output_signs)


class MaxLogMapDecoder:
    """
    Forward/backward max-log recursion over the full block

    The trellis starts and ends in state 0; tail info bits take part in the
    recursion but are dropped from the hard output.
    """

    def __init__(self, n_info: int, generators: Tuple[int, ...] = (0o35, 0o23),
                 constraint_length: int = 5, llr_cap: float = LLR_CAP):
        self.trellis = build_trellis(tuple(generators), constraint_length)
        self.n_info = n_info
        self.n_steps = n_info + self.trellis.memory
        self.llr_cap = llr_cap

    @property
    def n_coded(self) -> int:
        return self.n_steps * self.trellis.n_outputs

    def _check_length(self, coded_llrs: np.ndarray) -> np.ndarray:
        coded_llrs = np.asarray(coded_llrs, dtype=float).reshape(-1)
        if coded_llrs.shape[0] != self.n_coded:
            raise BadLength(f"Decoder expects {self.n_coded} coded LLRs, got {coded_llrs.shape[0]}")
        return np.clip(coded_llrs, -self.llr_cap, self.llr_cap)

    def _forward(self, gamma: np.ndarray) -> np.ndarray:
        trellis = self.trellis
        alpha = np.full((self.n_steps + 1, trellis.n_states), NEG_INF)
        alpha[0, 0] = 0.0
        prev_state, prev_input = trellis.prev_state, trellis.prev_input
        for k in range(self.n_steps):
            candidates = alpha[k][prev_state] + gamma[k][prev_state, prev_input]
            row = candidates.max(axis=1)
            alpha[k + 1] = row - row.max()
        return alpha

    def _backward(self, gamma: np.ndarray) -> np.ndarray:
        trellis = self.trellis
        beta = np.full((self.n_steps + 1, trellis.n_states), NEG_INF)
        beta[self.n_steps, 0] = 0.0
        next_state = trellis.next_state
        for k in range(self.n_steps - 1, -1, -1):
            row = (gamma[k] + beta[k + 1][next_state]).max(axis=1)
            beta[k] = row - row.max()
        return beta

    def decode(self, coded_llrs: np.ndarray) -> DecoderOutput:
        """
        Decode one deinterleaved frame of coded-bit LLRs

        Args:
            coded_llrs: 2 * (info + tail) LLRs in codeword order

        Returns:
            DecoderOutput: extrinsic coded LLRs (a-posteriori minus input) and
                hard info decisions

        Raises:
            BadLength: if the input length does not match the code
        """
        llrs = self._check_length(coded_llrs)
        trellis = self.trellis
        gamma = branch_metrics(trellis, llrs)
        alpha = self._forward(gamma)
        beta = self._backward(gamma)

        metric = alpha[:-1, :, None] + gamma + beta[1:][:, trellis.next_state]
        flat = metric.reshape(self.n_steps, -1)

        inputs = np.broadcast_to(np.array([0, 1]), (trellis.n_states, 2)).reshape(-1)
        app_info = flat[:, inputs == 0].max(axis=1) - flat[:, inputs == 1].max(axis=1)

        app_coded = np.empty((self.n_steps, trellis.n_outputs))
        for b in range(trellis.n_outputs):
            zero = trellis.outputs[:, :, b].reshape(-1) == 0
            app_coded[:, b] = flat[:, zero].max(axis=1) - flat[:, ~zero].max(axis=1)
        app_coded = app_coded.reshape(-1)

        info_bits = (app_info[: self.n_info] < 0).astype(np.uint8)
        extrinsic = np.clip(app_coded - llrs, -self.llr_cap, self.llr_cap)
        return DecoderOutput(extrinsic=extrinsic, app_coded=app_coded, app_info=app_info, info_bits=info_bits)


def maxlog_decode(coded_llrs: np.ndarray, n_info: int, generators: Tuple[int, ...] = (0o35, 0o23),
                  constraint_length: int = 5) -> Tuple[np.ndarray, np.ndarray]:
    """Functional form: returns (extrinsic coded LLRs, info bit decisions)"""
    output = MaxLogMapDecoder(n_info, generators, constraint_length).decode(coded_llrs)
    return output.extrinsic, output.info_bits

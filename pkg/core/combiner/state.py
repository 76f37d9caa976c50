"""
Accumulated statistics that carry information across ARQ rounds

ChipCombinerState keeps the matched-filter output and per-bin Gram matrices
summed over rounds; SymbolCombinerState keeps the demapper metrics of
closed rounds. Both have a size independent of the number of rounds.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from core.channel.fading import ChannelFrequencyResponse
from core.errors import RoundOrderViolation, ShapeMismatch
from core.numerics.hermitian import hermitian_gram
from core.txchain.modulation import Constellation
from .demapper import demap_metrics, symbol_metrics
from .despreader import DespreadOutput
from .meter import ComplexityMeter, chip_update_additions, symbol_update_additions

logger = logging.getLogger(__name__)


def matched_filter(y_f: np.ndarray, response: ChannelFrequencyResponse) -> Tuple[np.ndarray, np.ndarray]:
    """
    Single-round sufficient statistics

    Returns:
        Tuple: (Lambda_i^H y_f,i as (T_c, N_T), D_i = Lambda_i^H Lambda_i as (T_c, N_T, N_T))
    """
    bins = response.bins
    if y_f.shape != bins.shape[:2]:
        raise ShapeMismatch(f"y_f {y_f.shape} does not match CFR {bins.shape}")
    y_tilde = np.einsum('irt,ir->it', np.conj(bins), y_f)
    return y_tilde, hermitian_gram(bins)


class ChipCombinerState:
    """Running sums y~_f and D_i over the rounds received so far"""

    def __init__(self, n_chips: int, n_tx: int, meter: Optional[ComplexityMeter] = None):
        self.n_chips = n_chips
        self.n_tx = n_tx
        self.meter = meter
        self.y_tilde = np.zeros((n_chips, n_tx), dtype=complex)
        self.gram = np.zeros((n_chips, n_tx, n_tx), dtype=complex)
        self.rounds = 0

    @property
    def size_reals(self) -> int:
        return 2 * (self.y_tilde.size + self.gram.size)

    def update(self, y_f: np.ndarray, response: ChannelFrequencyResponse) -> "ChipCombinerState":
        """
        Add round k's matched-filter output and Gram matrices

        Raises:
            RoundOrderViolation: unless response.round_index == rounds + 1
        """
        expected = self.rounds + 1
        if response.round_index != expected:
            raise RoundOrderViolation(f"Chip-level update for round {response.round_index}, expected {expected}")
        y_tilde, gram = matched_filter(y_f, response)
        if gram.shape != self.gram.shape:
            raise ShapeMismatch(f"Round Gram stack {gram.shape}, state holds {self.gram.shape}")
        self.y_tilde += y_tilde
        self.gram += gram
        self.rounds = expected
        if self.meter is not None and expected > 1:
            self.meter.add(chip_update_additions(self.n_chips, self.n_tx), expected)
        logger.debug(f"Chip-level state now holds {self.rounds} round(s)")
        return self


def chip_update(state: ChipCombinerState, y_f: np.ndarray,
                response: ChannelFrequencyResponse) -> ChipCombinerState:
    return state.update(y_f, response)


class SymbolCombinerState:
    """
    Demapper metrics of closed rounds, xi_bar[t, j, s]

    Turbo iterations of round k demap with (committed + current round term);
    close_round() commits the last term exactly once.
    """

    def __init__(self, n_tx: int, n_symbols: int, n_points: int, meter: Optional[ComplexityMeter] = None):
        self.meter = meter
        self.committed = np.zeros((n_tx, n_symbols, n_points))
        self.rounds = 0
        self._pending: Optional[np.ndarray] = None
        self._pending_round: Optional[int] = None

    @property
    def size_reals(self) -> int:
        return self.committed.size

    def accumulate(self, metrics: np.ndarray, round_index: int) -> np.ndarray:
        """Accumulated metrics including round_index's current term"""
        expected = self.rounds + 1
        if round_index != expected:
            raise RoundOrderViolation(f"Symbol-level update for round {round_index}, expected {expected}")
        if metrics.shape != self.committed.shape:
            raise ShapeMismatch(f"Metrics {metrics.shape}, state holds {self.committed.shape}")
        self._pending = metrics
        self._pending_round = round_index
        if self.meter is not None and round_index > 1:
            n_tx, n_symbols, n_points = metrics.shape
            self.meter.add(symbol_update_additions(n_symbols, n_tx, int(np.log2(n_points))), round_index)
        return self.committed + metrics

    def close_round(self) -> "SymbolCombinerState":
        """
        Commit the most recent round term

        Raises:
            RoundOrderViolation: if no term of the open round was computed
        """
        if self._pending is None or self._pending_round != self.rounds + 1:
            raise RoundOrderViolation(f"No metrics to commit for round {self.rounds + 1}")
        self.committed = self.committed + self._pending
        self.rounds = self._pending_round
        self._pending = None
        self._pending_round = None
        return self


def symbol_update_and_demap(state: SymbolCombinerState, d: DespreadOutput, apriori: np.ndarray,
                            constellation: Constellation, round_index: int,
                            kind: str = 'exact') -> Tuple[SymbolCombinerState, np.ndarray]:
    """
    Demap round round_index with the metrics of every earlier round added

    Returns:
        Tuple: (state with the round term pending, extrinsic LLRs (N_T, T_s, M))
    """
    total = state.accumulate(symbol_metrics(d, constellation), round_index)
    return state, demap_metrics(total, apriori, constellation, kind)

"""
Symbol-level combining receiver: each round equalized alone, demapper metrics summed
"""

import numpy as np

from core.combiner.state import SymbolCombinerState, matched_filter, symbol_update_and_demap
from .base_receiver import RoundObservation
from .turbo_receiver import TurboReceiver


class SymbolLevelReceiver(TurboReceiver):
    """Single-round turbo MMSE FDE; xi_bar accumulates over closed rounds"""

    kind = 'symbol'

    def reset_state(self) -> None:
        cfg = self.cfg
        self.state = SymbolCombinerState(cfg.n_tx, cfg.symbols_per_antenna, self.constellation.order, self.meter)
        self._round_stats = None

    def absorb_round(self, observation: RoundObservation) -> None:
        self._round_stats = matched_filter(observation.y_f, observation.response)

    def demap(self, observation: RoundObservation, apriori: np.ndarray) -> np.ndarray:
        y_tilde, gram = self._round_stats
        d = self.equalize(gram, y_tilde, self.priors_for(apriori), observation.sigma2)
        _, extrinsic = symbol_update_and_demap(self.state, d, apriori, self.constellation,
                                               observation.round_index, self.cfg.demapper)
        return extrinsic

    def finish_round(self, observation: RoundObservation) -> None:
        self.state.close_round()
        self._round_stats = None

    def state_size_reals(self) -> int:
        return self.state.size_reals

"""
Chip-level combining receiver: all rounds fused inside the equalizer
"""

import numpy as np

from core.combiner.demapper import demap_chip_level
from core.combiner.state import ChipCombinerState
from .base_receiver import RoundObservation
from .turbo_receiver import TurboReceiver


class ChipLevelReceiver(TurboReceiver):
    """Turbo MMSE FDE over the accumulated virtual MIMO channel of rounds 1..k"""

    kind = 'chip'

    def reset_state(self) -> None:
        self.state = ChipCombinerState(self.cfg.chips_per_block, self.cfg.n_tx, self.meter)

    def absorb_round(self, observation: RoundObservation) -> None:
        self.state.update(observation.y_f, observation.response)

    def demap(self, observation: RoundObservation, apriori: np.ndarray) -> np.ndarray:
        d = self.equalize(self.state.gram, self.state.y_tilde, self.priors_for(apriori), observation.sigma2)
        return demap_chip_level(d, apriori, self.constellation, self.cfg.demapper)

    def state_size_reals(self) -> int:
        return self.state.size_reals

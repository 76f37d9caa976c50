"""
Frame construction: info bits -> coded frame -> symbols -> chip matrix X'
"""

import logging
from dataclasses import dataclass

import numpy as np

from .coding import CodedFrame, Interleaver, encode_and_interleave
from .modulation import Constellation, SymbolBlock, constellation_for, map_symbols
from .spreading import ChipFrame, WalshMatrix, spread_and_sum, walsh_matrix
from .system_config import SystemConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransmitFrame:
    """Everything the transmitter produced for one frame"""

    info_bits: np.ndarray
    coded: CodedFrame
    symbols: SymbolBlock
    chips: ChipFrame


class TransmitChain:
    """Encoder, interleaver, mapper and spreader bound to one configuration"""

    def __init__(self, cfg: SystemConfig):
        self.cfg = cfg
        self.interleaver = Interleaver.for_config(cfg)
        self.walsh: WalshMatrix = walsh_matrix(cfg.spreading_factor, cfg.n_codes)
        self.constellation: Constellation = constellation_for(cfg)

    def build(self, info_bits: np.ndarray) -> TransmitFrame:
        coded = encode_and_interleave(info_bits, self.cfg, self.interleaver)
        symbols = map_symbols(coded, self.cfg)
        chips = spread_and_sum(symbols, self.walsh, self.cfg)
        return TransmitFrame(info_bits=np.asarray(info_bits, dtype=np.uint8), coded=coded,
                             symbols=symbols, chips=chips)

    def random_frame(self, rng: np.random.Generator) -> TransmitFrame:
        """Frame carrying uniformly random information bits"""
        info_bits = rng.integers(0, 2, size=self.cfg.info_bits, dtype=np.uint8)
        return self.build(info_bits)

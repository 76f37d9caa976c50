"""
Base receiver class for the Chase-ARQ link
Provides the per-frame bookkeeping shared by all combining receivers
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from core.channel.fading import ChannelFrequencyResponse, ChannelRealization
from core.combiner.meter import ComplexityMeter
from core.decoder.maxlog_map import MaxLogMapDecoder
from core.txchain.frame import TransmitChain, TransmitFrame
from core.txchain.system_config import SystemConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoundObservation:
    """What the receiver sees in ARQ round k"""

    round_index: int
    y_f: np.ndarray                         # (T_c, N_R) CP-removed, DFT'd samples
    channel: ChannelRealization
    response: ChannelFrequencyResponse
    sigma2: float


@dataclass(frozen=True)
class RoundResult:
    """Decoder verdict after one ARQ round"""

    round_index: int
    info_bits: np.ndarray
    success: bool
    iterations: int
    extrinsic: np.ndarray                   # last demapper output, (N_T, T_s, M)


class BaseReceiver(ABC):
    """
    Abstract base class for Chase-combining receivers

    Provides common functionality:
    - transmit-side tables (interleaver, Walsh codes, constellation) and the SISO decoder
    - genie ACK/NACK against the transmitted info bits
    - per-round logging
    """

    kind = 'base'

    def __init__(self, cfg: SystemConfig, meter: Optional[ComplexityMeter] = None):
        self.cfg = cfg
        self.meter = meter if meter is not None else ComplexityMeter()
        chain = TransmitChain(cfg)
        self.interleaver = chain.interleaver
        self.walsh = chain.walsh
        self.constellation = chain.constellation
        self.decoder = MaxLogMapDecoder(cfg.info_bits, cfg.generators, cfg.constraint_length)
        self.frame: Optional[TransmitFrame] = None
        self.genie_rng: Optional[np.random.Generator] = None
        self.round_log: List[Dict[str, Any]] = []
        self.reset_state()

    def start_frame(self, frame: TransmitFrame, genie_rng: Optional[np.random.Generator] = None) -> None:
        """
        Reset all accumulated state for a new frame

        Args:
            frame: transmitted frame, used only for error detection (and by genie receivers)
            genie_rng: stream for genie-side randomness
        """
        self.frame = frame
        self.genie_rng = genie_rng
        self.round_log.clear()
        self.reset_state()

    def log_round(self, result: RoundResult) -> None:
        entry = {
            'round': result.round_index,
            'success': result.success,
            'iterations': result.iterations,
        }
        self.round_log.append(entry)
        logger.debug(f"{self.kind}: round {result.round_index} "
                     f"{'ACK' if result.success else 'NACK'} after {result.iterations} iteration(s)")

    def decode_llrs(self, extrinsic: np.ndarray):
        """Deinterleave demapper output and run the SISO decoder"""
        coded = self.interleaver.deinterleave(extrinsic.reshape(-1))
        return self.decoder.decode(coded)

    def to_apriori(self, decoder_extrinsic: np.ndarray) -> np.ndarray:
        """Interleave decoder extrinsic LLRs back into the (N_T, T_s, M) layout"""
        cfg = self.cfg
        return self.interleaver.interleave(decoder_extrinsic).reshape(
            cfg.n_tx, cfg.symbols_per_antenna, cfg.bits_per_symbol)

    def is_correct(self, info_bits: np.ndarray) -> bool:
        return self.frame is not None and bool(np.array_equal(info_bits, self.frame.info_bits))

    @abstractmethod
    def reset_state(self) -> None:
        """Clear the combining state"""

    @abstractmethod
    def process_round(self, observation: RoundObservation) -> RoundResult:
        """
        Combine round k with earlier rounds and decode

        Args:
            observation: received samples and channel knowledge of round k

        Returns:
            RoundResult: decisions and the genie ACK
        """

    @abstractmethod
    def state_size_reals(self) -> int:
        """Number of real values the combining state holds"""

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(kind={self.kind})"

    def __repr__(self) -> str:
        return (f"{self.__class__.__name__}(kind={self.kind}, N_T={self.cfg.n_tx}, N_R={self.cfg.n_rx}, "
                f"C={self.cfg.n_codes}, K={self.cfg.max_rounds}, rounds_logged={len(self.round_log)})")

"""
One Chase-ARQ frame: transmit, propagate round after round, combine and decode
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from core.channel.fading import ChannelProcess, cfr
from core.channel.propagation import NoiseModel, propagate, remove_cp_and_dft, sigma_from_ecn0
from core.combiner.meter import ComplexityMeter
from core.receivers import BaseReceiver, RoundObservation, get_receiver
from core.txchain.frame import TransmitChain
from core.txchain.system_config import SystemConfig
from .outcome import ArqOutcome

logger = logging.getLogger(__name__)

SeedLike = Union[int, Sequence[int], np.random.SeedSequence]


@dataclass(frozen=True)
class FrameStreams:
    """Independent random streams of one frame"""

    bits: np.random.Generator
    channel: np.random.Generator
    noise: np.random.Generator
    genie: np.random.Generator

    @classmethod
    def from_seed(cls, seed: SeedLike) -> "FrameStreams":
        sequence = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
        bits, channel, noise, genie = (np.random.default_rng(s) for s in sequence.spawn(4))
        return cls(bits=bits, channel=channel, noise=noise, genie=genie)


def frame_seed(master_seed: int, point_index: int, frame_index: int) -> np.random.SeedSequence:
    """Seed of frame frame_index at SNR point point_index, independent of worker layout"""
    return np.random.SeedSequence([master_seed, point_index, frame_index])


class ArqSimulator:
    """Transmit chain and receiver bound to one configuration, reused across frames"""

    def __init__(self, cfg: SystemConfig, receiver: Optional[str] = None,
                 meter: Optional[ComplexityMeter] = None):
        self.cfg = cfg
        self.kind = receiver or cfg.receiver
        self.chain = TransmitChain(cfg)
        self.receiver: BaseReceiver = get_receiver(self.kind, cfg, meter)

    @property
    def meter(self) -> ComplexityMeter:
        return self.receiver.meter

    def run_frame(self, ecn0_db: float, seed: SeedLike) -> ArqOutcome:
        """
        Send one frame with up to K Chase retransmissions of the identical X'

        Args:
            ecn0_db: chip SNR E_c/N0 in dB
            seed: frame seed; bits, channel, noise and genie streams are spawned from it

        Returns:
            ArqOutcome: rounds spent and delivered rate
        """
        cfg = self.cfg
        streams = FrameStreams.from_seed(seed)
        frame = self.chain.random_frame(streams.bits)
        channels = ChannelProcess(cfg, streams.channel)
        noise = NoiseModel(sigma_from_ecn0(ecn0_db, cfg))
        self.receiver.start_frame(frame, streams.genie)

        for k in range(1, cfg.max_rounds + 1):
            h = channels.realization(k)
            received = propagate(frame.chips, h, noise, streams.noise)
            observation = RoundObservation(
                round_index=k,
                y_f=remove_cp_and_dft(received, cfg.cp_length),
                channel=h,
                response=cfr(h, cfg.chips_per_block),
                sigma2=noise.sigma2,
            )
            result = self.receiver.process_round(observation)
            if result.success:
                return ArqOutcome(rounds_used=k, success=True, delivered_rate=cfg.rate)
        return ArqOutcome(rounds_used=cfg.max_rounds, success=False, delivered_rate=0.0)


def run_frame(cfg: SystemConfig, ecn0_db: float, seed: SeedLike, receiver: Optional[str] = None) -> ArqOutcome:
    """Functional form of ArqSimulator.run_frame"""
    return ArqSimulator(cfg, receiver).run_frame(ecn0_db, seed)

"""
Quasi-static L-tap Rayleigh MIMO block fading and its frequency response
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.errors import ShapeMismatch
from core.txchain.system_config import SystemConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChannelRealization:
    """Taps H_l of one ARQ round, stored as (L, N_R, N_T)"""

    taps: np.ndarray
    round_index: int

    @property
    def n_taps(self) -> int:
        return self.taps.shape[0]

    @property
    def n_rx(self) -> int:
        return self.taps.shape[1]

    @property
    def n_tx(self) -> int:
        return self.taps.shape[2]


@dataclass(frozen=True)
class ChannelFrequencyResponse:
    """Lambda_i for every bin, stored as (T_c, N_R, N_T)"""

    bins: np.ndarray
    round_index: int

    @property
    def n_bins(self) -> int:
        return self.bins.shape[0]


def draw_channel(cfg: SystemConfig, rng: np.random.Generator, round_index: int) -> ChannelRealization:
    """
    Draw i.i.d. CN(0, 1/L) taps so each receive antenna collects N_T in expectation

    Args:
        cfg: link configuration (L, N_R, N_T)
        rng: stream dedicated to channel draws
        round_index: ARQ round k (1-based)
    """
    shape = (cfg.n_taps, cfg.n_rx, cfg.n_tx)
    scale = np.sqrt(1.0 / (2.0 * cfg.n_taps))
    taps = scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))
    return ChannelRealization(taps=taps, round_index=round_index)


def cfr(h: ChannelRealization, n_chips: int) -> ChannelFrequencyResponse:
    """
    Lambda_i = sum_l H_l exp(-j 2 pi i l / T_c), evaluated for i = 0..T_c-1

    Raises:
        ShapeMismatch: if T_c < L
    """
    if n_chips < h.n_taps:
        raise ShapeMismatch(f"T_c={n_chips} shorter than the channel (L={h.n_taps})")
    return ChannelFrequencyResponse(bins=np.fft.fft(h.taps, n=n_chips, axis=0), round_index=h.round_index)


def taps_from_cfr(response: ChannelFrequencyResponse, n_taps: int) -> np.ndarray:
    """Inverse of cfr: unnormalised IDFT over bins, truncated to n_taps"""
    return np.fft.ifft(response.bins, axis=0)[:n_taps]


class ChannelProcess:
    """
    Per-frame sequence of round channels

    short-term: independent redraw every round; long-term: the round-1 draw is
    reused for the whole frame.
    """

    def __init__(self, cfg: SystemConfig, rng: np.random.Generator):
        self.cfg = cfg
        self.rng = rng
        self._first = None

    def realization(self, round_index: int) -> ChannelRealization:
        if self.cfg.channel_dynamic == 'long-term':
            if self._first is None:
                self._first = draw_channel(self.cfg, self.rng, 1)
            return ChannelRealization(taps=self._first.taps, round_index=round_index)
        return draw_channel(self.cfg, self.rng, round_index)

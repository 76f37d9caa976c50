"""
Time-domain propagation with AWGN, CP removal and the E_c/N0 mapping
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.errors import CpTooShort, ShapeMismatch
from core.numerics.block_dft import dft_blocks
from core.txchain.spreading import ChipFrame
from core.txchain.system_config import SystemConfig
from .fading import ChannelRealization

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoiseModel:
    """Complex noise variance sigma^2 (real + imaginary parts together)"""

    sigma2: float

    def __post_init__(self):
        if not self.sigma2 > 0.0:
            raise ValueError(f"Noise variance must be positive, got {self.sigma2}")

    def sample(self, rng: np.random.Generator, shape) -> np.ndarray:
        scale = np.sqrt(self.sigma2 / 2.0)
        return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def sigma_from_ecn0(ecn0_db: float, cfg: SystemConfig) -> float:
    """
    sigma^2 = N_T * 10^(-Ec/N0 / 10)

    Unit chip energy per transmit antenna and N_T of channel energy per receive
    antenna put N_T of signal energy per chip on every receive antenna.
    """
    if not np.isfinite(ecn0_db):
        raise ValueError(f"Ec/N0 must be finite, got {ecn0_db}")
    return cfg.n_tx * 10.0 ** (-ecn0_db / 10.0)


def propagate(x_prime: ChipFrame, h: ChannelRealization, noise: Optional[NoiseModel],
              rng: np.random.Generator) -> np.ndarray:
    """
    Linear convolution of X' with the taps plus CN(0, sigma^2) noise (none if noise is None)

    Returns:
        np.ndarray: (N_R, T_c + T_CP) received samples

    Raises:
        CpTooShort: if T_CP < L - 1
    """
    if x_prime.cp_length < h.n_taps - 1:
        raise CpTooShort(f"T_CP={x_prime.cp_length} < L-1={h.n_taps - 1}")
    transmitted = x_prime.with_prefix
    n_tx, length = transmitted.shape
    if n_tx != h.n_tx:
        raise ShapeMismatch(f"Chip frame has {n_tx} antennas, channel expects {h.n_tx}")

    received = np.zeros((h.n_rx, length), dtype=complex)
    for r in range(h.n_rx):
        for t in range(n_tx):
            received[r] += np.convolve(transmitted[t], h.taps[:, r, t])[:length]
    if noise is None:
        return received
    return received + noise.sample(rng, received.shape)


def remove_cp_and_dft(received: np.ndarray, cp_length: int) -> np.ndarray:
    """
    Drop the CP and apply the unitary block DFT

    Returns:
        np.ndarray: y_f as (T_c, N_R), row i is y_{f_i}
    """
    return dft_blocks(np.asarray(received)[:, cp_length:].T)

"""
Decoder feedback converted into chip-level statistics
Soft symbols, conditional chip means and the time-averaged chip covariance.
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.errors import ShapeMismatch
from core.txchain.spreading import WalshMatrix, spread
from core.txchain.system_config import SystemConfig

logger = logging.getLogger(__name__)

VARIANCE_FLOOR = 1e-6


@dataclass(frozen=True)
class ChipPriors:
    """Conditional chip means x~ and variances sigma^2[t, i], both (N_T, T_c)"""

    mean: np.ndarray
    variance: np.ndarray
    soft_symbols: np.ndarray    # (N_T, T_s)

    @property
    def average_variance(self) -> np.ndarray:
        """Diagonal of Xi~, the per-antenna time average of the chip variances"""
        return self.variance.mean(axis=1)

    @property
    def average_covariance(self) -> np.ndarray:
        return np.diag(self.average_variance)


def soft_symbols_from_llrs(apriori: np.ndarray, energy: float) -> np.ndarray:
    """
    E[s] under bitwise independent priors for Gray QPSK

    With LLR = log P(0)/P(1), E[1 - 2b] = tanh(LLR / 2), so each quadrature
    component is sqrt(E_s/2) * tanh(LLR_m / 2). Saturated (infinite) LLRs are allowed.
    """
    apriori = np.asarray(apriori, dtype=float)
    if apriori.shape[-1] != 2:
        raise ShapeMismatch(f"Soft QPSK symbols need M=2 LLRs per symbol, got {apriori.shape[-1]}")
    soft_bits = np.tanh(apriori / 2.0)
    return np.sqrt(energy / 2.0) * (soft_bits[..., 0] + 1j * soft_bits[..., 1])


def chip_priors_from_llrs(apriori: np.ndarray, walsh: WalshMatrix, cfg: SystemConfig) -> ChipPriors:
    """
    Soft replica of the transmitted chips and their per-chip uncertainty

    Args:
        apriori: (N_T, T_s, M) a-priori LLRs of the interleaved bits
        walsh: spreading codes of the frame
        cfg: link configuration

    Returns:
        ChipPriors: x~ = spread soft symbols; sigma^2[t, i] = (1/N) sum_n (E_s - |s~|^2)
            over the codes of the spreading period holding chip i, clamped to [1e-6, 1]
    """
    expected = (cfg.n_tx, cfg.symbols_per_antenna, cfg.bits_per_symbol)
    if np.shape(apriori) != expected:
        raise ShapeMismatch(f"A-priori LLR frame shape {np.shape(apriori)}, expected {expected}")

    energy = cfg.symbol_energy
    soft = soft_symbols_from_llrs(apriori, energy)
    mean = spread(soft, walsh)

    residual = energy - np.abs(soft) ** 2
    per_period = residual.reshape(cfg.n_tx, cfg.symbol_periods, cfg.n_codes).sum(axis=2) / cfg.spreading_factor
    variance = np.repeat(per_period, cfg.spreading_factor, axis=1)
    variance = np.clip(variance, VARIANCE_FLOOR, 1.0)
    return ChipPriors(mean=mean, variance=variance, soft_symbols=soft)

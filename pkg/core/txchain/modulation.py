"""
Gray-labelled QPSK mapping and the bit-labelling operator
"""

from dataclasses import dataclass

import numpy as np

from core.errors import UnsupportedModulation
from .coding import CodedFrame
from .system_config import SystemConfig


@dataclass(frozen=True)
class Constellation:
    """Points sqrt(E_s) * S and their bit labels lambda_m{s}"""

    points: np.ndarray      # (2^M,) complex
    labels: np.ndarray      # (2^M, M) bits
    energy: float

    @property
    def order(self) -> int:
        return self.points.shape[0]

    @property
    def bits_per_symbol(self) -> int:
        return self.labels.shape[1]

    def label(self, point_index: int, m: int) -> int:
        """lambda_m{s}: bit m of the label of point s"""
        return int(self.labels[point_index, m])


@dataclass(frozen=True)
class SymbolBlock:
    """Per-antenna symbol streams s[t, j] and their energy"""

    symbols: np.ndarray     # (N_T, T_s) complex
    energy: float


def qpsk_constellation(energy: float = 1.0) -> Constellation:
    """Gray QPSK: (b1, b2) -> sqrt(E_s/2) * ((1 - 2 b1) + j (1 - 2 b2))"""
    labels = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=np.uint8)
    signs = 1.0 - 2.0 * labels
    points = np.sqrt(energy / 2.0) * (signs[:, 0] + 1j * signs[:, 1])
    return Constellation(points=points, labels=labels, energy=energy)


def constellation_for(cfg: SystemConfig) -> Constellation:
    if cfg.bits_per_symbol != 2:
        raise UnsupportedModulation(f"Only QPSK (M=2) is mapped, got M={cfg.bits_per_symbol}")
    return qpsk_constellation(cfg.symbol_energy)


def map_bits(bits: np.ndarray, energy: float) -> np.ndarray:
    """Map a (..., 2) bit array to QPSK symbols of energy E_s"""
    bits = np.asarray(bits, dtype=float)
    signs = 1.0 - 2.0 * bits
    return np.sqrt(energy / 2.0) * (signs[..., 0] + 1j * signs[..., 1])


def map_symbols(coded: CodedFrame, cfg: SystemConfig) -> SymbolBlock:
    """
    Gray-map each antenna sub-stream onto sqrt(E_s) * QPSK with E_s = N / C

    Raises:
        UnsupportedModulation: for M != 2
    """
    if cfg.bits_per_symbol != 2:
        raise UnsupportedModulation(f"Only QPSK (M=2) is mapped, got M={cfg.bits_per_symbol}")
    return SymbolBlock(symbols=map_bits(coded.bits, cfg.symbol_energy), energy=cfg.symbol_energy)

"""
Walsh spreading, code summation and cyclic prefix
Symbol j of antenna t rides code (j mod C) during spreading period floor(j / C).
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from core.errors import BadSpreadingFactor, ShapeMismatch
from .modulation import SymbolBlock
from .system_config import SystemConfig


@dataclass(frozen=True)
class WalshMatrix:
    """N x C matrix of orthonormal Walsh codes, entries +-1/sqrt(N)"""

    W: np.ndarray

    @property
    def spreading_factor(self) -> int:
        return self.W.shape[0]

    @property
    def n_codes(self) -> int:
        return self.W.shape[1]


@dataclass(frozen=True)
class ChipFrame:
    """Chip matrix X (N_T x T_c) and its CP-extended form X' (N_T x (T_c + T_CP))"""

    chips: np.ndarray
    with_prefix: np.ndarray
    cp_length: int

    @property
    def n_chips(self) -> int:
        return self.chips.shape[1]


def walsh_matrix(N: int, C: int) -> WalshMatrix:
    """
    First C columns of the N x N Sylvester-Hadamard matrix, scaled by 1/sqrt(N)

    Raises:
        BadSpreadingFactor: if N is not a power of two or C is out of [1, N]
    """
    if N < 1 or (N & (N - 1)) != 0:
        raise BadSpreadingFactor(f"Spreading factor must be a power of two, got {N}")
    if not 1 <= C <= N:
        raise BadSpreadingFactor(f"Code count must satisfy 1 <= C <= N={N}, got {C}")
    W = scipy.linalg.hadamard(N).astype(float)[:, :C] / np.sqrt(N)
    W.setflags(write=False)
    return WalshMatrix(W=W)


def spread(symbols: np.ndarray, walsh: WalshMatrix) -> np.ndarray:
    """
    x[t, q*N + p] = sum_n s[t, q*C + n] * W[p, n]

    Args:
        symbols: (N_T, T_s) symbols, T_s divisible by C

    Returns:
        np.ndarray: (N_T, T_s * N / C) chips
    """
    symbols = np.asarray(symbols)
    n_tx, n_symbols = symbols.shape
    C = walsh.n_codes
    if n_symbols % C != 0:
        raise ShapeMismatch(f"T_s={n_symbols} is not divisible by C={C}")
    periods = symbols.reshape(n_tx, n_symbols // C, C)
    return (periods @ walsh.W.T).reshape(n_tx, -1)


def despread(chips: np.ndarray, walsh: WalshMatrix) -> np.ndarray:
    """Correlate every spreading period with each code: inverse of spread"""
    chips = np.asarray(chips)
    n_tx, n_chips = chips.shape
    N = walsh.spreading_factor
    if n_chips % N != 0:
        raise ShapeMismatch(f"T_c={n_chips} is not a multiple of N={N}")
    periods = chips.reshape(n_tx, n_chips // N, N)
    return (periods @ walsh.W).reshape(n_tx, -1)


def add_cyclic_prefix(chips: np.ndarray, cp_length: int) -> np.ndarray:
    """X' = [X[:, T_c - T_CP:], X]"""
    if cp_length == 0:
        return np.array(chips, copy=True)
    return np.concatenate([chips[:, -cp_length:], chips], axis=1)


def spread_and_sum(symbols: SymbolBlock, walsh: WalshMatrix, cfg: SystemConfig) -> ChipFrame:
    """
    Spread each antenna's symbols with Walsh codes, sum the code streams and append the CP

    Raises:
        ShapeMismatch: if the symbol block does not match cfg
    """
    expected = (cfg.n_tx, cfg.symbols_per_antenna)
    if symbols.symbols.shape != expected:
        raise ShapeMismatch(f"Symbol block shape {symbols.symbols.shape}, expected {expected}")
    if walsh.W.shape != (cfg.spreading_factor, cfg.n_codes):
        raise ShapeMismatch(f"Walsh matrix shape {walsh.W.shape} does not match N={cfg.spreading_factor}, "
                            f"C={cfg.n_codes}")
    chips = spread(symbols.symbols, walsh)
    return ChipFrame(chips=chips, with_prefix=add_cyclic_prefix(chips, cfg.cp_length), cp_length=cfg.cp_length)

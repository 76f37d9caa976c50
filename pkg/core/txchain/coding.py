"""
Channel coding for the transmit chain
Zero-terminated rate-1/2 convolutional encoding, seeded interleaving and
serial-to-parallel split over the transmit antennas.
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.decoder.trellis import generator_taps
from core.errors import BadLength
from .system_config import SystemConfig

logger = logging.getLogger(__name__)


class Interleaver:
    """Seeded Fisher-Yates permutation over all coded-bit positions"""

    def __init__(self, size: int, seed: int):
        self.size = size
        self.seed = seed
        self.permutation = np.random.default_rng(seed).permutation(size)
        self.permutation.setflags(write=False)

    def interleave(self, values: np.ndarray) -> np.ndarray:
        """b[i] = c[pi[i]]"""
        values = np.asarray(values)
        if values.shape[0] != self.size:
            raise BadLength(f"Interleaver expects {self.size} values, got {values.shape[0]}")
        return values[self.permutation]

    def deinterleave(self, values: np.ndarray) -> np.ndarray:
        """Inverse of interleave"""
        values = np.asarray(values)
        if values.shape[0] != self.size:
            raise BadLength(f"Deinterleaver expects {self.size} values, got {values.shape[0]}")
        out = np.empty_like(values)
        out[self.permutation] = values
        return out

    @classmethod
    def for_config(cls, cfg: SystemConfig) -> "Interleaver":
        return cls(cfg.coded_bits, cfg.interleaver_seed)


@dataclass(frozen=True)
class CodedFrame:
    """Coded and interleaved frame split into per-antenna sub-streams"""

    substreams: np.ndarray      # (N_T, M * T_s) bits
    permutation: np.ndarray
    codeword: np.ndarray        # pre-interleaving coded stream
    bits_per_symbol: int = 2

    @property
    def bits(self) -> np.ndarray:
        """(N_T, T_s, M) view, b[t, j, m]"""
        return self.substreams.reshape(self.substreams.shape[0], -1, self.bits_per_symbol)


def convolutional_encode(info_bits: np.ndarray, cfg: SystemConfig) -> np.ndarray:
    """
    Encode info bits followed by constraint_length-1 zero tail bits

    Returns:
        np.ndarray: codeword before interleaving (c1_0, c2_0, c1_1, c2_1, ...)
    """
    info_bits = np.asarray(info_bits, dtype=np.uint8)
    if info_bits.ndim != 1 or info_bits.shape[0] != cfg.info_bits:
        raise BadLength(f"Expected {cfg.info_bits} info bits, got shape {info_bits.shape}")
    message = np.concatenate([info_bits, np.zeros(cfg.tail_bits, dtype=np.uint8)]).astype(np.int64)
    streams = []
    for generator in cfg.generators:
        taps = generator_taps(generator, cfg.constraint_length).astype(np.int64)
        streams.append(np.convolve(message, taps)[: message.shape[0]] % 2)
    return np.stack(streams, axis=1).reshape(-1).astype(np.uint8)


def split_substreams(bits: np.ndarray, cfg: SystemConfig) -> np.ndarray:
    """Serial-to-parallel: contiguous blocks of M*T_s bits per antenna"""
    return np.asarray(bits).reshape(cfg.n_tx, cfg.bits_per_symbol * cfg.symbols_per_antenna)


def encode_and_interleave(info_bits: np.ndarray, cfg: SystemConfig,
                          interleaver: Interleaver = None) -> CodedFrame:
    """
    Encode, interleave and split a frame over the transmit antennas

    Args:
        info_bits: cfg.info_bits information bits
        cfg: link configuration
        interleaver: optional prebuilt interleaver (built from cfg otherwise)

    Returns:
        CodedFrame: per-antenna sub-streams plus the permutation used

    Raises:
        BadLength: if the info block does not match cfg
    """
    interleaver = interleaver or Interleaver.for_config(cfg)
    codeword = convolutional_encode(info_bits, cfg)
    if codeword.shape[0] != cfg.coded_bits:
        raise BadLength(f"Codeword has {codeword.shape[0]} bits, frame holds {cfg.coded_bits}")
    interleaved = interleaver.interleave(codeword)
    return CodedFrame(
        substreams=split_substreams(interleaved, cfg),
        permutation=interleaver.permutation,
        codeword=codeword,
        bits_per_symbol=cfg.bits_per_symbol,
    )

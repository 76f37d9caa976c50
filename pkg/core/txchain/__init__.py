"""
Transmit chain: coding, interleaving, QPSK mapping, Walsh spreading, CP
"""

from .coding import CodedFrame, Interleaver, convolutional_encode, encode_and_interleave
from .frame import TransmitChain, TransmitFrame
from .modulation import Constellation, SymbolBlock, constellation_for, map_bits, map_symbols, qpsk_constellation
from .spreading import (
    ChipFrame,
    WalshMatrix,
    add_cyclic_prefix,
    despread,
    spread,
    spread_and_sum,
    walsh_matrix,
)
from .system_config import SystemConfig

__all__ = [
    'SystemConfig', 'CodedFrame', 'Interleaver', 'convolutional_encode', 'encode_and_interleave',
    'Constellation', 'SymbolBlock', 'qpsk_constellation', 'constellation_for', 'map_bits', 'map_symbols',
    'WalshMatrix', 'ChipFrame', 'walsh_matrix', 'spread', 'despread', 'add_cyclic_prefix',
    'spread_and_sum', 'TransmitChain', 'TransmitFrame',
]

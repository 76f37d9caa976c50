"""
Block DFT and per-bin Hermitian linear algebra
"""

from .block_dft import (
    ComplexBlockVector,
    block_dft,
    block_idft,
    dft_blocks,
    direct_dft_blocks,
    idft_blocks,
)
from .hermitian import hermitian_gram, hermitian_inverse, hermitian_solve, is_hermitian

__all__ = [
    'ComplexBlockVector', 'block_dft', 'block_idft', 'dft_blocks', 'idft_blocks',
    'direct_dft_blocks', 'hermitian_solve', 'hermitian_inverse', 'hermitian_gram', 'is_hermitian',
]

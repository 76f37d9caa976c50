"""
Block DFT / IDFT with the U_{T,N} = U_T (x) I_N convention
A length-T*N vector holds T consecutive sub-vectors of width N; one unitary
length-T DFT is applied per sub-channel index.
"""

from dataclasses import dataclass

import numpy as np

from core.errors import ShapeMismatch


@dataclass(frozen=True)
class ComplexBlockVector:
    """T stacked complex sub-vectors of width N, flattened block-major"""

    data: np.ndarray
    T: int
    N: int

    def __post_init__(self):
        if self.T < 1 or self.N < 1:
            raise ShapeMismatch(f"Block vector needs T >= 1 and N >= 1, got T={self.T}, N={self.N}")
        if np.asarray(self.data).shape != (self.T * self.N,):
            raise ShapeMismatch(
                f"Block vector data must have length T*N={self.T * self.N}, "
                f"got shape {np.asarray(self.data).shape}"
            )

    @classmethod
    def from_blocks(cls, blocks: np.ndarray) -> "ComplexBlockVector":
        """Build from a (T, N) array whose row f is sub-vector f"""
        blocks = np.asarray(blocks, dtype=complex)
        if blocks.ndim != 2:
            raise ShapeMismatch(f"Expected a (T, N) array, got shape {blocks.shape}")
        T, N = blocks.shape
        return cls(data=blocks.reshape(T * N), T=T, N=N)

    @property
    def blocks(self) -> np.ndarray:
        """(T, N) view: entry [f, t] is data[f*N + t]"""
        return np.asarray(self.data).reshape(self.T, self.N)

    def norm(self) -> float:
        return float(np.linalg.norm(self.data))


def dft_blocks(blocks: np.ndarray) -> np.ndarray:
    """Unitary DFT along axis 0 of a (T, ...) array"""
    return np.fft.fft(blocks, axis=0, norm="ortho")


def idft_blocks(blocks: np.ndarray) -> np.ndarray:
    """Unitary inverse DFT along axis 0 of a (T, ...) array"""
    return np.fft.ifft(blocks, axis=0, norm="ortho")


def direct_dft_blocks(blocks: np.ndarray, inverse: bool = False) -> np.ndarray:
    """O(T^2) summation form of dft_blocks, kept as a reference"""
    blocks = np.asarray(blocks, dtype=complex)
    T = blocks.shape[0]
    sign = 1.0 if inverse else -1.0
    idx = np.arange(T)
    kernel = np.exp(sign * 2j * np.pi * np.outer(idx, idx) / T) / np.sqrt(T)
    return np.tensordot(kernel, blocks, axes=(1, 0))


def block_dft(x: ComplexBlockVector, method: str = "fft") -> ComplexBlockVector:
    """
    Apply U_{T,N}: output[f*N + t] = T^{-1/2} sum_i x[i*N + t] exp(-j 2 pi f i / T)

    Args:
        x: input block vector
        method: "fft" (fast transform, any T) or "direct" (summation)

    Returns:
        ComplexBlockVector: transformed vector with the same (T, N)
    """
    if method == "direct":
        out = direct_dft_blocks(x.blocks)
    else:
        out = dft_blocks(x.blocks)
    return ComplexBlockVector.from_blocks(out)


def block_idft(x_f: ComplexBlockVector, method: str = "fft") -> ComplexBlockVector:
    """Exact inverse of block_dft (U_{T,N}^H)"""
    if method == "direct":
        out = direct_dft_blocks(x_f.blocks, inverse=True)
    else:
        out = idft_blocks(x_f.blocks)
    return ComplexBlockVector.from_blocks(out)

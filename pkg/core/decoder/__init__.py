"""
SISO decoding of the rate-1/2 convolutional code
"""

from .maxlog_map import DecoderOutput, MaxLogMapDecoder, maxlog_decode
from .trellis import Trellis, build_trellis, generator_taps
from .viterbi import viterbi_decode

__all__ = [
    'Trellis', 'build_trellis', 'generator_taps', 'MaxLogMapDecoder', 'DecoderOutput',
    'maxlog_decode', 'viterbi_decode',
]

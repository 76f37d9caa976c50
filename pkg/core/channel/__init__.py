"""
Block-fading MIMO channel, propagation and noise
"""

from .fading import (
    ChannelFrequencyResponse,
    ChannelProcess,
    ChannelRealization,
    cfr,
    draw_channel,
    taps_from_cfr,
)
from .propagation import NoiseModel, propagate, remove_cp_and_dft, sigma_from_ecn0

__all__ = [
    'ChannelRealization', 'ChannelFrequencyResponse', 'ChannelProcess', 'draw_channel', 'cfr',
    'taps_from_cfr', 'NoiseModel', 'propagate', 'remove_cp_and_dft', 'sigma_from_ecn0',
]

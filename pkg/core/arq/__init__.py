"""
Chase-ARQ protocol loop, throughput statistics and Monte-Carlo sweeps
"""

from .analysis import high_snr_slope, snr_at_throughput, throughput_gap_db
from .outcome import ArqOutcome, ThroughputStats
from .simulator import ArqSimulator, FrameStreams, frame_seed, run_frame
from .sweep import measure_combining_cost, mfb_reference, run_point, run_sweep

__all__ = [
    'ArqOutcome', 'ThroughputStats', 'ArqSimulator', 'FrameStreams', 'frame_seed', 'run_frame',
    'run_point', 'run_sweep', 'mfb_reference', 'measure_combining_cost',
    'snr_at_throughput', 'throughput_gap_db', 'high_snr_slope',
]

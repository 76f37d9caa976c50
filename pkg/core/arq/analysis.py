"""
Throughput curve comparisons: SNR at a target eta, horizontal gaps, high-SNR slope
"""

import logging
from typing import Optional, Sequence

import numpy as np

logger = logging.getLogger(__name__)


def snr_at_throughput(ecn0_db: Sequence[float], eta: Sequence[float], target: float) -> Optional[float]:
    """
    E_c/N0 where the curve first reaches target, by linear interpolation

    Returns:
        Optional[float]: None if the curve never reaches target
    """
    x = np.asarray(ecn0_db, dtype=float)
    y = np.asarray(eta, dtype=float)
    if y.size == 0:
        return None
    if y[0] >= target:
        return float(x[0])
    above = np.nonzero(y >= target)[0]
    if above.size == 0:
        return None
    i = int(above[0])
    x0, x1, y0, y1 = x[i - 1], x[i], y[i - 1], y[i]
    if y1 == y0:
        return float(x1)
    return float(x0 + (target - y0) * (x1 - x0) / (y1 - y0))


def throughput_gap_db(reference_db: Sequence[float], reference_eta: Sequence[float],
                      other_db: Sequence[float], other_eta: Sequence[float], target: float) -> Optional[float]:
    """SNR of the other curve minus SNR of the reference curve at target (positive: reference is better)"""
    ref = snr_at_throughput(reference_db, reference_eta, target)
    other = snr_at_throughput(other_db, other_eta, target)
    if ref is None or other is None:
        logger.warning(f"Target eta={target} not reached by both curves")
        return None
    return other - ref


def high_snr_slope(ecn0_db: Sequence[float], eta: Sequence[float], rate: float,
                   points: int = 4, floor: float = 1e-6) -> Optional[float]:
    """
    dB needed per decade of throughput loss (R - eta) over the last points of the curve

    Fits log10(R - eta) against E_c/N0 over the highest `points` grid points with
    a positive loss and returns -1 / slope.
    """
    x = np.asarray(ecn0_db, dtype=float)
    loss = rate - np.asarray(eta, dtype=float)
    usable = np.nonzero(loss > floor)[0][-points:]
    if usable.size < 2:
        return None
    slope = np.polyfit(x[usable], np.log10(loss[usable]), 1)[0]
    if slope >= 0:
        return None
    return float(-1.0 / slope)

"""
Soft demapping of despread symbols into extrinsic bit LLRs
LLR convention: log P(b=0) / P(b=1).
"""

import numpy as np
from scipy.special import logsumexp

from core.errors import ShapeMismatch
from core.txchain.modulation import Constellation
from .despreader import DespreadOutput

LLR_CAP = 50.0


def symbol_metrics(d: DespreadOutput, constellation: Constellation) -> np.ndarray:
    """xi[t, j, s] = -|r[t, j] - g[t, j] s|^2 / theta2[t, j], shape (N_T, T_s, 2^M)"""
    distance = d.r[..., None] - d.gain[..., None] * constellation.points
    return -np.abs(distance) ** 2 / d.theta2[..., None]


def _prior_terms(apriori: np.ndarray, constellation: Constellation) -> np.ndarray:
    """phi_m (1 - 2 lambda_m{s}) / 2 per bit and point, shape (N_T, T_s, 2^M, M)"""
    signs = 1.0 - 2.0 * constellation.labels.astype(float)
    return 0.5 * apriori[..., None, :] * signs


def demap_metrics(metrics: np.ndarray, apriori: np.ndarray, constellation: Constellation,
                  kind: str = 'exact', llr_cap: float = LLR_CAP) -> np.ndarray:
    """
    Extrinsic LLRs from per-point metrics and a-priori LLRs of the other bits

    Args:
        metrics: (N_T, T_s, 2^M) log-likelihood metrics
        apriori: (N_T, T_s, M) a-priori LLRs
        kind: 'exact' (log-sum-exp) or 'maxlog'

    Returns:
        np.ndarray: (N_T, T_s, M) extrinsic LLRs, capped at +-llr_cap
    """
    M = constellation.bits_per_symbol
    if metrics.shape[-1] != constellation.order or apriori.shape != metrics.shape[:-1] + (M,):
        raise ShapeMismatch(f"Metrics {metrics.shape} and a-priori LLRs {apriori.shape} "
                            f"do not fit a {constellation.order}-point constellation")
    if kind not in ('exact', 'maxlog'):
        raise ValueError(f"Unknown demapper kind: {kind}")

    priors = _prior_terms(np.clip(apriori, -llr_cap, llr_cap), constellation)
    total = metrics + priors.sum(axis=-1)
    extrinsic = np.empty(apriori.shape)
    for m in range(M):
        score = total - priors[..., m]
        zero = constellation.labels[:, m] == 0
        if kind == 'maxlog':
            extrinsic[..., m] = score[..., zero].max(axis=-1) - score[..., ~zero].max(axis=-1)
        else:
            extrinsic[..., m] = logsumexp(score[..., zero], axis=-1) - logsumexp(score[..., ~zero], axis=-1)
    return np.clip(extrinsic, -llr_cap, llr_cap)


def demap_chip_level(d: DespreadOutput, apriori: np.ndarray, constellation: Constellation,
                     kind: str = 'exact') -> np.ndarray:
    """Single-metric demapping of one despread output"""
    return demap_metrics(symbol_metrics(d, constellation), apriori, constellation, kind)

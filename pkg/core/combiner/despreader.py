"""
Despreading of equalized chips and the equivalent per-symbol channel
"""

from dataclasses import dataclass

import numpy as np

from core.errors import ShapeMismatch
from core.txchain.spreading import WalshMatrix, despread

THETA_FLOOR = 1e-12


@dataclass(frozen=True)
class DespreadOutput:
    """r[t, j] = g[t, j] * s[t, j] + nu, nu of variance theta2[t, j]; all (N_T, T_s)"""

    r: np.ndarray
    gain: np.ndarray
    theta2: np.ndarray


def equivalent_gain_and_variance(upsilon: np.ndarray, average_variance: np.ndarray):
    """
    Per-antenna gain g_t = Re Upsilon_tt and residual variance

    theta2_t = g_t - g_t^2 Xi~_tt + sum_{t' != t} |Upsilon_tt'|^2 (1 - Xi~_t't'),
    the unconditional output variance minus the own-antenna aligned part plus the
    uncancelled cross-antenna mean. Reduces to g - g^2 for Xi~ = I.
    """
    gain = np.real(np.diag(upsilon)).copy()
    cross = np.abs(upsilon) ** 2
    np.fill_diagonal(cross, 0.0)
    theta2 = gain - gain ** 2 * average_variance + cross @ (1.0 - average_variance)
    return gain, np.maximum(theta2, THETA_FLOOR)


def despread_and_stat(z_time: np.ndarray, upsilon: np.ndarray, average_variance: np.ndarray,
                      walsh: WalshMatrix) -> DespreadOutput:
    """
    Correlate the equalized chips with each Walsh code

    Args:
        z_time: (N_T, T_c) time-domain equalizer output
        upsilon: (N_T, N_T) average filter-channel product
        average_variance: (N_T,) diagonal of Xi~

    Returns:
        DespreadOutput: symbol estimates with gains and variances broadcast over T_s
    """
    n_tx = z_time.shape[0]
    if upsilon.shape != (n_tx, n_tx):
        raise ShapeMismatch(f"Upsilon {upsilon.shape} does not match {n_tx} antennas")
    r = despread(z_time, walsh)
    gain, theta2 = equivalent_gain_and_variance(upsilon, np.asarray(average_variance, dtype=float))
    shape = r.shape
    return DespreadOutput(
        r=r,
        gain=np.broadcast_to(gain[:, None], shape).copy(),
        theta2=np.broadcast_to(theta2[:, None], shape).copy(),
    )

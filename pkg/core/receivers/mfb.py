"""
Matched filter bound: genie receiver free of inter-chip and co-antenna interference
"""

import logging

import numpy as np
import scipy.linalg

from core.combiner.demapper import demap_chip_level
from core.combiner.despreader import DespreadOutput
from core.errors import SimulationError
from .base_receiver import BaseReceiver, RoundObservation, RoundResult

logger = logging.getLogger(__name__)


def isolated_symbol_energy(taps: np.ndarray, walsh_codes: np.ndarray) -> np.ndarray:
    """
    Energy of one symbol's spread waveform after the channel, summed over receive antennas

    Args:
        taps: (L, N_R, N_T) channel taps
        walsh_codes: (N, C) spreading codes

    Returns:
        np.ndarray: (N_T, C) energies E[t, n] = sum_r ||h_rt * w_n||^2
    """
    n_taps, n_rx, n_tx = taps.shape
    N = walsh_codes.shape[0]
    energy = np.zeros((n_tx, walsh_codes.shape[1]))
    for t in range(n_tx):
        for r in range(n_rx):
            conv = scipy.linalg.convolution_matrix(taps[:, r, t], N, mode='full')
            energy[t] += np.sum(np.abs(conv @ walsh_codes) ** 2, axis=0)
    return energy


class MatchedFilterBoundReceiver(BaseReceiver):
    """
    Each symbol is observed alone through its own spread waveform

    Round k contributes r = E s + CN(0, sigma^2 E); maximal-ratio combining over
    rounds adds r and E. The combined observation is demapped and decoded once
    per round.
    """

    kind = 'mfb'

    def reset_state(self) -> None:
        shape = (self.cfg.n_tx, self.cfg.symbols_per_antenna)
        self.r = np.zeros(shape, dtype=complex)
        self.gain = np.zeros(shape)
        self.theta2 = np.zeros(shape)

    def genie_observation(self, observation: RoundObservation) -> DespreadOutput:
        """Round-k isolated-symbol outputs; uses the transmitted symbols and the genie stream"""
        if self.frame is None or self.genie_rng is None:
            raise SimulationError("Matched filter bound needs the transmitted frame and a genie stream")
        cfg = self.cfg
        energy = isolated_symbol_energy(observation.channel.taps, self.walsh.W)
        energy = np.tile(energy, (1, cfg.symbol_periods))
        symbols = self.frame.symbols.symbols
        scale = np.sqrt(observation.sigma2 * energy / 2.0)
        noise = scale * (self.genie_rng.standard_normal(symbols.shape)
                         + 1j * self.genie_rng.standard_normal(symbols.shape))
        return DespreadOutput(r=energy * symbols + noise, gain=energy, theta2=observation.sigma2 * energy)

    def process_round(self, observation: RoundObservation) -> RoundResult:
        cfg = self.cfg
        d = self.genie_observation(observation)
        self.r = self.r + d.r
        self.gain = self.gain + d.gain
        self.theta2 = self.theta2 + d.theta2
        combined = DespreadOutput(r=self.r, gain=self.gain, theta2=np.maximum(self.theta2, 1e-12))
        logger.debug(f"MFB round {observation.round_index}: mean combined energy {self.gain.mean():.3f}")

        apriori = np.zeros((cfg.n_tx, cfg.symbols_per_antenna, cfg.bits_per_symbol))
        extrinsic = demap_chip_level(combined, apriori, self.constellation, cfg.demapper)
        decoded = self.decode_llrs(extrinsic)
        result = RoundResult(round_index=observation.round_index, info_bits=decoded.info_bits,
                             success=self.is_correct(decoded.info_bits), iterations=1, extrinsic=extrinsic)
        self.log_round(result)
        return result

    def state_size_reals(self) -> int:
        return 2 * self.r.size + self.gain.size + self.theta2.size

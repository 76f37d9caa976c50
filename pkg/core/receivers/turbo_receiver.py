"""
Shared turbo schedule: equalize/demap, decode, feed extrinsic LLRs back
"""

import logging
from abc import abstractmethod

import numpy as np

from core.combiner.despreader import DespreadOutput, despread_and_stat
from core.combiner.filters import compute_filters, mmse_estimate
from core.combiner.priors import ChipPriors, chip_priors_from_llrs
from core.numerics.block_dft import dft_blocks, idft_blocks
from .base_receiver import BaseReceiver, RoundObservation, RoundResult

logger = logging.getLogger(__name__)


class TurboReceiver(BaseReceiver):
    """
    N_iter equalizer/decoder iterations per ARQ round

    A-priori LLRs restart from zero at the first iteration of every round.
    With early_stop, iterations end as soon as the decoded frame is correct.
    """

    def equalize(self, gram: np.ndarray, y_tilde: np.ndarray, priors: ChipPriors,
                 sigma2: float) -> DespreadOutput:
        """Filter, cancel, return to the time domain and despread"""
        average_variance = priors.average_variance
        filters = compute_filters(gram, average_variance, sigma2)
        x_prior_f = dft_blocks(priors.mean.T)
        z_f = mmse_estimate(filters, y_tilde, x_prior_f)
        z_time = idft_blocks(z_f).T
        return despread_and_stat(z_time, filters.upsilon, average_variance, self.walsh)

    @abstractmethod
    def absorb_round(self, observation: RoundObservation) -> None:
        """Fold round k's statistics into the receiver before iterating"""

    @abstractmethod
    def demap(self, observation: RoundObservation, apriori: np.ndarray) -> np.ndarray:
        """One equalizer pass: extrinsic (N_T, T_s, M) LLRs for the given a-priori LLRs"""

    def finish_round(self, observation: RoundObservation) -> None:
        """Hook run once the round's iterations are over"""

    def process_round(self, observation: RoundObservation) -> RoundResult:
        cfg = self.cfg
        self.absorb_round(observation)
        apriori = np.zeros((cfg.n_tx, cfg.symbols_per_antenna, cfg.bits_per_symbol))
        extrinsic = apriori
        info_bits = np.zeros(cfg.info_bits, dtype=np.uint8)
        success = False
        iterations = 0
        for iteration in range(cfg.n_iterations):
            iterations = iteration + 1
            extrinsic = self.demap(observation, apriori)
            decoded = self.decode_llrs(extrinsic)
            info_bits = decoded.info_bits
            success = self.is_correct(info_bits)
            if success and cfg.early_stop:
                break
            apriori = self.to_apriori(decoded.extrinsic)
        self.finish_round(observation)

        result = RoundResult(round_index=observation.round_index, info_bits=info_bits, success=success,
                             iterations=iterations, extrinsic=extrinsic)
        self.log_round(result)
        return result

    def priors_for(self, apriori: np.ndarray) -> ChipPriors:
        return chip_priors_from_llrs(apriori, self.walsh, self.cfg)

"""
Soft interference cancelling MMSE filters in the frequency domain
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.errors import ShapeMismatch
from core.numerics.hermitian import hermitian_inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EqualizerFilters:
    """Forward filters Gamma_i, backward filters Omega_i (both (T_c, N_T, N_T)) and Upsilon"""

    gamma: np.ndarray
    omega: np.ndarray
    upsilon: np.ndarray         # (N_T, N_T), average of Gamma_i D_i over all bins

    @property
    def n_bins(self) -> int:
        return self.gamma.shape[0]


def compute_filters(gram: np.ndarray, average_variance: np.ndarray, sigma2: float) -> EqualizerFilters:
    """
    Per-bin filters from the (accumulated) Gram matrices D_i

    Gamma_i = (1/sigma^2)(I - D_i C_i^-1) with C_i = sigma^2 Xi~^-1 + D_i, evaluated
    in the equivalent form Xi~^-1 C_i^-1 since C_i - D_i = sigma^2 Xi~^-1.
    Omega_i = Gamma_i D_i - Upsilon, Upsilon = (1/T_c) sum_i Gamma_i D_i.

    Args:
        gram: (T_c, N_T, N_T) Hermitian PSD matrices D_i
        average_variance: (N_T,) diagonal of Xi~
        sigma2: noise variance, > 0

    Raises:
        SingularMatrix: if some C_i cannot be factorised
    """
    gram = np.asarray(gram, dtype=complex)
    average_variance = np.asarray(average_variance, dtype=float)
    if gram.ndim != 3 or gram.shape[1] != gram.shape[2] or gram.shape[1] != average_variance.shape[0]:
        raise ShapeMismatch(f"Gram stack {gram.shape} does not match Xi~ of size {average_variance.shape}")
    if not sigma2 > 0.0:
        raise ValueError(f"Noise variance must be positive, got {sigma2}")

    inverse_variance = 1.0 / average_variance
    covariance = gram + np.diag(sigma2 * inverse_variance)
    gamma = inverse_variance[None, :, None] * hermitian_inverse(covariance)
    gamma_gram = gamma @ gram
    upsilon = gamma_gram.mean(axis=0)
    omega = gamma_gram - upsilon
    return EqualizerFilters(gamma=gamma, omega=omega, upsilon=upsilon)


def mmse_estimate(filters: EqualizerFilters, y_tilde: np.ndarray, x_prior_f: np.ndarray) -> np.ndarray:
    """
    z_f,i = Gamma_i y~_f,i - Omega_i x~_f,i for every bin

    Args:
        y_tilde: (T_c, N_T) matched-filter outputs
        x_prior_f: (T_c, N_T) block DFT of the conditional-mean chips

    Returns:
        np.ndarray: (T_c, N_T) frequency-domain chip estimates
    """
    if y_tilde.shape != x_prior_f.shape or y_tilde.shape[0] != filters.n_bins:
        raise ShapeMismatch(f"y~ {y_tilde.shape} and x~_f {x_prior_f.shape} do not match "
                            f"{filters.n_bins} filter bins")
    return (np.einsum('itu,iu->it', filters.gamma, y_tilde)
            - np.einsum('itu,iu->it', filters.omega, x_prior_f))

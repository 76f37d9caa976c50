"""
Per-frame ARQ outcomes and throughput accumulators
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ArqOutcome:
    """Result of one Chase-ARQ frame"""

    rounds_used: int
    success: bool
    delivered_rate: float       # R on success, 0 otherwise


@dataclass
class ThroughputStats:
    """
    Accumulators for eta = E[R] / E[K] at one SNR point

    Second-order sums are kept so a delta-method confidence interval can be
    reported next to the ratio estimate.
    """

    ecn0_db: float
    rate: float
    frames: int = 0
    successes: int = 0
    sum_rate: float = 0.0
    sum_rounds: int = 0
    sum_rate_sq: float = 0.0
    sum_rounds_sq: int = 0
    sum_rate_rounds: float = 0.0

    def add(self, outcome: ArqOutcome) -> None:
        self.frames += 1
        self.successes += int(outcome.success)
        self.sum_rate += outcome.delivered_rate
        self.sum_rounds += outcome.rounds_used
        self.sum_rate_sq += outcome.delivered_rate ** 2
        self.sum_rounds_sq += outcome.rounds_used ** 2
        self.sum_rate_rounds += outcome.delivered_rate * outcome.rounds_used

    @property
    def eta(self) -> float:
        return self.sum_rate / self.sum_rounds if self.sum_rounds else 0.0

    @property
    def mean_rounds(self) -> float:
        return self.sum_rounds / self.frames if self.frames else 0.0

    @property
    def frame_error_rate(self) -> float:
        return 1.0 - self.successes / self.frames if self.frames else 0.0

    @property
    def ci_halfwidth(self) -> float:
        """95% normal-approximation half-width of eta (delta method on the ratio)"""
        n = self.frames
        if n < 2 or self.sum_rounds == 0:
            return 0.0
        mean_r = self.sum_rate / n
        mean_k = self.sum_rounds / n
        var_r = (self.sum_rate_sq - n * mean_r ** 2) / (n - 1)
        var_k = (self.sum_rounds_sq - n * mean_k ** 2) / (n - 1)
        cov_rk = (self.sum_rate_rounds - n * mean_r * mean_k) / (n - 1)
        eta = mean_r / mean_k
        variance = (var_r - 2.0 * eta * cov_rk + eta ** 2 * var_k) / (mean_k ** 2 * n)
        return 1.96 * math.sqrt(max(variance, 0.0))

    def merge(self, other: "ThroughputStats") -> "ThroughputStats":
        """Fold another point's accumulators into this one"""
        self.frames += other.frames
        self.successes += other.successes
        self.sum_rate += other.sum_rate
        self.sum_rounds += other.sum_rounds
        self.sum_rate_sq += other.sum_rate_sq
        self.sum_rounds_sq += other.sum_rounds_sq
        self.sum_rate_rounds += other.sum_rate_rounds
        return self

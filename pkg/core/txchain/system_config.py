"""
Link parameters for the CP-CDMA MIMO Chase-ARQ simulator
Every scalar the transmitter, channel and receivers need lives here
"""

from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, Tuple

from core.errors import ConfigError

RECEIVER_KINDS = ('chip', 'symbol', 'mfb')
CHANNEL_DYNAMICS = ('short-term', 'long-term')
DEMAPPER_KINDS = ('exact', 'maxlog')


def _is_power_of_two(value: int) -> bool:
    return value >= 1 and (value & (value - 1)) == 0


@dataclass(frozen=True)
class SystemConfig:
    """
    Resolved link configuration

    Defaults follow the balanced full-load scenario: 2x2 MIMO, spreading
    factor 16, 16 codes, QPSK, K = 3 rounds, 10 equal-power taps, CP of 10
    chips, 1024 coded bits including tails, rate-1/2 (35,23)_8 code and three
    turbo iterations.
    """

    n_tx: int = 2
    n_rx: int = 2
    spreading_factor: int = 16
    n_codes: int = 16
    bits_per_symbol: int = 2
    max_rounds: int = 3
    n_taps: int = 10
    cp_length: int = 10
    symbols_per_antenna: int = 256
    generators: Tuple[int, int] = (0o35, 0o23)
    constraint_length: int = 5
    interleaver_seed: int = 1234
    n_iterations: int = 3
    ecn0_grid_db: Tuple[float, ...] = field(default=tuple(x * 0.5 for x in range(-6, 21)))
    frames_per_point: int = 2000
    receiver: str = 'chip'
    channel_dynamic: str = 'short-term'
    demapper: str = 'exact'
    early_stop: bool = True

    @property
    def code_rate(self) -> float:
        """rho, fixed by the rate-1/2 encoder"""
        return 1.0 / len(self.generators)

    @property
    def chips_per_block(self) -> int:
        """T_c = T_s * N / C"""
        return self.symbols_per_antenna * self.spreading_factor // self.n_codes

    @property
    def symbol_periods(self) -> int:
        """Number of spreading periods (of N chips) per antenna"""
        return self.symbols_per_antenna // self.n_codes

    @property
    def symbol_energy(self) -> float:
        """E_s = N / C keeps the chip energy at one for any load"""
        return self.spreading_factor / self.n_codes

    @property
    def coded_bits(self) -> int:
        """N_T * M * T_s coded and interleaved bits per frame"""
        return self.n_tx * self.bits_per_symbol * self.symbols_per_antenna

    @property
    def tail_bits(self) -> int:
        return self.constraint_length - 1

    @property
    def info_bits(self) -> int:
        """Information bits per frame, tails excluded"""
        return self.coded_bits // len(self.generators) - self.tail_bits

    @property
    def rate(self) -> float:
        """R = rho * M * N_T * C bits per N chip intervals"""
        return self.code_rate * self.bits_per_symbol * self.n_tx * self.n_codes

    @property
    def load_factor(self) -> float:
        return self.n_codes / self.spreading_factor

    def with_overrides(self, **overrides: Any) -> "SystemConfig":
        """Copy with some fields replaced, validated"""
        updated = replace(self, **overrides)
        updated.validate()
        return updated

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['generators'] = [oct(g)[2:] for g in self.generators]
        data['ecn0_grid_db'] = list(self.ecn0_grid_db)
        return data

    def validate(self) -> "SystemConfig":
        """
        Check every structural invariant of the link

        Returns:
            SystemConfig: self, for chaining

        Raises:
            ConfigError: naming the offending key
        """
        for key in ('n_tx', 'n_rx', 'spreading_factor', 'n_codes', 'bits_per_symbol',
                    'max_rounds', 'n_taps', 'symbols_per_antenna', 'n_iterations',
                    'frames_per_point', 'constraint_length'):
            if getattr(self, key) < 1:
                raise ConfigError(key, f"must be >= 1, got {getattr(self, key)}")
        if self.cp_length < 0:
            raise ConfigError('cp_length', f"must be >= 0, got {self.cp_length}")
        if not _is_power_of_two(self.spreading_factor):
            raise ConfigError('spreading_factor',
                              f"must be a power of two for Walsh codes, got {self.spreading_factor}")
        if self.n_codes > self.spreading_factor:
            raise ConfigError('n_codes', f"C <= N violated ({self.n_codes} > {self.spreading_factor})")
        if self.symbols_per_antenna % self.n_codes != 0:
            raise ConfigError('symbols_per_antenna',
                              f"T_s={self.symbols_per_antenna} not divisible by C={self.n_codes}")
        if self.cp_length < self.n_taps - 1:
            raise ConfigError('cp_length',
                              f"CP shorter than channel (T_CP={self.cp_length} < L-1={self.n_taps - 1})")
        if self.bits_per_symbol != 2:
            raise ConfigError('bits_per_symbol', f"only QPSK (M=2) is supported, got {self.bits_per_symbol}")
        if len(self.generators) != 2 or any(g <= 0 for g in self.generators):
            raise ConfigError('generators', "expected two positive octal generators")
        if any(g >= (1 << self.constraint_length) for g in self.generators):
            raise ConfigError('generators', f"generator wider than constraint length {self.constraint_length}")
        if self.coded_bits % len(self.generators) != 0 or self.info_bits < 1:
            raise ConfigError('symbols_per_antenna',
                              f"{self.coded_bits} coded bits cannot carry tails of {self.tail_bits} bits")
        if self.chips_per_block < self.n_taps:
            raise ConfigError('n_taps', f"T_c={self.chips_per_block} shorter than L={self.n_taps}")
        if self.receiver not in RECEIVER_KINDS:
            raise ConfigError('receiver', f"unknown receiver '{self.receiver}', expected one of {RECEIVER_KINDS}")
        if self.channel_dynamic not in CHANNEL_DYNAMICS:
            raise ConfigError('channel_dynamic', f"expected one of {CHANNEL_DYNAMICS}")
        if self.demapper not in DEMAPPER_KINDS:
            raise ConfigError('demapper', f"expected one of {DEMAPPER_KINDS}")
        if not self.ecn0_grid_db:
            raise ConfigError('ecn0_grid_db', "SNR grid is empty")
        return self

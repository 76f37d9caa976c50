"""
Exception hierarchy for the link simulator
Library code raises these; only the scripts turn them into exit codes
"""

from typing import Optional


class SimulationError(Exception):
    """Base class for every error raised by the simulator"""


class ConfigError(SimulationError, ValueError):
    """Invalid run configuration, with the offending key path"""

    def __init__(self, key_path: str, reason: str):
        self.key_path = key_path
        self.reason = reason
        super().__init__(f"{key_path}: {reason}")


class BadLength(SimulationError, ValueError):
    """Bit or LLR block length inconsistent with the configuration"""


class ShapeMismatch(SimulationError, ValueError):
    """Array shape inconsistent with the configuration"""


class UnsupportedModulation(SimulationError, ValueError):
    """Only QPSK (M = 2) is mapped"""


class BadSpreadingFactor(SimulationError, ValueError):
    """Spreading factor is not a power of two or code count out of range"""


class CpTooShort(SimulationError, ValueError):
    """Cyclic prefix shorter than the channel memory"""


class SingularMatrix(SimulationError, ArithmeticError):
    """Cholesky pivot below tolerance"""

    def __init__(self, message: str, pivot: Optional[float] = None):
        self.pivot = pivot
        super().__init__(message)


class RoundOrderViolation(SimulationError, RuntimeError):
    """Combiner state updated out of ARQ round sequence"""


class ResultsIoError(SimulationError, OSError):
    """Result or fixture file could not be written"""

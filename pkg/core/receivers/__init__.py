"""
Receiver registry and factory for the combining schemes
Provides centralized access to chip-level, symbol-level and genie receivers
"""

from typing import Dict, List, Optional, Type

from core.combiner.meter import ComplexityMeter
from core.txchain.system_config import SystemConfig
from .base_receiver import BaseReceiver, RoundObservation, RoundResult
from .chip_level import ChipLevelReceiver
from .mfb import MatchedFilterBoundReceiver, isolated_symbol_energy
from .symbol_level import SymbolLevelReceiver
from .turbo_receiver import TurboReceiver

# Registry of available receivers by kind
RECEIVER_REGISTRY: Dict[str, Type[BaseReceiver]] = {
    'chip': ChipLevelReceiver,
    'symbol': SymbolLevelReceiver,
    'mfb': MatchedFilterBoundReceiver,
}


def get_receiver(kind: str, cfg: SystemConfig, meter: Optional[ComplexityMeter] = None) -> BaseReceiver:
    """
    Get receiver instance for the specified kind

    Args:
        kind: Receiver kind (e.g., 'chip', 'symbol', 'mfb')
        cfg: Link configuration the receiver is built for
        meter: Complexity meter shared with the caller (a fresh one if omitted)

    Returns:
        BaseReceiver: Receiver instance

    Raises:
        ValueError: If no receiver is registered for the kind
    """
    receiver_class = RECEIVER_REGISTRY.get(kind)
    if receiver_class:
        return receiver_class(cfg, meter)
    raise ValueError(f"No receiver registered for kind: {kind}")


def list_supported_receivers() -> List[str]:
    """
    Get list of registered receiver kinds

    Returns:
        List[str]: Receiver kinds
    """
    return list(RECEIVER_REGISTRY.keys())


def is_receiver_supported(kind: str) -> bool:
    return kind in RECEIVER_REGISTRY


def register_receiver(kind: str, receiver_class: Type[BaseReceiver]) -> None:
    """
    Register a new receiver kind

    Args:
        kind: Receiver kind
        receiver_class: Class that inherits from BaseReceiver
    """
    RECEIVER_REGISTRY[kind] = receiver_class


def get_receiver_info(kind: str, cfg: Optional[SystemConfig] = None) -> Dict[str, object]:
    """
    Get information about a receiver

    Args:
        kind: Receiver kind
        cfg: Configuration used to size the combining state (defaults if omitted)

    Returns:
        Dict: class name and state size, or an 'error' entry
    """
    if not is_receiver_supported(kind):
        return {'error': f'No receiver registered for kind: {kind}'}

    try:
        receiver = get_receiver(kind, cfg or SystemConfig())
        return {
            'kind': kind,
            'class_name': receiver.__class__.__name__,
            'state_size_reals': receiver.state_size_reals(),
        }
    except Exception as e:
        return {'error': f'Failed to get receiver info: {e}'}


__all__ = [
    'BaseReceiver', 'TurboReceiver', 'RoundObservation', 'RoundResult', 'ChipLevelReceiver',
    'SymbolLevelReceiver', 'MatchedFilterBoundReceiver', 'isolated_symbol_energy', 'get_receiver',
    'list_supported_receivers', 'is_receiver_supported', 'register_receiver', 'get_receiver_info',
    'RECEIVER_REGISTRY',
]

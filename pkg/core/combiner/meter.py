"""
Complexity and memory accounting for the two combining schemes
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from core.txchain.system_config import SystemConfig

logger = logging.getLogger(__name__)


@dataclass
class ComplexityMeter:
    """Counts real additions spent on combining across ARQ rounds"""

    additions: int = 0
    by_round: Dict[int, int] = field(default_factory=dict)

    def add(self, count: int, round_index: int) -> None:
        self.additions += count
        self.by_round[round_index] = self.by_round.get(round_index, 0) + count

    def reset(self) -> None:
        self.additions = 0
        self.by_round.clear()


def chip_update_additions(n_chips: int, n_tx: int) -> int:
    """Real additions of one chip-level accumulator update: y~ plus every D_i"""
    return 2 * n_chips * n_tx * (n_tx + 1)


def symbol_update_additions(n_symbols: int, n_tx: int, bits_per_symbol: int) -> int:
    """Real additions of one symbol-level metric update"""
    return n_symbols * n_tx * 2 ** bits_per_symbol


def chip_level_budget(cfg: SystemConfig) -> Dict[str, int]:
    """Combining additions over K rounds and state size (reals) of chip-level combining"""
    per_update = chip_update_additions(cfg.chips_per_block, cfg.n_tx)
    return {
        'additions': per_update * (cfg.max_rounds - 1),
        'memory_reals': 2 * cfg.chips_per_block * cfg.n_tx * (cfg.n_tx + 1),
    }


def symbol_level_budget(cfg: SystemConfig) -> Dict[str, int]:
    """Combining additions over K rounds and state size (reals) of symbol-level combining"""
    per_update = symbol_update_additions(cfg.symbols_per_antenna, cfg.n_tx, cfg.bits_per_symbol)
    return {
        'additions': per_update * (cfg.max_rounds - 1) * cfg.n_iterations,
        'memory_reals': cfg.symbols_per_antenna * cfg.n_tx * 2 ** cfg.bits_per_symbol,
    }


def combining_budget(cfg: SystemConfig, receiver: str) -> Dict[str, int]:
    """Budget of the named scheme; the genie bound has no combining cost"""
    if receiver == 'chip':
        return chip_level_budget(cfg)
    if receiver == 'symbol':
        return symbol_level_budget(cfg)
    return {'additions': 0, 'memory_reals': 0}


def memory_comparison(cfg: SystemConfig) -> List[Dict[str, object]]:
    """
    Side-by-side memory of both schemes for one configuration

    Returns:
        List[Dict]: one row per scheme with memory in reals and the ratio
            symbol-level / chip-level
    """
    chip = chip_level_budget(cfg)
    symbol = symbol_level_budget(cfg)
    ratio = symbol['memory_reals'] / chip['memory_reals']
    logger.debug(f"Memory ratio symbol/chip = {ratio:.3f} for N_T={cfg.n_tx}, M={cfg.bits_per_symbol}, "
                 f"C={cfg.n_codes}")
    return [
        {'scheme': 'chip', 'memory_reals': chip['memory_reals'], 'additions': chip['additions'], 'ratio': 1.0},
        {'scheme': 'symbol', 'memory_reals': symbol['memory_reals'], 'additions': symbol['additions'],
         'ratio': ratio},
    ]

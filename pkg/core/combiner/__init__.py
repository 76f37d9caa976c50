"""
Turbo MMSE frequency-domain equalization with chip-level or symbol-level packet combining
"""

from .demapper import LLR_CAP, demap_chip_level, demap_metrics, symbol_metrics
from .despreader import DespreadOutput, despread_and_stat, equivalent_gain_and_variance
from .filters import EqualizerFilters, compute_filters, mmse_estimate
from .meter import (
    ComplexityMeter,
    chip_level_budget,
    combining_budget,
    memory_comparison,
    symbol_level_budget,
)
from .priors import ChipPriors, chip_priors_from_llrs, soft_symbols_from_llrs
from .state import (
    ChipCombinerState,
    SymbolCombinerState,
    chip_update,
    matched_filter,
    symbol_update_and_demap,
)

__all__ = [
    'ChipPriors', 'chip_priors_from_llrs', 'soft_symbols_from_llrs',
    'EqualizerFilters', 'compute_filters', 'mmse_estimate',
    'DespreadOutput', 'despread_and_stat', 'equivalent_gain_and_variance',
    'LLR_CAP', 'symbol_metrics', 'demap_metrics', 'demap_chip_level',
    'ChipCombinerState', 'SymbolCombinerState', 'chip_update', 'symbol_update_and_demap', 'matched_filter',
    'ComplexityMeter', 'chip_level_budget', 'symbol_level_budget', 'combining_budget', 'memory_comparison',
]

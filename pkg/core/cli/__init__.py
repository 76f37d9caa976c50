"""
Run configuration and experiment orchestration
"""

from .manifest import RunManifest, load_presets, parse_config, validate_run_file
from .runner import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_ERROR, csv_metadata, run, write_results

__all__ = [
    'RunManifest', 'parse_config', 'load_presets', 'validate_run_file', 'run', 'write_results',
    'csv_metadata', 'EXIT_OK', 'EXIT_CONFIG_ERROR', 'EXIT_RUNTIME_ERROR',
]

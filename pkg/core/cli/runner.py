"""
Experiment orchestration: sweep each receiver of a manifest and write one CSV per receiver
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from core.arq.outcome import ThroughputStats
from core.arq.sweep import ProgressCallback, measure_combining_cost, run_sweep
from core.combiner.meter import combining_budget
from core.errors import ConfigError, SimulationError
from core.utils.file_manager import ResultsFileManager
from .manifest import RunManifest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_RUNTIME_ERROR = 3


def csv_metadata(manifest: RunManifest, receiver: str) -> List[Tuple[str, object]]:
    """Header lines echoing the resolved run, the closed-form combining cost and what the meter counted"""
    cfg = manifest.config
    budget = combining_budget(cfg, receiver)
    measured = measure_combining_cost(cfg, receiver, manifest.master_seed)
    return [
        ('build', manifest.build_id),
        ('preset', manifest.preset or '-'),
        ('receiver', receiver),
        ('seed', manifest.master_seed),
        ('rate_bits_per_symbol_period', f"{cfg.rate:g}"),
        ('config', json.dumps(cfg.to_dict(), sort_keys=True, separators=(',', ':'))),
        ('complexity_additions', budget['additions']),
        ('state_memory_reals', budget['memory_reals']),
        ('measured_additions', measured['additions']),
        ('measured_memory_reals', measured['memory_reals']),
    ]


def throughput_rows(stats: List[ThroughputStats]) -> List[List[str]]:
    return [
        [f"{s.ecn0_db:.2f}", f"{s.eta:.6f}", f"{s.ci_halfwidth:.6f}", str(s.frames), f"{s.mean_rounds:.6f}"]
        for s in stats
    ]


def write_results(manifest: RunManifest, progress: Optional[ProgressCallback] = None) -> Dict[str, Path]:
    """
    Sweep every receiver of the manifest and write its CSV

    A failure removes the CSVs already written by this call, so a run leaves either every
    receiver's file or none.

    Returns:
        Dict[str, Path]: receiver kind -> written file

    Raises:
        ResultsIoError: if a CSV cannot be written
    """
    files = ResultsFileManager(manifest.output_dir)
    written: Dict[str, Path] = {}
    try:
        for receiver in manifest.receivers:
            logger.info(f"Sweeping receiver '{receiver}' over {len(manifest.config.ecn0_grid_db)} points")
            stats = run_sweep(manifest.config, manifest.master_seed, receiver, manifest.workers, progress=progress)
            path = manifest.output_path(receiver)
            written[receiver] = files.write_throughput_csv(path.name, csv_metadata(manifest, receiver),
                                                           throughput_rows(stats))
    except Exception:
        for path in written.values():
            files.remove_partial(path)
        raise
    return written


def run(manifest: RunManifest, progress: Optional[ProgressCallback] = None) -> int:
    """
    Execute a resolved manifest

    Returns:
        int: 0 on completion, 2 for configuration errors, 3 for runtime or I/O errors
    """
    try:
        write_results(manifest, progress)
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG_ERROR
    except (SimulationError, OSError) as e:
        logger.error(f"Run failed: {e}")
        return EXIT_RUNTIME_ERROR
    return EXIT_OK

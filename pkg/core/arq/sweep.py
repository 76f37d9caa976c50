"""
Monte-Carlo throughput sweep over the E_c/N0 grid
Frames run in worker processes; results are aggregated in frame order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

from core.combiner.meter import ComplexityMeter
from core.txchain.system_config import SystemConfig
from .outcome import ArqOutcome, ThroughputStats
from .simulator import ArqSimulator, frame_seed

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int], None]

_WORKER_SIMULATORS: Dict[Tuple[SystemConfig, str], ArqSimulator] = {}


def _simulator_for(cfg: SystemConfig, receiver: str) -> ArqSimulator:
    key = (cfg, receiver)
    if key not in _WORKER_SIMULATORS:
        _WORKER_SIMULATORS[key] = ArqSimulator(cfg, receiver)
    return _WORKER_SIMULATORS[key]


def _run_task(task: Tuple[SystemConfig, str, float, int, int, int]) -> ArqOutcome:
    cfg, receiver, ecn0_db, master_seed, point_index, frame_index = task
    simulator = _simulator_for(cfg, receiver)
    return simulator.run_frame(ecn0_db, frame_seed(master_seed, point_index, frame_index))


def run_point(cfg: SystemConfig, ecn0_db: float, point_index: int, master_seed: int,
              receiver: Optional[str] = None, frames: Optional[int] = None,
              executor: Optional[ProcessPoolExecutor] = None) -> ThroughputStats:
    """Simulate one SNR point; frame seeds depend only on (master_seed, point_index, frame_index)"""
    kind = receiver or cfg.receiver
    n_frames = frames if frames is not None else cfg.frames_per_point
    stats = ThroughputStats(ecn0_db=ecn0_db, rate=cfg.rate)
    tasks = [(cfg, kind, ecn0_db, master_seed, point_index, f) for f in range(n_frames)]
    if executor is None:
        outcomes = map(_run_task, tasks)
    else:
        outcomes = executor.map(_run_task, tasks, chunksize=max(1, n_frames // 64))
    for outcome in outcomes:
        stats.add(outcome)
    return stats


def run_sweep(cfg: SystemConfig, master_seed: int, receiver: Optional[str] = None, workers: int = 1,
              frames: Optional[int] = None, progress: Optional[ProgressCallback] = None) -> List[ThroughputStats]:
    """
    Throughput statistics for every point of cfg.ecn0_grid_db

    Args:
        cfg: validated link configuration
        master_seed: root of all frame seeds
        receiver: receiver kind, cfg.receiver if omitted
        workers: worker processes (1 runs in-process)
        frames: frames per point, cfg.frames_per_point if omitted
        progress: called with (points done, points total)

    Returns:
        List[ThroughputStats]: one entry per grid point, grid order
    """
    kind = receiver or cfg.receiver
    grid = list(cfg.ecn0_grid_db)
    results: List[ThroughputStats] = []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for point_index, ecn0_db in enumerate(grid):
            stats = run_point(cfg, ecn0_db, point_index, master_seed, kind, frames, executor)
            logger.info(f"{kind}: Ec/N0={ecn0_db:+.2f} dB eta={stats.eta:.3f} "
                        f"+-{stats.ci_halfwidth:.3f} mean K={stats.mean_rounds:.2f} ({stats.frames} frames)")
            results.append(stats)
            if progress is not None:
                progress(point_index + 1, len(grid))
    finally:
        if executor is not None:
            executor.shutdown()
    return results


def mfb_reference(cfg: SystemConfig, master_seed: int, workers: int = 1, frames: Optional[int] = None,
                  progress: Optional[ProgressCallback] = None) -> List[ThroughputStats]:
    """Matched-filter-bound throughput on the same frames and channels as the combining receivers"""
    return run_sweep(cfg, master_seed, 'mfb', workers, frames, progress)


def measure_combining_cost(cfg: SystemConfig, receiver: str, master_seed: int = 0) -> Dict[str, int]:
    """
    Run one frame through all K rounds with every iteration and report what the meter counted

    Early stop is disabled and the SNR set so low that no round succeeds.
    """
    metered_cfg = cfg.with_overrides(early_stop=False)
    meter = ComplexityMeter()
    simulator = ArqSimulator(metered_cfg, receiver, meter)
    simulator.run_frame(-30.0, frame_seed(master_seed, 0, 0))
    return {'additions': meter.additions, 'memory_reals': simulator.receiver.state_size_reals()}

#!/usr/bin/env python3
"""
CLI tool to run throughput sweeps and write one CSV per receiver
"""

import sys
from pathlib import Path
import argparse
import logging

# Add project root to Python path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from core.cli import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_ERROR, parse_config, write_results
from core.config import Config
from core.errors import ConfigError, SimulationError
from core.txchain.system_config import RECEIVER_KINDS
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

logger = logging.getLogger(__name__)


def setup_logging() -> None:
    logging.basicConfig(
        level=Config.LOG_LEVEL.upper(),
        format="%(message)s",
        handlers=[RichHandler(rich_tracebacks=False, show_path=False)],
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Chase-ARQ throughput sweep (chip-level / symbol-level / MFB)")
    parser.add_argument("--config", type=Path, help="JSON run file")
    parser.add_argument("--preset", help="Named scenario from core/presets.json (e.g. fig2-fullload)")
    parser.add_argument("--receiver", choices=RECEIVER_KINDS, help="Run only this receiver")
    parser.add_argument("--seed", type=int, help="Master seed")
    parser.add_argument("--frames", type=int, help="Frames per SNR point")
    parser.add_argument("--out", type=Path, help="Output directory")
    parser.add_argument("--workers", type=int, help="Worker processes")
    args = parser.parse_args(argv)

    setup_logging()
    console = Console()

    for issue in Config.validate_config():
        logger.warning(f"Environment: {issue}")

    if args.config is None and args.preset is None:
        console.print("[red]Either --config or --preset is required[/red]")
        return EXIT_CONFIG_ERROR

    try:
        manifest = parse_config(args.config, args.preset, {
            'receiver': args.receiver,
            'seed': args.seed,
            'frames': args.frames,
            'out': args.out,
            'workers': args.workers,
        })
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG_ERROR

    cfg = manifest.config
    summary = Table(title=f"Run {manifest.stem}")
    summary.add_column("Parameter", style="cyan")
    summary.add_column("Value", style="green")
    summary.add_row("N_T x N_R", f"{cfg.n_tx} x {cfg.n_rx}")
    summary.add_row("N / C (load)", f"{cfg.spreading_factor} / {cfg.n_codes} ({cfg.load_factor:.2f})")
    summary.add_row("K / L / T_CP", f"{cfg.max_rounds} / {cfg.n_taps} / {cfg.cp_length}")
    summary.add_row("R", f"{cfg.rate:g}")
    summary.add_row("Receivers", ", ".join(manifest.receivers))
    summary.add_row("Frames/point", str(cfg.frames_per_point))
    summary.add_row("Seed", str(manifest.master_seed))
    console.print(summary)

    total = len(cfg.ecn0_grid_db) * len(manifest.receivers)
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("{task.completed}/{task.total} points"),
        console=console,
    ) as progress:
        task = progress.add_task("Sweeping...", total=total)
        try:
            written = write_results(manifest, progress=lambda done, n: progress.advance(task))
        except ConfigError as e:
            logger.error(f"Configuration error: {e}")
            return EXIT_CONFIG_ERROR
        except (SimulationError, OSError) as e:
            logger.error(f"Run failed: {e}")
            return EXIT_RUNTIME_ERROR

    for receiver, path in written.items():
        console.print(f"[green]{receiver}: {path}[/green]")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

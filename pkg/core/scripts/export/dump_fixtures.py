#!/usr/bin/env python3
"""
CLI tool to export a seeded frame's chip matrix and channel taps as CSV fixtures
"""

import sys
from pathlib import Path
import argparse
import logging

# Add project root to Python path
project_root = Path(__file__).parent.parent.parent.parent
sys.path.insert(0, str(project_root))

from core.arq import FrameStreams, frame_seed
from core.channel import ChannelProcess
from core.cli import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_ERROR, parse_config
from core.config import Config
from core.errors import ConfigError, SimulationError
from core.txchain import TransmitChain
from core.utils.file_manager import ResultsFileManager
from rich.console import Console
from rich.logging import RichHandler

logger = logging.getLogger(__name__)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Dump chip matrix and channel taps of one frame")
    parser.add_argument("--preset", default="smoke", help="Named scenario (default: smoke)")
    parser.add_argument("--config", type=Path, help="JSON run file")
    parser.add_argument("--seed", type=int, help="Master seed")
    parser.add_argument("--frame", type=int, default=0, help="Frame index at SNR point 0")
    parser.add_argument("--out", type=Path, help="Output directory (default: results/fixtures)")
    args = parser.parse_args(argv)

    logging.basicConfig(level=Config.LOG_LEVEL.upper(), format="%(message)s",
                        handlers=[RichHandler(show_path=False)])
    console = Console()

    try:
        manifest = parse_config(args.config, args.preset, {'seed': args.seed})
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG_ERROR

    cfg = manifest.config
    streams = FrameStreams.from_seed(frame_seed(manifest.master_seed, 0, args.frame))
    frame = TransmitChain(cfg).random_frame(streams.bits)
    channels = ChannelProcess(cfg, streams.channel)
    taps = [channels.realization(k).taps for k in range(1, cfg.max_rounds + 1)]

    files = ResultsFileManager(args.out or Config.FIXTURES_PATH)
    stem = f"{manifest.stem}_seed{manifest.master_seed}_frame{args.frame}"
    try:
        chips_path = files.write_chip_matrix(f"{stem}_chips.csv", frame.chips.chips)
        taps_path = files.write_channel_taps(f"{stem}_taps.csv", taps)
    except (SimulationError, OSError) as e:
        logger.error(f"Export failed: {e}")
        return EXIT_RUNTIME_ERROR

    console.print(f"[green]Chips: {chips_path}[/green]")
    console.print(f"[green]Taps: {taps_path}[/green]")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

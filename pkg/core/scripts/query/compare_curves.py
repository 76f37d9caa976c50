#!/usr/bin/env python3
"""
CLI tool to compare throughput CSVs: SNR at a target eta, gaps and high-SNR slopes
"""

import sys
from pathlib import Path
import argparse

# Add project root to Python path
project_root = Path(__file__).parent.parent.parent.parent
sys.path.insert(0, str(project_root))

from core.arq import high_snr_slope, snr_at_throughput
from core.utils.file_manager import ResultsFileManager
from rich.console import Console
from rich.table import Table


def load_curve(path: Path):
    metadata, rows = ResultsFileManager.read_throughput_csv(path)
    rate = None
    for line in metadata:
        key, _, value = line[1:].strip().partition(': ')
        if key == 'rate_bits_per_symbol_period':
            rate = float(value)
    snrs = [float(r['EcN0_dB']) for r in rows]
    etas = [float(r['eta']) for r in rows]
    return snrs, etas, rate


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Compare throughput curves")
    parser.add_argument("csv", nargs="+", type=Path, help="Throughput CSV files; the first is the reference")
    parser.add_argument("--target", type=float, help="Target eta (default: R/2 of the reference)")
    parser.add_argument("--slope-points", type=int, default=4, help="Grid points used for the slope fit")
    args = parser.parse_args(argv)

    console = Console()
    curves = []
    for path in args.csv:
        if not path.exists():
            console.print(f"[red]File not found: {path}[/red]")
            return 1
        curves.append((path, *load_curve(path)))

    ref_path, ref_snr, ref_eta, ref_rate = curves[0]
    target = args.target if args.target is not None else (ref_rate or max(ref_eta)) / 2.0
    ref_at_target = snr_at_throughput(ref_snr, ref_eta, target)

    table = Table(title=f"Throughput comparison at eta = {target:g}")
    table.add_column("Curve", style="cyan")
    table.add_column("Ec/N0 at target [dB]", style="green")
    table.add_column("Gap to reference [dB]", style="magenta")
    table.add_column("High-SNR slope [dB/decade]", style="blue")
    for path, snrs, etas, rate in curves:
        at_target = snr_at_throughput(snrs, etas, target)
        gap = at_target - ref_at_target if at_target is not None and ref_at_target is not None else None
        slope = high_snr_slope(snrs, etas, rate or max(etas), points=args.slope_points)
        table.add_row(
            path.name,
            f"{at_target:.2f}" if at_target is not None else "not reached",
            f"{gap:+.2f}" if gap is not None else "-",
            f"{slope:.2f}" if slope is not None else "-",
        )
    console.print(table)
    return 0


if __name__ == "__main__":
    sys.exit(main())

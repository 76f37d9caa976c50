"""
File management utilities for simulation results
Handles result CSVs with metadata headers, fixture dumps and safe file operations
"""

import csv
import io
import logging
import os
import tempfile
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from core.errors import ResultsIoError

logger = logging.getLogger(__name__)

THROUGHPUT_COLUMNS = ['EcN0_dB', 'eta', 'ci_halfwidth', 'frames', 'mean_rounds']


class ResultsFileManager:
    """Writes result and fixture CSVs atomically: a file is either complete or absent"""

    def __init__(self, directory: Path):
        self.directory = Path(directory)

    def ensure_directory(self) -> Path:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ResultsIoError(f"Cannot create results directory {self.directory}: {e}") from e
        return self.directory

    def write_atomic(self, file_name: str, content: str) -> Path:
        """
        Write content to directory/file_name through a temporary file and rename

        Returns:
            Path: final file path

        Raises:
            ResultsIoError: if the file cannot be written; no partial file is left behind
        """
        self.ensure_directory()
        target = self.directory / file_name
        fd, tmp_name = tempfile.mkstemp(prefix=f".{file_name}.", suffix='.tmp', dir=self.directory)
        try:
            with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
                f.write(content)
            os.replace(tmp_name, target)
        except OSError as e:
            self.remove_partial(Path(tmp_name))
            raise ResultsIoError(f"Failed to write {target}: {e}") from e
        logger.info(f"Wrote {target}")
        return target

    def remove_partial(self, path: Path) -> bool:
        """Remove a partially written file if present"""
        try:
            path.unlink()
            logger.warning(f"Removed partial file: {path}")
            return True
        except FileNotFoundError:
            return False
        except OSError as e:
            logger.error(f"Failed to remove partial file {path}: {e}")
            return False

    @staticmethod
    def format_metadata(metadata: Iterable[Tuple[str, object]]) -> str:
        return ''.join(f"# {key}: {value}\n" for key, value in metadata)

    def write_throughput_csv(self, file_name: str, metadata: Sequence[Tuple[str, object]],
                             rows: Iterable[Sequence[object]]) -> Path:
        """'#'-prefixed metadata lines, then the throughput table"""
        buffer = io.StringIO()
        buffer.write(self.format_metadata(metadata))
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(THROUGHPUT_COLUMNS)
        for row in rows:
            writer.writerow(row)
        return self.write_atomic(file_name, buffer.getvalue())

    def write_chip_matrix(self, file_name: str, chips: np.ndarray) -> Path:
        """Chip matrix X as rows (t, i, re, im)"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['t', 'i', 're', 'im'])
        for (t, i), value in np.ndenumerate(chips):
            writer.writerow([t, i, repr(float(value.real)), repr(float(value.imag))])
        return self.write_atomic(file_name, buffer.getvalue())

    def write_channel_taps(self, file_name: str, taps_by_round: List[np.ndarray]) -> Path:
        """Taps of every round as rows (k, l, r, t, re, im); taps are (L, N_R, N_T), k is 1-based"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['k', 'l', 'r', 't', 're', 'im'])
        for k, taps in enumerate(taps_by_round, start=1):
            for (l, r, t), value in np.ndenumerate(taps):
                writer.writerow([k, l, r, t, repr(float(value.real)), repr(float(value.imag))])
        return self.write_atomic(file_name, buffer.getvalue())

    @staticmethod
    def read_throughput_csv(path: Path) -> Tuple[List[str], List[dict]]:
        """Metadata lines and data rows of a throughput CSV"""
        metadata: List[str] = []
        data_lines: List[str] = []
        with open(path, 'r', encoding='utf-8') as f:
            for line in f:
                (metadata if line.startswith('#') else data_lines).append(line)
        rows = list(csv.DictReader(data_lines))
        return metadata, rows

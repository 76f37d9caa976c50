#!/usr/bin/env python3
"""
Unit tests for the experiment runner and its result files
"""

import dataclasses
import sys
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.arq.sweep import run_sweep
from core.cli import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_ERROR, csv_metadata, parse_config, run, write_results
from core.errors import ConfigError, ResultsIoError, SimulationError
from core.utils.file_manager import THROUGHPUT_COLUMNS, ResultsFileManager


class TestRunner(unittest.TestCase):
    """Smoke preset end to end with a handful of frames"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.manifest = parse_config(preset='smoke', overrides={'out': self.tmp.name, 'frames': 3, 'seed': 5})

    def test_header_layout(self):
        keys = [key for key, _ in csv_metadata(self.manifest, 'chip')]
        self.assertEqual(keys, ['build', 'preset', 'receiver', 'seed', 'rate_bits_per_symbol_period', 'config',
                                'complexity_additions', 'state_memory_reals', 'measured_additions',
                                'measured_memory_reals'])

    def test_csv_contents(self):
        """Metadata echoes the run; one row per grid point"""
        path = write_results(self.manifest)['chip']
        self.assertEqual(path.name, 'smoke_chip.csv')
        metadata, rows = ResultsFileManager.read_throughput_csv(path)
        self.assertIn("# preset: smoke\n", metadata)
        self.assertIn("# receiver: chip\n", metadata)
        self.assertIn("# seed: 5\n", metadata)
        self.assertIn("# rate_bits_per_symbol_period: 8\n", metadata)
        self.assertIn("# complexity_additions: 384\n", metadata)
        self.assertIn("# state_memory_reals: 384\n", metadata)
        self.assertIn("# measured_additions: 384\n", metadata)
        self.assertIn("# measured_memory_reals: 384\n", metadata)
        self.assertEqual([row['EcN0_dB'] for row in rows], ['0.00', '4.00', '8.00'])
        self.assertEqual(list(rows[0].keys()), THROUGHPUT_COLUMNS)
        for row in rows:
            self.assertEqual(row['frames'], '3')
            self.assertLessEqual(float(row['eta']), 8.0)
            self.assertGreaterEqual(float(row['mean_rounds']), 1.0)

    def test_byte_identical_reruns(self):
        first = write_results(self.manifest)['chip'].read_bytes()
        second = write_results(self.manifest)['chip'].read_bytes()
        self.assertEqual(first, second)

    def test_exit_ok(self):
        self.assertEqual(run(self.manifest), EXIT_OK)
        self.assertTrue((Path(self.tmp.name) / 'smoke_chip.csv').exists())

    def test_exit_on_write_failure(self):
        with patch.object(ResultsFileManager, 'write_atomic', side_effect=ResultsIoError("disk full")):
            self.assertEqual(run(self.manifest), EXIT_RUNTIME_ERROR)

    def test_exit_on_config_error(self):
        with patch('core.cli.runner.run_sweep', side_effect=ConfigError('system.n_codes', 'bad')):
            self.assertEqual(run(self.manifest), EXIT_CONFIG_ERROR)

    def test_failed_receiver_removes_earlier_files(self):
        """A sweep failing on the second receiver leaves no CSV from the first"""
        manifest = dataclasses.replace(self.manifest, receivers=('chip', 'symbol'))

        def sweep_then_fail(cfg, seed, receiver, *args, **kwargs):
            if receiver == 'symbol':
                raise SimulationError("worker crashed")
            return run_sweep(cfg, seed, receiver, *args, **kwargs)

        with patch('core.cli.runner.run_sweep', side_effect=sweep_then_fail):
            self.assertEqual(run(manifest), EXIT_RUNTIME_ERROR)
        self.assertEqual(list(Path(self.tmp.name).iterdir()), [])


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
"""
Unit tests for runtime Config
"""

import sys
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.config import Config


class TestConfig(unittest.TestCase):
    """Test cases for Config"""

    def test_paths_exist(self):
        self.assertTrue(Config.PRESETS_PATH.exists())
        self.assertTrue(Config.SCHEMA_PATH.exists())

    def test_validate_config_clean(self):
        with patch.object(Config, 'WORKERS', 1), patch.object(Config, 'LOG_LEVEL', 'INFO'):
            self.assertEqual(Config.validate_config(), [])

    def test_validate_config_issues(self):
        with patch.object(Config, 'WORKERS', 0), patch.object(Config, 'LOG_LEVEL', 'LOUD'):
            issues = Config.validate_config()
        self.assertEqual(len(issues), 2)

    def test_build_id_from_environment(self):
        with patch.object(Config, 'BUILD_ID', 'ci-123'):
            self.assertEqual(Config.get_build_id(), 'ci-123')

    def test_build_id_from_version_file(self):
        with patch.object(Config, 'BUILD_ID', ''):
            self.assertEqual(Config.get_build_id(), Config.VERSION_FILE.read_text(encoding='utf-8').split()[0])

    def test_ensure_results_directory(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Config.ensure_results_directory(Path(tmp) / 'out' / 'nested')
            self.assertTrue(target.is_dir())


if __name__ == '__main__':
    unittest.main()

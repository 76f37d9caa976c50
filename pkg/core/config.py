"""
Configuration management for ChaseLink
Loads runtime settings from environment variables with sensible defaults
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

class Config:
    """Runtime configuration (paths, logging, workers, seeds)"""

    # Application settings
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

    # File paths (relative to project root)
    PROJECT_ROOT = Path(__file__).parent.parent
    RESULTS_PATH = PROJECT_ROOT / os.getenv('RESULTS_PATH', 'results')
    FIXTURES_PATH = RESULTS_PATH / 'fixtures'
    PRESETS_PATH = PROJECT_ROOT / os.getenv('PRESETS_PATH', 'core/presets.json')
    SCHEMA_PATH = PROJECT_ROOT / 'core' / 'run_config_schema.json'
    VERSION_FILE = PROJECT_ROOT / 'VERSION.txt'

    # Simulation settings
    WORKERS = int(os.getenv('WORKERS', '1'))
    MASTER_SEED = int(os.getenv('MASTER_SEED', '20081'))
    BUILD_ID = os.getenv('BUILD_ID', '')

    @classmethod
    def get_build_id(cls) -> str:
        """Build identifier echoed into result metadata"""
        if cls.BUILD_ID:
            return cls.BUILD_ID
        try:
            return cls.VERSION_FILE.read_text(encoding='utf-8').split()[0]
        except (OSError, IndexError):
            return 'unknown'

    @classmethod
    def ensure_results_directory(cls, path: Path = None) -> Path:
        """Ensure the results directory (and fixtures subdirectory) exists"""
        target = Path(path) if path else cls.RESULTS_PATH
        target.mkdir(parents=True, exist_ok=True)
        if path is None:
            cls.FIXTURES_PATH.mkdir(parents=True, exist_ok=True)
        return target

    @classmethod
    def validate_config(cls):
        """Validate configuration and return any issues"""
        issues = []

        if cls.WORKERS < 1:
            issues.append(f"WORKERS must be >= 1, got {cls.WORKERS}")

        if not cls.PRESETS_PATH.exists():
            issues.append(f"PRESETS_PATH does not exist: {cls.PRESETS_PATH}")

        if not cls.SCHEMA_PATH.exists():
            issues.append(f"SCHEMA_PATH does not exist: {cls.SCHEMA_PATH}")

        if cls.LOG_LEVEL.upper() not in {'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'}:
            issues.append(f"Unknown LOG_LEVEL: {cls.LOG_LEVEL}")

        return issues

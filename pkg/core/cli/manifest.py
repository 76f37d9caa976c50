"""
Run manifest: a run file, a named preset and command-line flags resolved into one configuration
Precedence: CLI flag > run file > preset > SystemConfig defaults
"""

import json
import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import jsonschema

from core.config import Config
from core.errors import ConfigError
from core.txchain.system_config import SystemConfig

logger = logging.getLogger(__name__)

SYSTEM_FIELDS = {f.name for f in fields(SystemConfig)}


@dataclass(frozen=True)
class RunManifest:
    """Fully resolved run: nothing left to defaults"""

    config: SystemConfig
    master_seed: int
    receivers: Tuple[str, ...]
    output_dir: Path
    build_id: str
    preset: Optional[str] = None
    workers: int = 1

    @property
    def stem(self) -> str:
        return self.preset or 'run'

    def output_path(self, receiver: str) -> Path:
        return self.output_dir / f"{self.stem}_{receiver}.csv"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'preset': self.preset,
            'seed': self.master_seed,
            'receivers': list(self.receivers),
            'build': self.build_id,
            'system': self.config.to_dict(),
        }


def _load_json(path: Path, key_path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise ConfigError(key_path, f"file not found: {path}")
    except json.JSONDecodeError as e:
        raise ConfigError(key_path, f"invalid JSON in {path}: {e}")


def load_presets(path: Optional[Path] = None) -> Dict[str, Dict[str, Any]]:
    """Named scenarios from presets.json"""
    data = _load_json(Path(path) if path else Config.PRESETS_PATH, 'preset')
    return data.get('presets', {})


def validate_run_file(data: Dict[str, Any], schema_path: Optional[Path] = None) -> None:
    """
    Validate a run file against the JSON schema

    Raises:
        ConfigError: with the dotted path of the first offending key
    """
    schema = _load_json(Path(schema_path) if schema_path else Config.SCHEMA_PATH, 'schema')
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        error = errors[0]
        key_path = '.'.join(str(p) for p in error.absolute_path) or '<root>'
        raise ConfigError(key_path, error.message)


def _system_from_mapping(values: Dict[str, Any]) -> SystemConfig:
    unknown = sorted(set(values) - SYSTEM_FIELDS)
    if unknown:
        raise ConfigError(f"system.{unknown[0]}", "unknown key")
    resolved = dict(values)
    if 'generators' in resolved:
        resolved['generators'] = tuple(int(str(g), 8) for g in resolved['generators'])
    if 'ecn0_grid_db' in resolved:
        resolved['ecn0_grid_db'] = tuple(float(x) for x in resolved['ecn0_grid_db'])
    cfg = SystemConfig(**resolved)
    try:
        return cfg.validate()
    except ConfigError as e:
        raise ConfigError(f"system.{e.key_path}", e.reason) from e


def parse_config(path: Optional[Path] = None, preset: Optional[str] = None,
                 overrides: Optional[Dict[str, Any]] = None) -> RunManifest:
    """
    Resolve a run manifest

    Args:
        path: JSON run file (optional when a preset is given)
        preset: preset name; takes precedence over the run file's 'preset'
        overrides: command-line values: receiver, seed, frames, out, workers

    Returns:
        RunManifest: validated manifest

    Raises:
        ConfigError: unknown keys, unknown preset or violated link invariants
    """
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    run_file: Dict[str, Any] = {}
    if path is not None:
        run_file = _load_json(Path(path), str(path))
        if not isinstance(run_file, dict):
            raise ConfigError('<root>', "run file must hold a JSON object")
        validate_run_file(run_file)

    preset_name = preset or run_file.get('preset')
    system: Dict[str, Any] = {}
    if preset_name:
        presets = load_presets()
        if preset_name not in presets:
            raise ConfigError('preset', f"unknown preset '{preset_name}', expected one of {sorted(presets)}")
        system.update(presets[preset_name])
    system.update(run_file.get('system', {}))
    if 'frames' in overrides:
        system['frames_per_point'] = overrides['frames']
    if 'receiver' in overrides:
        system['receiver'] = overrides['receiver']
    cfg = _system_from_mapping(system)

    receivers: List[str]
    if 'receiver' in overrides:
        receivers = [overrides['receiver']]
    else:
        receivers = run_file.get('receivers', [cfg.receiver])

    output_dir = Path(overrides.get('out') or run_file.get('output_dir') or Config.RESULTS_PATH)
    manifest = RunManifest(
        config=cfg,
        master_seed=int(overrides.get('seed', run_file.get('seed', Config.MASTER_SEED))),
        receivers=tuple(receivers),
        output_dir=output_dir,
        build_id=Config.get_build_id(),
        preset=preset_name,
        workers=int(overrides.get('workers', run_file.get('workers', Config.WORKERS))),
    )
    logger.info(f"Resolved run: preset={manifest.preset}, receivers={list(manifest.receivers)}, "
                f"seed={manifest.master_seed}, {len(cfg.ecn0_grid_db)} SNR points")
    return manifest

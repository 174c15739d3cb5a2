"""Unit tests for configuration loading and validation"""

import json
import os
import tempfile
import unittest
from pathlib import Path

import yaml
from pydantic import ValidationError as PydanticValidationError

from src.config import (
    ChannelConfig,
    SolverConfig,
    ToolkitConfig,
    default_config,
    load_config,
    with_overrides,
)

CONFIG_DIR = Path(__file__).parent.parent / "configs"


class TestConfigSchema(unittest.TestCase):
    """Test pydantic validation of configuration values"""

    def test_defaults(self):
        """Test the default configuration values"""
        config = default_config()
        self.assertEqual(config.solver.gap_tol, 1e-8)
        self.assertEqual(config.solver.feas_tol, 1e-8)
        self.assertEqual(config.solver.max_iter, 200)
        self.assertEqual(config.channels.feasibility_threshold, 1e-8)
        self.assertEqual(config.checks.seed, 2018)
        self.assertIsNone(config.sweeps.threads)

    def test_seed_must_be_non_negative(self):
        """Test that a negative battery seed is rejected"""
        with self.assertRaises(PydanticValidationError):
            ToolkitConfig(checks={"seed": -1})

    def test_step_fraction_must_be_inside_unit_interval(self):
        """Test that the step fraction lies strictly inside (0, 1)"""
        for bad in (0.0, 1.0, 1.5):
            with self.assertRaises(PydanticValidationError):
                SolverConfig(step_fraction=bad)

    def test_tolerances_must_be_positive(self):
        """Test that solver tolerances must be positive"""
        with self.assertRaises(PydanticValidationError):
            SolverConfig(gap_tol=0.0)
        with self.assertRaises(PydanticValidationError):
            ChannelConfig(certificate_tol=-1e-7)

    def test_nested_dict(self):
        """Test building a configuration from nested dicts"""
        config = ToolkitConfig(**{"solver": {"max_iter": 50}, "checks": {"seed": 7}})
        self.assertEqual(config.solver.max_iter, 50)
        self.assertEqual(config.checks.seed, 7)
        self.assertEqual(config.solver.gap_tol, 1e-8)


class TestConfigLoader(unittest.TestCase):
    """Test reading configuration files"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def test_load_yaml(self):
        """Test loading a YAML file"""
        path = os.path.join(self.temp_dir, "config.yaml")
        with open(path, "w") as f:
            yaml.safe_dump({"solver": {"gap_tol": 1e-9}, "sweeps": {"threads": 3}}, f)
        config = load_config(path)
        self.assertEqual(config.solver.gap_tol, 1e-9)
        self.assertEqual(config.sweeps.threads, 3)

    def test_load_json(self):
        """Test loading a JSON file"""
        path = os.path.join(self.temp_dir, "config.json")
        with open(path, "w") as f:
            json.dump({"measures": {"max_dimension": 36}}, f)
        self.assertEqual(load_config(path).measures.max_dimension, 36)

    def test_empty_yaml_gives_defaults(self):
        """Test that an empty YAML file gives the defaults"""
        path = os.path.join(self.temp_dir, "empty.yaml")
        Path(path).write_text("")
        self.assertEqual(load_config(path), default_config())

    def test_missing_file(self):
        """Test that a missing file raises FileNotFoundError"""
        with self.assertRaises(FileNotFoundError):
            load_config(os.path.join(self.temp_dir, "missing.yaml"))

    def test_unsupported_format(self):
        """Test that unknown suffixes are rejected"""
        path = os.path.join(self.temp_dir, "config.toml")
        Path(path).write_text("")
        with self.assertRaises(ValueError):
            load_config(path)

    def test_invalid_value_in_file(self):
        """Test that invalid values in a file are rejected"""
        path = os.path.join(self.temp_dir, "bad.yaml")
        with open(path, "w") as f:
            yaml.safe_dump({"solver": {"step_fraction": 2.0}}, f)
        with self.assertRaises(ValueError):
            load_config(path)

    def test_shipped_configs_load(self):
        """Test that the configs in the repository load"""
        self.assertEqual(load_config(CONFIG_DIR / "default.yaml"), default_config())
        quick = load_config(CONFIG_DIR / "examples" / "quick.yaml")
        self.assertEqual(quick.sweeps.threads, 2)
        self.assertLess(quick.checks.twoqubit_count, default_config().checks.twoqubit_count)


class TestOverrides(unittest.TestCase):
    """Test command-line overrides"""

    def test_no_overrides_returns_same_config(self):
        """Test that no overrides returns the same object"""
        config = default_config()
        self.assertIs(with_overrides(config), config)

    def test_overrides_apply(self):
        """Test that overrides replace only the named fields"""
        config = with_overrides(default_config(), gap_tol=1e-6, feas_tol=1e-7, seed=99)
        self.assertEqual(config.solver.gap_tol, 1e-6)
        self.assertEqual(config.solver.feas_tol, 1e-7)
        self.assertEqual(config.checks.seed, 99)
        self.assertEqual(config.solver.max_iter, 200)

    def test_invalid_override_rejected(self):
        """Test that invalid override values are rejected"""
        with self.assertRaises(ValueError):
            with_overrides(default_config(), gap_tol=-1.0)

    def test_negative_seed_override_rejected(self):
        """Test that the seed override is validated like a file value"""
        with self.assertRaises(PydanticValidationError):
            with_overrides(default_config(), seed=-5000)


if __name__ == "__main__":
    unittest.main()

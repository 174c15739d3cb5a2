"""Unit tests for the command-line interface"""

import io
import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pandas as pd

from cli.main import EXIT_INTEGRITY, EXIT_OK, EXIT_SOLVER, EXIT_VALIDATION, main
from cli.state_refs import StateFile, load_state_file, resolve_state, save_state_file
from src.checks import Outcome, SuiteResult
from src.errors import IntegrityFailure, SolverFailure, ValidationError
from src.sdp import load_problem
from src.states import max_entangled
from src.sweeps import COLUMNS


def run_cli(*argv):
    """Run main() and capture stdout"""
    with patch("sys.stdout", new_callable=io.StringIO) as out, patch("sys.stderr", new_callable=io.StringIO) as err:
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestStateReferences(unittest.TestCase):
    """Test built-in names and state files"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def test_builtin_names(self):
        """Test that built-in references resolve to the right dimensions"""
        self.assertEqual(resolve_state("phi:3").dims, (3, 3))
        self.assertEqual(resolve_state("rho_v").dims, (3, 3))
        self.assertEqual(resolve_state("sigma:0.25").dims, (3, 3))
        self.assertEqual(resolve_state("monogamy:abc").dims, (2, 4))
        self.assertEqual(resolve_state("convexity:avg").dims, (2, 2))

    def test_bad_references(self):
        """Test that malformed references are validation errors"""
        for ref in ("phi:x", "sigma:abc", "tau:2", "monogamy:bc", "nothing"):
            with self.assertRaises(ValidationError):
                resolve_state(ref)

    def test_state_file_round_trip(self):
        """Test saving and loading a state file"""
        path = save_state_file(max_entangled(2), os.path.join(self.temp_dir, "phi.json"))
        loaded = resolve_state(str(path))
        np.testing.assert_allclose(loaded.matrix, max_entangled(2).matrix, atol=1e-15)

    def test_state_file_shape_checked(self):
        """Test that re/im shapes must match the dimensions"""
        path = Path(self.temp_dir) / "bad.json"
        path.write_text(json.dumps({"dimA": 2, "dimB": 2, "re": [[1.0]], "im": [[0.0]]}))
        with self.assertRaises(ValidationError):
            load_state_file(path)

    def test_state_file_must_be_density(self):
        """Test that a state file must hold a density matrix"""
        payload = StateFile(dimA=1, dimB=2, re=[[1.0, 0.0], [0.0, 1.0]], im=[[0.0, 0.0], [0.0, 0.0]])
        path = Path(self.temp_dir) / "trace2.json"
        path.write_text(payload.model_dump_json())
        with self.assertRaises(ValidationError):
            load_state_file(path)

    def test_missing_state_file(self):
        """Test that a missing state file is a validation error"""
        with self.assertRaises(ValidationError):
            load_state_file(Path(self.temp_dir) / "missing.json")


class TestCommands(unittest.TestCase):
    """Test each command through main()"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def test_no_command(self):
        """Test that running without a command exits with the validation code"""
        code, _, _ = run_cli()
        self.assertEqual(code, EXIT_VALIDATION)

    def test_measure_json(self):
        """Test the JSON report of measure"""
        code, out, _ = run_cli("measure", "phi:2", "--json")
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertAlmostEqual(report["e_kappa_primal"], 1.0, delta=1e-6)
        self.assertEqual(report["diagnostics"]["status"], "Optimal")

    def test_measure_separable_serializes_neg_inf(self):
        """Test that -inf is written as a string"""
        code, out, _ = run_cli("measure", "convexity:2", "--json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["one_shot_lower"], "-inf")

    def test_measure_text(self):
        """Test the plain-text report of measure"""
        code, out, _ = run_cli("measure", "rho_v")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("e_kappa", out)
        self.assertIn("✓ Solver Optimal", out)

    def test_measure_unknown_state(self):
        """Test that an unknown state exits with the validation code"""
        code, _, err = run_cli("measure", "nothing")
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("Validation error", err)

    def test_solver_failure_exit_code(self):
        """Test that a solver failure exits with code 2"""
        with patch("cli.main.measure_state", side_effect=SolverFailure("did not converge")):
            code, _, err = run_cli("measure", "phi:2")
        self.assertEqual(code, EXIT_SOLVER)
        self.assertIn("did not converge", err)

    def test_integrity_failure_exit_code(self):
        """Test that an integrity failure exits with code 3 and prints residuals"""
        with patch("cli.main.measure_state", side_effect=IntegrityFailure("bad optimizer", {"s_min_eig": -1.0})):
            code, _, err = run_cli("measure", "phi:2")
        self.assertEqual(code, EXIT_INTEGRITY)
        self.assertIn("s_min_eig", err)

    def test_sweep_writes_csv(self):
        """Test that sweep writes one row per grid point"""
        out_path = os.path.join(self.temp_dir, "sigma.csv")
        code, out, _ = run_cli("sweep", "sigma", "0", "1", "3", "--out", out_path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("✓ Wrote 3 rows", out)
        self.assertEqual(len(Path(out_path).read_text().strip().split("\n")), 4)

    def test_sweep_missing_directory(self):
        """Test that a missing output directory is a validation error"""
        code, _, _ = run_cli("sweep", "sigma", "0", "1", "3", "--out", os.path.join(self.temp_dir, "no", "x.csv"))
        self.assertEqual(code, EXIT_VALIDATION)

    def test_sweep_bad_grid(self):
        """Test that an inconsistent grid is a validation error"""
        code, _, _ = run_cli("sweep", "tau", "0", "1", "1", "--out", os.path.join(self.temp_dir, "x.csv"))
        self.assertEqual(code, EXIT_VALIDATION)

    def test_sweep_unknown_family(self):
        """Test that an unknown family exits with the validation code"""
        code, out, err = run_cli("sweep", "delta", "0", "1", "3", "--out", os.path.join(self.temp_dir, "x.csv"))
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("Unknown state family", err)
        self.assertNotIn("Sweeping", out)

    def test_sweep_non_numeric_bound(self):
        """Test that a malformed range bound exits with the validation code"""
        code, _, err = run_cli("sweep", "sigma", "0", "one", "3", "--out", os.path.join(self.temp_dir, "x.csv"))
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("Validation error", err)

    def test_sweep_negative_gap_writes_nothing(self):
        """Test that rows with E_kappa < E_N fail before the CSV is written"""
        out_path = os.path.join(self.temp_dir, "sigma.csv")
        frame = pd.DataFrame(
            [{"family": "sigma", "p": 0.5, "e_kappa": 0.5, "e_n": 0.77, "log2_z": 1.7, "gap": -0.27}],
            columns=COLUMNS,
        )
        with patch("cli.main.run_sweep", return_value=frame):
            code, out, err = run_cli("sweep", "sigma", "0", "1", "3", "--out", out_path)
        self.assertEqual(code, EXIT_INTEGRITY)
        self.assertIn("E_kappa < E_N", err)
        self.assertNotIn("Wrote", out)
        self.assertFalse(os.path.exists(out_path))
        self.assertEqual(os.listdir(self.temp_dir), [])

    def test_oneshot_json(self):
        """Test the JSON certificate of oneshot"""
        code, out, _ = run_cli("oneshot", "phi:2", "--json")
        self.assertEqual(code, EXIT_OK)
        summary = json.loads(out)
        self.assertEqual(summary["m"], 2)
        self.assertEqual(summary["failures"], [])

    def test_check_passes(self):
        """Test that a passing battery exits with code 0"""
        code, out, _ = run_cli("check", "convexity")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("✗ Failed: 0", out)

    def test_check_failure_exit_code(self):
        """Test that a failing battery exits with code 3"""
        failing = [SuiteResult("convexity", [Outcome("broken", False, 1.0)])]
        with patch("cli.main.run_suite", return_value=failing):
            code, out, _ = run_cli("check", "convexity")
        self.assertEqual(code, EXIT_INTEGRITY)
        self.assertIn("✗ broken", out)

    def test_check_unknown_suite(self):
        """Test that an unknown suite exits with the validation code"""
        code, _, err = run_cli("check", "nonsense")
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("Validation error", err)

    def test_unknown_command(self):
        """Test that an unknown subcommand exits with the validation code"""
        code, _, _ = run_cli("frobnicate")
        self.assertEqual(code, EXIT_VALIDATION)

    def test_witness_saves_operator(self):
        """Test that witness writes Z + I as a state file"""
        out_path = os.path.join(self.temp_dir, "witness.json")
        code, out, _ = run_cli("witness", "phi:2", "--out", out_path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("detects_entanglement", out)
        with open(out_path) as f:
            saved = StateFile.model_validate(json.load(f))
        self.assertEqual((saved.dimA, saved.dimB), (2, 2))

    def test_dump_sdp(self):
        """Test that dump-sdp writes a loadable problem"""
        out_path = os.path.join(self.temp_dir, "phi2.sdp")
        code, _, _ = run_cli("dump-sdp", "phi:2", "--out", out_path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(load_problem(out_path).num_constraints, 16)


class TestGlobalOptions(unittest.TestCase):
    """Test config loading and overrides"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def test_missing_config(self):
        """Test that a missing config file exits with the validation code"""
        code, _, err = run_cli("--config", os.path.join(self.temp_dir, "none.yaml"), "measure", "phi:2")
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("Error loading config", err)

    def test_invalid_override(self):
        """Test that a negative gap tolerance is rejected"""
        code, _, _ = run_cli("--gap-tol", "-1", "measure", "phi:2")
        self.assertEqual(code, EXIT_VALIDATION)

    def test_negative_seed(self):
        """Test that a negative seed is reported, not raised"""
        code, _, err = run_cli("--seed", "-5000", "check", "twoqubit")
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("Error loading config", err)

    def test_config_file_and_seed(self):
        """Test that --seed overrides the config file"""
        path = Path(self.temp_dir) / "config.yaml"
        path.write_text("checks:\n  seed: 11\n")
        with patch("cli.main.run_suite", return_value=[SuiteResult("convexity", [])]) as run:
            code, _, _ = run_cli("--config", str(path), "--seed", "12", "check", "convexity")
        self.assertEqual(code, EXIT_OK)
        config = run.call_args[0][1]
        self.assertEqual(config.checks.seed, 12)

    def test_solver_verbose_prints_table(self):
        """Test that --solver-verbose prints the iteration table"""
        code, out, _ = run_cli("--solver-verbose", "measure", "phi:2")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("pcost", out)


if __name__ == "__main__":
    unittest.main()

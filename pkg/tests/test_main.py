"""Tests for the CLI entry point and its settings."""
import logging

import pytest

from unsharp import main as entry
from unsharp.cli import commands
from unsharp.config import load_settings


def test_global_flags_override_settings(mocker, data_dir):
    """Test that --seed and --jobs reach the command handler."""
    handler = mocker.Mock(return_value=0)
    mocker.patch.dict(commands.COMMANDS, {"verify": handler})
    assert entry.main(["--seed", "5", "--jobs", "3", "verify", str(data_dir / "nonlattice.ea")]) == 0
    args, settings, _ = handler.call_args.args
    assert args.algebra.endswith("nonlattice.ea")
    assert settings.seed == 5
    assert settings.jobs == 3


def test_invalid_settings_exit_with_input_error(capsys, data_dir):
    """Test that a non-positive job count is rejected before any work."""
    assert entry.main(["--jobs", "0", "verify", str(data_dir / "nonlattice.ea")]) == 2
    assert capsys.readouterr().err.startswith("error: invalid settings")


def test_log_level_comes_from_environment(mocker, monkeypatch, data_dir):
    """Test that LOG_LEVEL configures logging."""
    monkeypatch.setenv("LOG_LEVEL", "debug")
    configure = mocker.patch("unsharp.main.configure_logging")
    entry.main(["order", str(data_dir / "chain3.ea")])
    configure.assert_called_once_with("DEBUG")


def test_configure_logging_sets_package_level():
    """Test that the package logger follows the configured level."""
    entry.configure_logging("WARNING")
    assert logging.getLogger("unsharp").level == logging.WARNING
    entry.configure_logging("NOT-A-LEVEL")
    assert logging.getLogger("unsharp").level == logging.INFO


def test_unknown_subcommand_is_an_argparse_error():
    """Test that argparse rejects unknown commands."""
    with pytest.raises(SystemExit) as exc_info:
        entry.main(["frobnicate"])
    assert exc_info.value.code == 2


def test_table_rejects_unknown_operation():
    """Test that --op only accepts the six operations."""
    with pytest.raises(SystemExit):
        entry.build_parser().parse_args(["table", "x.ea", "--op", "join"])


def test_load_settings_reads_environment(monkeypatch):
    """Test the UNSHARP_* variables."""
    monkeypatch.setenv("UNSHARP_SEED", "7")
    monkeypatch.setenv("UNSHARP_SAMPLE_SIZE", "25")
    monkeypatch.delenv("UNSHARP_JOBS", raising=False)
    settings = load_settings()
    assert settings.seed == 7
    assert settings.sample_size == 25
    assert settings.jobs == 1

import logging

import pytest

from config import ENV_VARS, OracleBudget, configure_logging, get_budget
from errors import ConfigError


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    budget = get_budget()
    assert budget == OracleBudget()
    assert budget.max_cells == 30
    assert budget.spectral_tol == 1e-9
    assert budget.workers == 1


def test_environment_overrides_defaults(monkeypatch):
    monkeypatch.setenv("FOREST_TURAN_BUDGET", "24")
    monkeypatch.setenv("FOREST_TURAN_TOL", "1e-7")
    budget = get_budget()
    assert budget.max_cells == 24
    assert budget.spectral_tol == 1e-7


def test_flags_override_environment(monkeypatch):
    monkeypatch.setenv("FOREST_TURAN_WORKERS", "4")
    assert get_budget(workers=2).workers == 2
    assert get_budget(workers=None).workers == 4


def test_malformed_variable_is_named(monkeypatch):
    monkeypatch.setenv("FOREST_TURAN_MAX_NODES", "lots")
    with pytest.raises(ConfigError, match="FOREST_TURAN_MAX_NODES"):
        get_budget()


def test_out_of_range_value(monkeypatch):
    monkeypatch.setenv("FOREST_TURAN_WORKERS", "0")
    with pytest.raises(ConfigError):
        get_budget()


def test_budget_is_frozen():
    with pytest.raises(Exception):
        OracleBudget().max_cells = 5


@pytest.mark.parametrize("verbosity,level", [(0, logging.WARNING), (1, logging.INFO), (2, logging.DEBUG)])
def test_configure_logging_levels(verbosity, level):
    configure_logging(verbosity)
    assert logging.getLogger().level == level


def test_get_budget_reads_only_the_process_environment(monkeypatch, tmp_path):
    # .env is loaded once by main.py; get_budget itself never reads the file
    (tmp_path / ".env").write_text("FOREST_TURAN_BUDGET=12\n", encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    assert get_budget().max_cells == 30

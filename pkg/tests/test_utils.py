import json
import logging

import pytest

from src.config import _merge_settings, get_settings
from src.core.generators import johnson_graph
from src.errors import ParameterError
from src.schemas.models import GeneratorSpec, GraphFamily
from src.utils.file_ops import FileOps
from src.utils.logging import log_event, setup_logging

# FileOps


def test_write_and_read_graph_with_sidecar(tmp_path):
    ops = FileOps(tmp_path / "out")
    spec = GeneratorSpec(family=GraphFamily.JOHNSON, s=5, d=2)
    path = ops.write_graph("j52.g", johnson_graph(5, 2), sidecar=spec)
    assert path == (tmp_path / "out" / "j52.g").resolve()
    assert ops.has_sidecar("j52.g")
    assert ops.read_sidecar("j52.g", GeneratorSpec) == spec
    g = ops.read_graph("j52.g")
    assert (g.n, g.label) == (10, "J(5,2)")
    assert not list((tmp_path / "out").glob("*.tmp"))


def test_unlabelled_graph_takes_the_file_stem(tmp_path):
    ops = FileOps(tmp_path)
    ops.write_file("square.g", "4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert ops.read_graph("square.g").label == "square"
    assert not ops.has_sidecar("square.g")


def test_for_file_splits_the_path(tmp_path):
    ops, name = FileOps.for_file(tmp_path / "nested" / "report.json")
    assert name == "report.json"
    assert ops.base_path == (tmp_path / "nested").resolve()
    assert ops.write_file(name, "{}\n").read_text() == "{}\n"


def test_path_traversal_is_rejected(tmp_path):
    ops = FileOps(tmp_path / "base")
    with pytest.raises(ParameterError):
        ops.write_file("../escape.txt", "x")


# Event log


def test_log_event_appends_jsonl(tmp_path):
    log_event("scan", {"d": 2}, log_dir=tmp_path)
    path = log_event("scan", {"d": 3}, log_dir=tmp_path)
    entries = [json.loads(line) for line in path.read_text().splitlines()]
    assert [e["payload"]["d"] for e in entries] == [2, 3]
    assert all(e["kind"] == "scan" and "timestamp" in e for e in entries)


def test_log_event_defaults_to_cwd_logs(tmp_path):
    path = log_event("contradiction", {"message": "x"})
    assert path.parent.resolve() == (tmp_path / "logs").resolve()


@pytest.fixture
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield root
    root.handlers[:] = handlers
    root.setLevel(level)


def test_setup_logging_levels(restore_root_logger):
    setup_logging(verbose=True, use_colors=False)
    assert restore_root_logger.level == logging.DEBUG
    setup_logging(verbose=False, use_colors=False)
    assert restore_root_logger.level == logging.WARNING
    assert logging.getLogger("langgraph").level == logging.WARNING


# Settings


def test_default_settings():
    settings = get_settings()
    assert settings.m_d == 6
    assert settings.max_group == 1_000_000
    assert settings.epsilon is None
    assert settings.event_log


def test_max_group_from_environment(monkeypatch):
    monkeypatch.setenv("DRG_MAX_GROUP", "5")
    get_settings.cache_clear()
    assert get_settings().max_group == 5


def test_bad_max_group_is_rejected(monkeypatch):
    monkeypatch.setenv("DRG_MAX_GROUP", "abc")
    get_settings.cache_clear()
    with pytest.raises(ValueError, match="DRG_MAX_GROUP"):
        get_settings()


def test_merge_settings_reads_sections():
    settings = _merge_settings({"classifier": {"m_d": 3, "epsilon": 0.01}, "scan": {"workers": 1}})
    assert (settings.m_d, settings.epsilon, settings.scan_workers) == (3, 0.01, 1)
    assert _merge_settings({}).eta_d == 0.01

import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core import config as core_config


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Every test sees an empty config file and no guard override"""
    monkeypatch.setattr(core_config, "CONFIG_PATH", str(tmp_path / "patternhall_config.json"))
    monkeypatch.delenv(core_config.SIZE_GUARD_ENV, raising=False)
    core_config.reload_config()
    yield
    core_config.reload_config()


@pytest.fixture
def series_file(tmp_path):
    def write(text, name="series.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write

"""Tests for environment configuration and the on-disk triple cache."""

from __future__ import annotations

import json
import logging
import os

import pytest

from horncone.cache import CACHE_FORMAT, TripleCache
from horncone.config import DEFAULT_CACHE_DIR, HornConfig, default_jobs, resolve_cache_dir
from horncone.horn_classical import horn_triple_table


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("HORNCONE_CACHE", "HORNCONE_JOBS", "HORNCONE_NO_CACHE", "HORNCONE_DEBUG"):
        monkeypatch.delenv(name, raising=False)


# ---------------------------------------------------------------------------
# HornConfig
# ---------------------------------------------------------------------------


class TestHornConfig:
    def test_defaults(self):
        config = HornConfig()
        assert config.cache_dir == DEFAULT_CACHE_DIR
        assert config.jobs == 1
        assert config.use_cache
        assert not config.debug

    def test_from_env_defaults(self):
        config = HornConfig.from_env()
        assert config.jobs == default_jobs()
        assert config.cache_dir == os.path.abspath(DEFAULT_CACHE_DIR)
        assert config.use_cache

    def test_from_env_reads_variables(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HORNCONE_CACHE", str(tmp_path))
        monkeypatch.setenv("HORNCONE_JOBS", "3")
        monkeypatch.setenv("HORNCONE_NO_CACHE", "yes")
        monkeypatch.setenv("HORNCONE_DEBUG", "1")
        config = HornConfig.from_env()
        assert config.cache_dir == str(tmp_path)
        assert config.jobs == 3
        assert not config.use_cache
        assert config.debug

    def test_bad_jobs(self, monkeypatch):
        monkeypatch.setenv("HORNCONE_JOBS", "many")
        with pytest.raises(ValueError, match="HORNCONE_JOBS"):
            HornConfig.from_env()
        monkeypatch.setenv("HORNCONE_JOBS", "0")
        with pytest.raises(ValueError, match="jobs must be >= 1"):
            HornConfig.from_env()


def test_resolve_cache_dir_precedence(monkeypatch, tmp_path):
    explicit = tmp_path / "explicit"
    monkeypatch.setenv("HORNCONE_CACHE", str(tmp_path / "env"))
    assert resolve_cache_dir(str(explicit)) == str(explicit)
    assert resolve_cache_dir() == str(tmp_path / "env")
    monkeypatch.delenv("HORNCONE_CACHE")
    assert resolve_cache_dir() == os.path.abspath(DEFAULT_CACHE_DIR)


# ---------------------------------------------------------------------------
# TripleCache
# ---------------------------------------------------------------------------


class TestTripleCache:
    def test_missing_table(self, tmp_path):
        assert TripleCache(str(tmp_path)).load(3, 1) is None

    def test_store_and_load(self, tmp_path):
        cache = TripleCache(str(tmp_path / "nested"))
        table = horn_triple_table(3, 2)
        path = cache.store(table)
        assert path == cache.path_for(3, 2)
        with open(path, encoding="utf-8") as f:
            assert json.load(f)["format"] == CACHE_FORMAT
        loaded = cache.load(3, 2)
        assert loaded is not None
        assert loaded.triples == table.triples
        assert not [name for name in os.listdir(cache.directory) if name.endswith(".tmp")]

    def test_clear(self, tmp_path):
        cache = TripleCache(str(tmp_path))
        assert cache.clear() == 0
        cache.store(horn_triple_table(3, 1))
        cache.store(horn_triple_table(3, 2))
        (tmp_path / "notes.txt").write_text("keep me")
        assert cache.clear() == 2
        assert os.listdir(tmp_path) == ["notes.txt"]

    def test_corrupt_file_is_ignored(self, tmp_path, caplog):
        cache = TripleCache(str(tmp_path))
        with open(cache.path_for(3, 1), "w", encoding="utf-8") as f:
            f.write("{not json")
        with caplog.at_level(logging.WARNING, logger="horncone.cache"):
            assert cache.load(3, 1) is None
        assert "unreadable" in caplog.text

    def test_format_mismatch_is_ignored(self, tmp_path, caplog):
        cache = TripleCache(str(tmp_path))
        payload = {"format": CACHE_FORMAT + 1, **horn_triple_table(3, 1).to_dict()}
        with open(cache.path_for(3, 1), "w", encoding="utf-8") as f:
            json.dump(payload, f)
        with caplog.at_level(logging.WARNING, logger="horncone.cache"):
            assert cache.load(3, 1) is None
        assert "format" in caplog.text

    def test_wrong_table_in_file(self, tmp_path, caplog):
        cache = TripleCache(str(tmp_path))
        payload = {"format": CACHE_FORMAT, **horn_triple_table(3, 1).to_dict()}
        with open(cache.path_for(4, 1), "w", encoding="utf-8") as f:
            json.dump(payload, f)
        with caplog.at_level(logging.WARNING, logger="horncone.cache"):
            assert cache.load(4, 1) is None
        assert "n=3 r=1" in caplog.text

    def test_directory_from_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HORNCONE_CACHE", str(tmp_path))
        assert TripleCache().directory == str(tmp_path)

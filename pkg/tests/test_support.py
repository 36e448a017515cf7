import pytest

from config import Config
from core.cover import SolverBudget
from core.utils import SimpleLRUCache
from storage import LocalStorage, get_storage_backend


class TestConfig:

    def test_defaults_validate(self):
        Config.validate()

    def test_rejects_non_positive_budget(self, monkeypatch):
        monkeypatch.setattr(Config, 'BUDGET', 0)
        with pytest.raises(ValueError):
            Config.validate()

    def test_rejects_zero_jobs(self, monkeypatch):
        monkeypatch.setattr(Config, 'JOBS', 0)
        with pytest.raises(ValueError):
            Config.validate()

    def test_low_budget_warns(self, monkeypatch, caplog):
        monkeypatch.setattr(Config, 'BUDGET', 10)
        Config.validate()
        assert "very low" in caplog.text

    def test_solver_budget_from_config(self, monkeypatch):
        monkeypatch.setattr(Config, 'BUDGET', 1234)
        monkeypatch.setattr(Config, 'TIMEOUT', 2.5)
        assert SolverBudget.from_config() == SolverBudget(1234, 2.5)


class TestLocalStorage:

    def test_text_round_trip(self, tmp_path):
        storage = LocalStorage(str(tmp_path))
        assert storage.save_text('a/b.txt', 'hello')
        assert storage.get_text('a/b.txt') == 'hello'

    def test_missing_file(self, tmp_path):
        storage = LocalStorage(str(tmp_path))
        assert storage.get_file('nope') is None

    def test_append_line(self, tmp_path):
        storage = LocalStorage(str(tmp_path))
        storage.append_line('trace.jsonl', '{"a": 1}')
        storage.append_line('trace.jsonl', '{"a": 2}\n')
        assert storage.get_text('trace.jsonl') == '{"a": 1}\n{"a": 2}\n'

    def test_absolute_paths_bypass_base_dir(self, tmp_path):
        storage = LocalStorage(str(tmp_path / 'base'))
        target = tmp_path / 'elsewhere.txt'
        assert storage.save_text(str(target), 'x')
        assert target.read_text() == 'x'

    def test_factory_uses_output_dir(self, monkeypatch, tmp_path):
        monkeypatch.setattr(Config, 'OUTPUT_DIR', str(tmp_path))
        storage = get_storage_backend()
        assert isinstance(storage, LocalStorage)
        assert storage.base_dir == str(tmp_path)


class TestLRUCache:

    def test_eviction_order(self):
        cache = SimpleLRUCache(capacity=2)
        cache.set('a', 1)
        cache.set('b', 2)
        assert cache.get('a') == 1
        cache.set('c', 3)
        assert cache.get('b') is None
        assert cache.get('a') == 1
        assert cache.get('c') == 3

    def test_get_or_compute_caches(self):
        cache = SimpleLRUCache()
        calls = []

        def compute():
            calls.append(1)
            return 42

        assert cache.get_or_compute('k', compute) == 42
        assert cache.get_or_compute('k', compute) == 42
        assert len(calls) == 1

    def test_failures_are_not_cached(self):
        cache = SimpleLRUCache()

        def boom():
            raise RuntimeError("no")

        with pytest.raises(RuntimeError):
            cache.get_or_compute('k', boom)
        assert cache.get('k') is None

import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from trickle.logger import LogLevel, get_logger
from trickle.logger.logger import CustomFormatter, JSONFormatter
from trickle.misc import Memo, runtime_info
from trickle.serializer import deserialize, serialize
from trickle.settings import get_settings, override_settings


def test_memo_counts_hits_and_misses() -> None:
    """A second lookup of the same key is served from the table."""
    memo: Memo[str, int] = Memo("test")
    calls: list[int] = []

    def compute() -> int:
        calls.append(1)
        return 42

    assert memo.get_or_compute("a", compute) == memo.get_or_compute("a", compute)
    assert len(calls) == 1
    assert (memo.hits, memo.misses, len(memo)) == (1, 1, 1)
    memo.clear()
    assert (memo.hits, memo.misses, len(memo)) == (0, 0, 0)


def test_memo_evicts_least_recently_used() -> None:
    """A full table drops the entry that went longest without a lookup."""
    capacity = 2
    memo: Memo[str, int] = Memo("bounded", max_entries=capacity)
    memo.get_or_compute("a", lambda: 1)
    memo.get_or_compute("b", lambda: 2)
    memo.get_or_compute("a", lambda: 1)
    memo.get_or_compute("c", lambda: 3)
    assert len(memo) == capacity
    assert memo.evictions == 1
    assert memo.get_or_compute("a", lambda: -1) == 1
    assert memo.get_or_compute("b", lambda: -2) == -2
    with pytest.raises(ValueError, match="at least one entry"):
        Memo("empty", max_entries=0)


def test_memo_bound_follows_settings() -> None:
    """Without an explicit bound the table reads it from the settings."""
    capacity = 3
    inserted = 10
    memo: Memo[int, int] = Memo("settings")
    override_settings(memo_max_entries=capacity)
    try:
        for k in range(inserted):
            memo.get_or_compute(k, lambda k=k: k)
        assert len(memo) == memo.capacity == capacity
        assert memo.evictions == inserted - capacity
    finally:
        override_settings()


def test_memo_under_threads() -> None:
    """Concurrent lookups agree on every value."""
    memo: Memo[int, int] = Memo("threads")
    keys = [i % 7 for i in range(200)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        values = list(pool.map(lambda k: memo.get_or_compute(k, lambda: k * k), keys))
    assert values == [k * k for k in keys]
    assert len(memo) == len(set(keys))


def test_runtime_info() -> None:
    """Elapsed time, uptime and resident memory are all non-negative."""
    info = runtime_info(time.perf_counter())
    assert info.elapsed_seconds >= 0
    assert info.uptime_seconds >= 0
    assert info.memory_mb > 0


def test_serializer_sorts_keys_and_handles_arrays() -> None:
    """Keys are sorted, arrays and sets become lists."""
    text = serialize({"b": np.arange(3), "a": frozenset({2, 1})})
    assert text == '{"a":[1,2],"b":[0,1,2]}'
    assert deserialize(text) == {"a": [1, 2], "b": [0, 1, 2]}
    assert serialize({"x": 1}, indent=True) == '{\n  "x": 1\n}'
    with pytest.raises(TypeError):
        serialize({"x": object()})


def test_log_level_from_string() -> None:
    """Names are case insensitive and unknown names fall back."""
    assert LogLevel.from_str("debug", LogLevel.INFO) is LogLevel.DEBUG
    assert LogLevel.from_str("loud", LogLevel.WARNING) is LogLevel.WARNING


def test_logger_has_one_handler() -> None:
    """Repeated lookups reuse the stderr handler."""
    first = get_logger("trickle.tests.handlers", LogLevel.DEBUG)
    second = get_logger("trickle.tests.handlers")
    assert first is second
    assert len(second.handlers) == 1
    assert second.level == LogLevel.get_default_value().value


def test_formatters_render_extras() -> None:
    """Extra fields show up in both the text and the JSON line."""
    record = logging.makeLogRecord(
        {"name": "trickle.x", "levelname": "INFO", "msg": "Built", "face": "codim=2"}
    )
    assert "face=codim=2" in CustomFormatter("%(message)s").format(record)
    payload = deserialize(JSONFormatter().format(record))
    assert isinstance(payload, dict)
    assert payload["message"] == "Built"
    assert payload["face"] == "codim=2"


def test_settings_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    """Overrides beat the environment and an empty override restores it."""
    cap = 123
    monkeypatch.setenv("TRICKLE_CAP_ENUM", str(cap))
    assert override_settings().cap_enum == cap
    override = 5
    assert override_settings(cap_enum=override).cap_enum == override
    assert get_settings().cap_enum == override
    assert override_settings().cap_enum == cap

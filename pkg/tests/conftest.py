import pytest
from hypothesis import HealthCheck, settings

from qfock import cache

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _no_disk_cache(monkeypatch):
    # tests never read a cache left behind by an earlier run
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    cache.set_cache_dir(None)
    yield
    cache.set_cache_dir(None)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])

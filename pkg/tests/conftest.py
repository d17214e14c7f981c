import os
import sys
import time

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow], derandomize=True)
settings.load_profile("default")

_START = time.perf_counter()


def _suite_time_ok():
    import test_acceptance
    return time.perf_counter() - _START <= test_acceptance.SUITE_LIMIT


def pytest_sessionfinish(session, exitstatus):
    if "test_acceptance" in sys.modules and not _suite_time_ok():
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        tr.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    elapsed = time.perf_counter() - _START
    verdict = "PASS" if elapsed <= mod.SUITE_LIMIT else "FAIL"
    tr.write_line(f"suite time: {verdict}  {elapsed:.1f}s (limit {mod.SUITE_LIMIT:.0f}s)")

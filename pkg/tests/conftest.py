import os
import warnings

import pytest
from hypothesis import settings

from mincode.construction import CodeDescriptor, build_code
from mincode.gf import make_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def descriptor(q, m, k, alpha=()):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return CodeDescriptor.from_q(q, m, k, alpha)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3, 1)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def d342():
    return descriptor(3, 4, 2)


@pytest.fixture(scope="session")
def cf342(d342):
    return build_code(d342)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion (a criterion fails if any of its cases fail)."""
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", ()))
            if "criterion" not in props or report.when not in ("call", "setup"):
                continue
            key = props["criterion"]
            ok = outcome == "passed"
            verdicts[key] = verdicts.get(key, True) and ok
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(verdicts, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if verdicts[key] else 'FAIL'}  {key}")

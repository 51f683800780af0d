from collections import defaultdict

import pytest

_CRITERIA: dict[int, list[tuple[str, str, str]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ok = rep.passed and not hasattr(rep, "wasxfail")
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        if hasattr(rep, "wasxfail"):
            detail = (detail + "; " if detail else "") + f"expected failure: {rep.wasxfail}"
        _CRITERIA[marker.args[0]].append((item.name, "PASS" if ok else "FAIL", detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        rows = _CRITERIA[n]
        status = "PASS" if all(s == "PASS" for _, s, _ in rows) else "FAIL"
        parts = [f"{name} {s}" + (f" ({d})" if d else "") for name, s, d in rows]
        terminalreporter.write_line(f"criterion {n}: {status} | " + " | ".join(parts))

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


_CRITERIA: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, text): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            cid, text = mark.args
            entry = _CRITERIA.setdefault(cid, {"text": text, "failed": [], "count": 0})
            entry["count"] += 1
            item.user_properties.append(("criterion", cid))


def pytest_runtest_logreport(report):
    cid = dict(report.user_properties).get("criterion")
    if cid is None:
        return
    if report.failed or (report.when == "call" and report.skipped):
        entry = _CRITERIA[cid]
        if report.nodeid not in entry["failed"]:
            entry["failed"].append(report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid, entry in sorted(_CRITERIA.items(), key=lambda kv: kv[0]):
        status = "FAIL" if entry["failed"] else "PASS"
        tr.write_line(f"[{status}] criterion {cid}: {entry['text']}")
        for nodeid in entry["failed"]:
            tr.write_line(f"         failing: {nodeid}")

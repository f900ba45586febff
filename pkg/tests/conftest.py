import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

# Cross product data are drawn and then filtered on the cross product checks,
# so most draws are discarded by design.
settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion, when the acceptance tests ran."""
    module = sys.modules.get("test_acceptance")
    if module is None:
        return
    ran = {int(r.nodeid.split("test_criterion_")[1].split("_")[0])
           for key in ("passed", "failed", "error")
           for r in terminalreporter.stats.get(key, []) if "test_criterion_" in r.nodeid}
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ran):
        terminalreporter.write_line(module.RESULTS.get(n, f"criterion {n}: FAIL  no verdict recorded (error)"))

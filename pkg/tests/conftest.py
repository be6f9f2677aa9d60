from hypothesis import HealthCheck, settings, strategies as st

from brauerann.diagram import BrauerDiagram

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def diagrams(draw, n=None, max_n=4):
    n = n if n is not None else draw(st.integers(1, max_n))
    labels = draw(st.permutations(list(range(1, 2 * n + 1))))
    return BrauerDiagram(n, tuple((labels[2 * k], labels[2 * k + 1]) for k in range(n)))


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1]
        _CRITERIA[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        terminalreporter.write_line(f"{_CRITERIA[name]:4}  {name}")

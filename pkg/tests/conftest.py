from fractions import Fraction

from hypothesis import strategies as st

rationals = st.builds(
    Fraction, st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=12)
)


def rational_lists(min_size=0, max_size=16):
    return st.lists(rationals, min_size=min_size, max_size=max_size)


_criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria.append((value, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_criteria, key=lambda c: int(c[0].split()[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {label}")

import sys

from hypothesis import settings

# exact symbolic arithmetic has uneven timings; correctness, not speed, is under test here
settings.register_profile("exact", deadline=None, max_examples=50)
settings.load_profile("exact")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])

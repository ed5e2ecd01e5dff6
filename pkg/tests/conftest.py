import sys

from hypothesis import settings

settings.register_profile("rootloci", deadline=None, max_examples=100)
settings.load_profile("rootloci")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results):
            terminalreporter.write_line(results[key])

import pytest

from classforge import kernels


@pytest.fixture(scope="session", autouse=True)
def compiled_kernels():
    """Compile (or load cached) kernels once so timings measure work, not JIT."""
    kernels.warmup()


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        title, ok, seconds, note = results[num]
        line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  ({seconds:6.2f} s)  {title}"
        if note:
            line += f"  -- {note}"
        terminalreporter.write_line(line)

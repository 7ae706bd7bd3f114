import os
from pathlib import Path

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def naive_reciprocal_bits(bits):
    """Per-coefficient recurrence: fbar_n = sum_{1<=j<=n} f_j fbar_{n-j} (mod 2)."""
    n = len(bits)
    out = [0] * n
    out[0] = 1
    for m in range(1, n):
        acc = 0
        for j in range(1, m + 1):
            acc ^= bits[j] & out[m - j]
        out[m] = acc
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

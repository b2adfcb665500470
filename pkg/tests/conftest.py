import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from fiberfield.exact import Moebius, ratfunc

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("long", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# the flagship triple, coefficients low to high
V_COEFFS = ([0, 0, 0, -4, 3], [1])
A_COEFFS = ([0, 0, -512000, 19200, -240, 1], [1048576, 655360, 153600, 16000, 625])
B_COEFFS = ([0, 0, 40, -20, 10, -3], [32, 0, 0, -20, 15])


@pytest.fixture(scope="session")
def V():
    return ratfunc(*V_COEFFS)


@pytest.fixture(scope="session")
def A():
    return ratfunc(*A_COEFFS)


@pytest.fixture(scope="session")
def B():
    return ratfunc(*B_COEFFS)


small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
nonzero_rationals = small_rationals.filter(bool)


@st.composite
def rational_maps(draw, min_degree=2, max_degree=6):
    """Random V over Q with coprime numerator and denominator and degree in range."""
    d = draw(st.integers(min_degree, max_degree))
    dn = draw(st.integers(0, d))
    num_deg, den_deg = draw(st.sampled_from([(d, dn), (dn, d)]))
    num = draw(st.lists(small_rationals, min_size=num_deg + 1, max_size=num_deg + 1))
    den = draw(st.lists(small_rationals, min_size=den_deg + 1, max_size=den_deg + 1))
    num[-1] = num[-1] or Fraction(1)
    den[-1] = den[-1] or Fraction(1)
    f = ratfunc(num, den)
    assume(f.degree == d)
    return f


def moebius_maps():
    quads = st.tuples(small_rationals, small_rationals, small_rationals, small_rationals)
    return quads.filter(lambda t: t[0] * t[3] != t[1] * t[2]).map(lambda t: Moebius(*t))


_SESSION_START = []


def pytest_sessionstart(session):
    import time
    _SESSION_START.append(time.perf_counter())


def pytest_terminal_summary(terminalreporter):
    import sys
    import time
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        title, ok, secs = mod.RESULTS[n]
        tr.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title} ({secs:.2f}s)")
    total = time.perf_counter() - _SESSION_START[0]
    tr.write_line(f"session time {total:.1f}s (limit 300s): {'PASS' if total < 300 else 'FAIL'}")

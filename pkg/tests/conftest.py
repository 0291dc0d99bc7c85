from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from qsphere.exactq import Poly, RatQ

settings.register_profile("default", deadline=None)
settings.load_profile("default")

small_fracs = st.builds(Fraction, st.integers(-9, 9), st.sampled_from([1, 1, 1, 2, 3]))


@st.composite
def polys(draw, max_degree=8, allow_zero=True):
    deg = draw(st.integers(0, max_degree))
    coeffs = draw(st.lists(small_fracs, min_size=deg + 1, max_size=deg + 1))
    p = Poly(enumerate(coeffs))
    if not allow_zero and p.is_zero():
        p = Poly.const(1)
    return p


@st.composite
def ratqs(draw, max_degree=8):
    num = draw(polys(max_degree))
    den = draw(polys(max_degree, allow_zero=False))
    shift = draw(st.integers(-3, 3))
    x = RatQ(num, den)
    return x * RatQ.q_power(shift)


# rational points that avoid 0, +-1
eval_points = st.fractions(min_value=-4, max_value=4, max_denominator=7).filter(lambda v: v not in (0, 1, -1))


# -- acceptance summary ----------------------------------------------------------

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _ACCEPTANCE.get(report.nodeid)
        if prev != "failed":
            _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    import importlib

    terminalreporter.section("acceptance criteria")
    mod = importlib.import_module("test_acceptance")
    for nodeid, outcome in sorted(_ACCEPTANCE.items()):
        name = nodeid.split("::")[1]
        func = getattr(mod, name.split("[")[0])
        label = (func.__doc__ or name).strip()
        param = name[len(name.split("[")[0]):]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {label}{' ' + param if param else ''}")

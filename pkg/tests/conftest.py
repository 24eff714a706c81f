import math

import pytest

from slideocam import DesignParams
from slideocam._backend import _pykernels

try:
    from slideocam import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def kern(request):
    return request.param


@pytest.fixture
def compromise():
    """Three-cam compromise design."""
    return DesignParams(eta=0.37, a4=9.0, cams=3)


@pytest.fixture
def limit_design():
    """Two-cam design at the convexity limit."""
    eta = 1.0 / math.pi
    return DesignParams(eta=eta, a4=eta * 50.0 - 9.5)


_ACCEPTANCE = {}


def record_acceptance(number, ok, detail):
    _ACCEPTANCE[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")

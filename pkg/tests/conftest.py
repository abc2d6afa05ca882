import numpy as np
import pytest
from hypothesis import strategies as st

from wwk import _kernels_py
from wwk.interferometer import DetectorPair

try:
    from wwk import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
BACKENDS.append(
    pytest.param(_kernels_c, id="cython", marks=pytest.mark.skipif(_kernels_c is None, reason="extension not built"))
)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


def _unit(z):
    z = np.asarray(z, dtype=np.complex128)
    return z / np.linalg.norm(z)


@st.composite
def detector_pairs(draw, min_dim=2, max_dim=8):
    """Random pure detector pairs from a hypothesis-chosen seed and dimension."""
    dim = draw(st.integers(min_dim, max_dim))
    seed = draw(st.integers(0, 2**32 - 1))
    g = np.random.default_rng(seed)
    za = g.standard_normal(dim) + 1j * g.standard_normal(dim)
    zb = g.standard_normal(dim) + 1j * g.standard_normal(dim)
    return DetectorPair(_unit(za), _unit(zb))


@st.composite
def two_qubit_amplitudes(draw):
    """(alpha, beta) complex with |alpha|^2 + |beta|^2 = 1."""
    V = draw(st.floats(0.0, 1.0))
    pa, pb = draw(st.floats(-np.pi, np.pi)), draw(st.floats(-np.pi, np.pi))
    return np.sqrt(V) * np.exp(1j * pa), np.sqrt(1.0 - V) * np.exp(1j * pb)


# one PASS/FAIL line per acceptance criterion, driven by the real test outcome
_CRITERIA = {}
_DETAILS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.fixture
def detail(request):
    marker = request.node.get_closest_marker("criterion")

    def record(text):
        _DETAILS[marker.args[0]] = text

    return record


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n = marker.args[0]
    ok = call.excinfo is None
    _CRITERIA[n] = _CRITERIA.get(n, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status = "PASS" if _CRITERIA[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {_DETAILS.get(n, '')}".rstrip())

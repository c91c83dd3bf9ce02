import numpy as np
import pytest

from nfedof import ArrayConfig, LinkGeometry, wavelength_for

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # surface the acceptance pass/fail lines even when capture hides
    # per-test stdout
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(number, ok, detail):
        line = f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return record


@pytest.fixture
def lam29():
    return wavelength_for(29e9)


@pytest.fixture
def wall_tx(lam29):
    # wide half-wavelength transmitter used by the profile fixtures
    return ArrayConfig(256, lam29 / 2)


@pytest.fixture
def desk_arrays(lam29):
    # desk-scale pair: 4-element terminal spanning 2.75 cm against three
    # half-wavelength subarrays spanning about 30 cm
    tx = ArrayConfig(4, 0.0275 / 4)
    rx = ArrayConfig(12, lam29 / 2,
                     subarray_layout=((4, -0.13625), (4, 0.0), (4, 0.13625)))
    return tx, rx


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)

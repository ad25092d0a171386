from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from discharge_lab import fixtures
from discharge_lab.corpus import CorpusSpec, generate

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def plane_graphs(draw, n_min=1, n_max=10, class_filter=None, maximal=None):
    """One generated plane graph; seeds drawn so shrinking stays meaningful."""
    seed = draw(st.integers(0, 2**32 - 1))
    filt = draw(st.booleans()) if class_filter is None else class_filter
    mx = draw(st.sampled_from([0.0, 0.5, 1.0])) if maximal is None else maximal
    spec = CorpusSpec(n_min=n_min, n_max=n_max, count=1, seed=seed, class_filter=filt, maximal=mx)
    return next(generate(spec))


def in_class_graphs(n_min=1, n_max=10):
    return plane_graphs(n_min=n_min, n_max=n_max, class_filter=True)


@pytest.fixture(scope="session")
def fx():
    """Fixture graph by name: ``fx("K4") -> PlaneGraph``."""
    return fixtures.graph


@pytest.fixture(scope="session")
def small_corpus():
    spec = CorpusSpec(n_min=3, n_max=10, count=150, seed=11, maximal=0.3)
    return list(generate(spec))


# acceptance criteria report their verdicts here; printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])

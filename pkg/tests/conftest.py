import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from lattika.core import relabel
from lattika.enumerate import enumerate_up_to
from lattika.fixtures import FIXTURES

sys.path.insert(0, str(Path(__file__).parent))

FIXTURE_DIR = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL = enumerate_up_to(6).lattices


@st.composite
def lattices(draw, pool=SMALL):
    """A corpus lattice under a random relabeling."""
    L = draw(st.sampled_from(pool))
    perm = draw(st.permutations(range(L.n)))
    return relabel(L, perm)


@st.composite
def modular_lattices(draw):
    from lattika.core import is_modular

    return draw(lattices(pool=[L for L in SMALL if is_modular(L)]))


@pytest.fixture(params=sorted(FIXTURES))
def fixture_name(request):
    return request.param


@pytest.fixture
def M3():
    return FIXTURES["M3"]()


@pytest.fixture
def N5():
    return FIXTURES["N5"]()


@pytest.fixture
def B2():
    return FIXTURES["B2"]()


@pytest.fixture
def C3():
    return FIXTURES["C3"]()


@pytest.fixture
def C2():
    return FIXTURES["C2"]()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

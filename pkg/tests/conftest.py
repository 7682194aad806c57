import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from weldknot.codec import GaussCode, GaussSymbol, parse  # noqa: E402
from weldknot.corpus import CORPUS  # noqa: E402

# sympy oracles have uneven first-call costs; timing is checked in the acceptance suite
settings.register_profile("default", deadline=None)
settings.load_profile("default")

TREFOIL = "O1+U2+O3+U1+O2+U3+"


@pytest.fixture
def trefoil() -> GaussCode:
    return parse(TREFOIL)


@pytest.fixture
def figure8() -> GaussCode:
    return CORPUS["4_1"].code


@st.composite
def gauss_codes(draw, max_crossings: int = 5) -> GaussCode:
    """Arbitrary valid signed Gauss codes (virtual knots, not necessarily classical)."""
    n = draw(st.integers(0, max_crossings))
    ids = draw(st.permutations(range(1, n + 1))) if n else []
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    symbols = [GaussSymbol(o, c, s) for c, s in zip(ids, signs) for o in (True, False)]
    order = draw(st.permutations(range(len(symbols)))) if symbols else []
    return GaussCode(symbols[i] for i in order)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

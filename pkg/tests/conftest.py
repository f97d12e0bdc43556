import numpy as np
import pytest
from hypothesis import strategies as st

from gadj import _kernels
from gadj.blade import Blade, sign_oracle
from gadj.multivector import Multivector


@pytest.fixture(params=["compiled", "python"])
def backend(request):
    if request.param not in _kernels.available():
        pytest.skip("compiled kernels not built")
    with _kernels.use_backend(request.param) as k:
        yield k


@st.composite
def blades(draw, m=None, max_m=12):
    if m is None:
        m = draw(st.integers(1, max_m))
    return Blade(draw(st.integers(0, (1 << m) - 1)), m)


@st.composite
def blade_tuples(draw, k, max_m=12):
    m = draw(st.integers(1, max_m))
    return tuple(draw(blades(m=m)) for _ in range(k))


@st.composite
def multivectors(draw, m, max_terms=8):
    terms = draw(
        st.lists(
            st.tuples(st.integers(0, (1 << m) - 1), st.integers(-4, 4)),
            max_size=max_terms,
        )
    )
    return Multivector(m, terms)


def naive_product(x: Multivector, y: Multivector) -> Multivector:
    """Double loop over terms using the bubble-sort sign oracle."""
    acc = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            s = sign_oracle(Blade(a, x.m), Blade(b, y.m))
            acc[a ^ b] = acc.get(a ^ b, 0.0) + s * ca * cb
    return Multivector(x.m, acc)


def random_masks(rng, m, size):
    return np.sort(rng.choice(1 << m, size=min(size, 1 << m), replace=False)).astype(np.uint64)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

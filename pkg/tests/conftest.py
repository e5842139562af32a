from functools import lru_cache

from hypothesis import strategies as st

from semiclose import kernel
from semiclose.fixtures import FIXTURES
from semiclose.oracle import EnumerationSpec, enumerate_semigroups


@lru_cache(maxsize=None)
def all_of_order(n, commutative=False, iso=False):
    return tuple(enumerate_semigroups(EnumerationSpec(n, commutative, iso)))


def small_semigroups(max_order=3):
    return [S for n in range(1, max_order + 1) for S in all_of_order(n)]


@st.composite
def semigroups(draw, max_order=3, constructions=True):
    """Labeled semigroups of order <= max_order, sometimes extended or multiplied."""
    S = draw(st.sampled_from(small_semigroups(max_order)))
    if not constructions:
        return S
    how = draw(st.sampled_from(["plain", "plain", "zero", "one", "product"]))
    if how == "zero":
        return kernel.zero_extension(S)
    if how == "one":
        return kernel.one_extension(S)
    if how == "product":
        T = draw(st.sampled_from(small_semigroups(2)))
        return kernel.direct_product(S, T)
    return S


fixture_names = sorted(FIXTURES)


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def record(number, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])

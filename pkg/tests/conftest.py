from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lieop import Matrix, Vector
from lieop.catalog import get_entry

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def matrices(n: int, m: int | None = None, elements=small_fractions):
    m = n if m is None else m
    return st.lists(
        st.lists(elements, min_size=m, max_size=m), min_size=n, max_size=n
    ).map(Matrix)


def vectors(n: int, elements=small_fractions):
    return st.lists(elements, min_size=n, max_size=n).map(Vector)


GRID = (Fraction(-1), Fraction(0), Fraction(1))


@pytest.fixture(scope="session")
def aff1():
    return get_entry("aff1")


@pytest.fixture(scope="session")
def heis3():
    return get_entry("heis3")


@pytest.fixture(scope="session")
def sl2():
    return get_entry("sl2")


@pytest.fixture(scope="session")
def abelian2():
    return get_entry("abelian_2")

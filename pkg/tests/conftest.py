from __future__ import annotations

import pytest

from kempe.graph import builtin_fixture
from kempe.harness import delta_critical_corpus


@pytest.fixture(scope="session")
def triangle():
    return builtin_fixture("triangle")


@pytest.fixture(scope="session")
def c5():
    return builtin_fixture("c5")


@pytest.fixture(scope="session")
def k4():
    return builtin_fixture("k4")


@pytest.fixture(scope="session")
def k6():
    return builtin_fixture("k6")


@pytest.fixture(scope="session")
def pstar():
    return builtin_fixture("pstar")


@pytest.fixture(scope="session")
def splitk4():
    return builtin_fixture("splitk4")


@pytest.fixture(scope="session")
def critical_corpus_small():
    """Delta-critical graphs up to 6 vertices (quick; the full n <= 8 sweep
    lives in the acceptance module)."""
    return delta_critical_corpus(6)

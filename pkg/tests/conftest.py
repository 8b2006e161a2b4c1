import pathlib

import pytest

from novikov.algebra import Algebra, regular
from novikov.fields import GF, QQ
from novikov.fixtures import example_algebra, example_beta, example_t

REPO = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"


@pytest.fixture
def a2():
    return example_algebra(QQ)


@pytest.fixture
def a2_f3():
    return example_algebra(GF(3))


@pytest.fixture
def a2_regular(a2):
    return regular(a2)


@pytest.fixture
def t2():
    return example_t(QQ)


@pytest.fixture
def beta2():
    return example_beta(QQ)


@pytest.fixture
def fixture_path():
    def inner(name: str) -> str:
        return str(FIXTURES / name)

    return inner

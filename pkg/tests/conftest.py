import pytest

from rotaperm.field import FieldCtx


@pytest.fixture(scope="session")
def f8():
    return FieldCtx(3)


@pytest.fixture(scope="session")
def f32():
    return FieldCtx(5)


@pytest.fixture(scope="session")
def f128():
    return FieldCtx(7)

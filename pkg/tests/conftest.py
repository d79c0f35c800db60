import pytest

from essplit import split_matroid
from essplit.showcase import showcase_context


@pytest.fixture(scope="session")
def wheel_ctx():
    return showcase_context()


@pytest.fixture(scope="session")
def wheel_split(wheel_ctx):
    oracle = split_matroid(wheel_ctx)
    oracle.circuits()  # warm the cache once for the whole session
    return oracle

import pytest

from kolafreq import kolakoski_prefix


@pytest.fixture(scope="session")
def kprefix_1m() -> str:
    return kolakoski_prefix(10**6, 2)

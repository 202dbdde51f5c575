import pytest

from prnwords.acceptance import DEFAULT_SEED


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomised acceptance checks")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")

import random

import pytest

from branes.models import Brane, extended_walcher
from mellin_barnes.models import Precision


@pytest.fixture
def prec64() -> Precision:
    return Precision(64)


@pytest.fixture
def walcher() -> Brane:
    return extended_walcher()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1337)

import os

import numpy as np
import pytest

# Unit tests run serial by default; parallelism is exercised explicitly where
# it is the thing under test.
os.environ.setdefault("XXZCHAOS_WORKERS", "1")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)

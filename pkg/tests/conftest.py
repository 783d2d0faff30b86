import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chibounds import _kernels


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the jit kernels once so timed tests measure work, not compilation
    _kernels.warmup()

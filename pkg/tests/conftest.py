import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclo_scan import _backend, _pykernels  # noqa: E402

KERNELS = [pytest.param(_pykernels, id="python")]
if _backend.COMPILED:
    KERNELS.append(pytest.param(_backend.kernels, id="cython"))


@pytest.fixture(params=KERNELS)
def kernels(request):
    return request.param

import pytest

from bianchi_klf.numfield import SUPPORTED_D, ImagQuadField


@pytest.fixture(params=SUPPORTED_D, ids=lambda d: f"d{d}")
def field(request):
    return ImagQuadField.of(request.param)


@pytest.fixture
def gauss():
    return ImagQuadField.of(-1)

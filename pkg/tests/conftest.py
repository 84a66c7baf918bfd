import pytest

from demonlab import Grid, centered_box


@pytest.fixture
def grid():
    return Grid(4096, -8.0, 8.0)


@pytest.fixture
def box():
    return centered_box(2.0)

import pytest

from tetmorton import MeshConfig


@pytest.fixture(scope="session")
def cfg2():
    """Small 2D configuration; deep enough for exhaustive level-6 sweeps."""
    return MeshConfig(2, 8)


@pytest.fixture(scope="session")
def cfg3():
    """Small 3D configuration; deep enough for exhaustive level-4 sweeps."""
    return MeshConfig(3, 6)

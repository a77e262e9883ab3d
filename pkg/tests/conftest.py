import sys
from pathlib import Path

import pytest

# Add the source directory to the path so we can import the modules
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from networks import broadcast_ring, feedforward_ring, two_node_ring  # noqa: E402


@pytest.fixture
def two_node():
    """M=2, R=100, T=0.01, two full-loop flows with sigma0=1 and rho=10."""
    return two_node_ring()


@pytest.fixture
def feedforward():
    """M=4 ring whose three flows all start at node 1."""
    return feedforward_ring()


@pytest.fixture
def unstable_broadcast():
    """M=4 broadcast ring past the stability threshold."""
    return broadcast_ring(4, rho_factor=1.5)

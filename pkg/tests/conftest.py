import pytest

from graphstates import orbits
from graphstates.graphs import enumerate_connected


@pytest.fixture(scope="session")
def connected_classes():
    """Canonical representatives of all connected isomorphism classes, n = 2..7."""
    return {n: tuple(enumerate_connected(n)) for n in range(2, 8)}


@pytest.fixture(scope="session")
def classification7():
    """(records, member stats) for the full classification up to 7 vertices."""
    return orbits.classify_full(7)

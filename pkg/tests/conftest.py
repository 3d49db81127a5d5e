"""Shared fixtures for the cremona-locus tests."""

import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from cremona_locus.core.lattice import make_divisor
from cremona_locus.services.oracle import make_configuration

PRIME = 2**31 - 1
EXAMPLE_SYSTEM = "L3(15; 13,10,9,7,6,3^2,2)"
FIXTURES = Path(__file__).parent.parent / "fixtures" / "regression.fixtures"


@pytest.fixture(scope="session")
def cfg():
    """The default oracle configuration (p = 2^31 - 1, seed 42)."""
    return make_configuration(PRIME, 42)


@pytest.fixture
def example_divisor():
    return make_divisor(15, [13, 10, 9, 7, 6, 3, 3, 2])


@pytest.fixture
def example_residual():
    return make_divisor(5, [4, 3, 3, 3, 2, 1, 1, 1])

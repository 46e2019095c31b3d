"""Pytest configuration and fixtures."""

import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))


def pytest_configure(config):
    """Configure custom pytest markers."""
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "e2e: mark test as an end-to-end test")
    config.addinivalue_line("markers", "slow: mark test as slow running")


@pytest.fixture
def rng():
    """Seeded generator shared by tests that only need reproducible draws."""
    return np.random.default_rng(12345)


@pytest.fixture
def temp_archive_dir():
    """Create a temporary directory for experiment archives."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def small_population():
    """Four evaluated-ready positions in two dimensions."""
    return np.array(
        [
            [1.0, 2.0],
            [-3.0, 0.5],
            [4.0, -1.0],
            [0.0, 0.0],
        ]
    )


@pytest.fixture
def small_matrix_payload():
    """Tiny experiment matrix: two functions, one scheme, two modes, three runs."""
    return {
        "name": "tiny",
        "functions": ["sphere", "rastrigin"],
        "schemes": ["rand1"],
        "modes": ["cmf", "vrmf"],
        "n_p": [4],
        "d": [2],
        "nfc_max_multiplier": 50,
        "n_run": 3,
        "master_seed": 7,
    }

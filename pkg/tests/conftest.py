"""
Pytest configuration for the deformation toolkit tests.
"""

import pytest
import sys
import os

# Add the project root to the path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


@pytest.fixture(autouse=True)
def mock_config(monkeypatch, tmp_path):
    """Pin sampling and send certificates to a temporary directory."""
    from app.config import Config

    monkeypatch.setenv('SAMPLE_SEED', '0')
    monkeypatch.setenv('LOG_LEVEL', 'WARNING')
    monkeypatch.setattr(Config, 'SAMPLE_SEED', 0)
    monkeypatch.setattr(Config, 'SAMPLE_COUNT', 4)
    monkeypatch.setattr(Config, 'CERTIFICATES_DIR', str(tmp_path / 'certificates'))


@pytest.fixture(scope="session")
def store():
    """Golden data store over the repository's data/golden."""
    from app.services.golden import GoldenStore
    return GoldenStore()


@pytest.fixture(scope="session")
def o5():
    """o(5) over GF(3)."""
    from app.services.golden import GoldenStore
    return GoldenStore().algebra("o5-p3")


@pytest.fixture(scope="session")
def o5_complex(o5):
    """Adjoint cochain complex of o(5) over GF(3), shared across tests."""
    from app.services.cohomology import CochainComplex
    return CochainComplex(o5)

"""
Shared test configuration and fixtures for the relpres toolkit.

This module contains pytest fixtures that are shared across all test modules.
"""

import json
import os

import pytest

from relpres.core.models import FPWord, TWord
from relpres.fixtures import predefined_diagrams as fx

from fixtures import sample_data as samples


@pytest.fixture
def sample_data():
    """Raw JSON documents for loader and CLI tests."""
    return samples


@pytest.fixture
def write_json(tmp_path):
    """
    Write JSON documents into a temporary directory.

    Returns:
        Function (name, document) -> path of the written file
    """
    def _write(name, document):
        path = os.path.join(str(tmp_path), name)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(document, handle)
        return path
    return _write


@pytest.fixture
def z2():
    """Cyclic group of order two."""
    return fx.z2()


@pytest.fixture
def z3():
    """Cyclic group of order three."""
    return fx.z3()


@pytest.fixture
def s3():
    """Symmetric group on three points."""
    return fx.s3()


@pytest.fixture
def g0():
    """The generator of a cyclic group in copy 0."""
    return FPWord.of((0, 1))


@pytest.fixture
def basic_presentation():
    """Z3 presentation with s = 0, m = 0 and c = b_0 = a_0 = g, k = 2."""
    return fx.z3_basic_presentation()


@pytest.fixture
def digon_presentation():
    """Z3 presentation with s = 1, m = 0, k = 2."""
    return fx.z3_digon_presentation()


@pytest.fixture
def basic_word():
    """g t g t^-1 g t over Z3."""
    return TWord.parse([(0, 1), "t", (0, 1), "T", (0, 1), "t"])


@pytest.fixture
def pillow():
    """One large face inside the exterior face, k = 2."""
    return fx.pillow()


@pytest.fixture
def pillow_k3():
    """The pillow for k = 3."""
    return fx.pillow(3)


@pytest.fixture
def mirror_pillow():
    """A large face glued to its mirror image."""
    return fx.mirror_pillow()


@pytest.fixture
def two_digon_sphere():
    """Two digons glued into a sphere."""
    return fx.two_digon_sphere()


@pytest.fixture
def case_b_disk():
    """Z2 disk with an interior source hosting a complete collision."""
    return fx.case_b_disk()


@pytest.fixture
def case_b_disk_z3():
    """The same disk over Z3, where the interior vertex label is nontrivial."""
    return fx.case_b_disk(fx.z3())


@pytest.fixture
def cli_runner():
    """
    Create a Click test runner for CLI testing.

    Returns:
        CliRunner instance
    """
    from click.testing import CliRunner
    return CliRunner()


# Markers for test categories
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Slow running tests")
    config.addinivalue_line("markers", "property: Property-based tests")
    config.addinivalue_line("markers", "cli: CLI command tests")

from __future__ import annotations

import pytest

from dataset_atlas import load_snapshot, seed_dir, exemplar_dir


@pytest.fixture(scope="session")
def seed_snapshot():
    """The full bundled catalog (11 datasets)."""
    return load_snapshot(seed_dir())


@pytest.fixture(scope="session")
def exemplar_snapshot():
    """The three-dataset exemplar catalog."""
    return load_snapshot(exemplar_dir())

from __future__ import annotations

import pytest

from wpvol.kdv import build_table
from wpvol.recursion import VolumeCache


@pytest.fixture(scope="session")
def cache() -> VolumeCache:
    return VolumeCache()


@pytest.fixture(scope="session")
def table(cache):
    return build_table(6, cache)

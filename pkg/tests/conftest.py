"""Shared fixtures: one catalog per session (loading re-validates every entry)."""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from liecert.catalog import load_catalog  # noqa: E402


@pytest.fixture(scope="session")
def cat():
    return load_catalog()

"""Shared fixtures: the canonical representation and the packaged catalog."""

import pytest

from g2jones import build_rep, builtin_catalog


@pytest.fixture(scope="session")
def rep6():
    """The validated 5-dimensional representation at (eta, a, m) = (1, -4, 5)."""
    return build_rep(1, -4, 5)


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()

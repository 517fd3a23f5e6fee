"""Shared fixtures for the integration tests."""

import os

import pytest

from cardcnf.utils.config import reset_config


@pytest.fixture(autouse=True)
def isolated_config(tmp_path_factory, monkeypatch):
    """Run every test without the user's config file or CARDCNF_* variables."""
    for name in list(os.environ):
        if name.startswith("CARDCNF_"):
            monkeypatch.delenv(name)
    monkeypatch.setenv("HOME", str(tmp_path_factory.mktemp("home")))
    reset_config()
    yield
    reset_config()

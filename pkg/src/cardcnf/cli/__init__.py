"""CLI module for cardcnf."""

from cardcnf.cli.main import app

__all__ = ["app"]

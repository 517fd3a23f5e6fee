"""Allow running as python -m cardcnf."""

from cardcnf.cli.main import app

if __name__ == "__main__":
    app()

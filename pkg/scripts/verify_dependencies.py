#!/usr/bin/env python3
"""Verify that the dependencies for cardcnf are installed and a solver is reachable."""

import os
import shlex
import shutil
import sys


def check_python_version() -> bool:
    """Check if Python version is 3.11 or higher."""
    version = sys.version_info
    if version.major >= 3 and version.minor >= 11:
        print(f"✓ Python {version.major}.{version.minor}.{version.micro}")
        return True
    print(f"✗ Python {version.major}.{version.minor}.{version.micro} (requires 3.11+)")
    return False


def check_system_command(cmd: str, name: str) -> bool:
    """Check if a system command is available."""
    path = shutil.which(cmd)
    if path:
        print(f"✓ {name} ({path})")
        return True
    print(f"✗ {name} not found")
    return False


def check_python_package(package: str) -> bool:
    """Check if a Python package is importable."""
    try:
        __import__(package)
        print(f"✓ {package}")
        return True
    except ImportError:
        print(f"✗ {package}")
        return False


def check_configured_solver() -> bool:
    """Check that CARDCNF_SOLVER, if set, names an executable."""
    command = os.environ.get("CARDCNF_SOLVER", "")
    if not command:
        print("- CARDCNF_SOLVER not set")
        return False
    executable = shlex.split(command)[0]
    return check_system_command(executable, f"CARDCNF_SOLVER ({command})")


def main() -> int:
    """Run all dependency checks."""
    print("=== cardcnf Dependency Check ===\n")

    all_passed = True

    print("Python Version:")
    if not check_python_version():
        all_passed = False
    print()

    print("Python Packages:")
    for package in ["typer", "pydantic", "numpy", "galois"]:
        if not check_python_package(package):
            all_passed = False
    print()

    # Only `cardcnf bench` needs a solver.
    print("SAT Solvers (optional):")
    found = check_configured_solver()
    for cmd, name in [("kissat", "Kissat"), ("cadical", "CaDiCaL")]:
        found = check_system_command(cmd, name) or found
    if not found:
        print("  No solver found; `cardcnf bench` needs --solver or CARDCNF_SOLVER.")
    print()

    if all_passed:
        print("=== All Required Dependencies OK ===")
        return 0
    print("=== Some Dependencies Missing ===")
    print('\nRun `pip install -e ".[dev]"` to install missing packages.')
    return 1


if __name__ == "__main__":
    sys.exit(main())

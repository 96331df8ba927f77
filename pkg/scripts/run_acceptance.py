#!/usr/bin/env python3
"""Run the acceptance suite standalone, one PASS/FAIL line per criterion.

Usage: python scripts/run_acceptance.py
Exit code 0 iff every criterion passes.
"""

import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent


def main() -> int:
    return pytest.main([
        "-v", "-s",
        str(REPO / "tests" / "test_acceptance.py"),
    ])


if __name__ == "__main__":
    sys.exit(main())

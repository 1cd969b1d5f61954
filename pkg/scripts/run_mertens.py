#!/usr/bin/env python3
import sys
from pathlib import Path

# Make repo root importable when running this file directly
ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from mertens_ec.cli import main

if __name__ == "__main__":
    raise SystemExit(main())

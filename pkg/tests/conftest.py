import os
import sys
from pathlib import Path

from hypothesis import settings

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

settings.register_profile("default", max_examples=200, deadline=None)
settings.register_profile("quick", max_examples=25, deadline=None)
profile = os.environ.get("MERTENS_HYPOTHESIS_PROFILE", "default")
settings.load_profile(profile)

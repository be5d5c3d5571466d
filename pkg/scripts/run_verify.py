from __future__ import annotations

import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]

sys.path.append(str(PROJECT_ROOT / "src"))  # so imports work when running from repo root

from gaussian_ideals.cli import main

if __name__ == "__main__":
    sys.exit(main())

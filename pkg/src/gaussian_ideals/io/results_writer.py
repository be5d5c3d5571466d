from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import TextIO

from gaussian_ideals.verify.report import Report


def ensure_parent(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)


def render_report(report: Report) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, indent=2)


def write_report(report: Report, path: Path | None = None, stream: TextIO | None = None) -> None:
    """Write the JSON report to ``path``, or to ``stream`` (stdout) when no path is given."""
    text = render_report(report)
    if path is None:
        out = stream or sys.stdout
        out.write(text)
        out.write("\n")
        return
    ensure_parent(path)
    path.write_text(text + "\n", encoding="utf-8")

"""
Markdown reports for the identity suite and the 27-lines computation.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import TYPE_CHECKING

from . import __version__

if TYPE_CHECKING:
    from .grassmann import LinesReport
    from .identities import Check


def _header(title: str) -> list[str]:
    stamp = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
    return [f"# {title}", "", f"- **engine_version**: {__version__}", f"- **generated**: {stamp}"]


def write_identity_report(checks: list[Check], output_path: str) -> str:
    """
    Write the identity-suite results as markdown.

    Args:
        checks: Results from identities.run_suite
        output_path: Path where markdown should be saved

    Returns:
        Path to the generated markdown file
    """
    out = Path(output_path)
    out.parent.mkdir(parents=True, exist_ok=True)

    failed = [chk for chk in checks if not chk.holds]
    lines = _header("Identity suite")
    lines += [f"- **checks**: {len(checks)}", f"- **failed**: {len(failed)}", "", "## Results", ""]
    lines += ["| check | holds | detail |", "|---|---|---|"]
    for chk in checks:
        detail = f"`{chk.detail}`".replace("|", "\\|") if chk.detail else ""
        lines.append(f"| {chk.name} | {'yes' if chk.holds else '**no**'} | {detail} |")

    md = "\n".join(lines)
    md += "\n\n## Summary\n\n"
    md += "```json\n"
    md += json.dumps({"checks": len(checks), "failed": [chk.name for chk in failed]}, indent=2, sort_keys=True)
    md += "\n```\n"

    out.write_text(md, encoding="utf-8")
    return str(out)


def write_lines_report(report: LinesReport, output_path: str) -> str:
    """Write the line-count decomposition with its derivation trace."""
    from .grassmann import LINE_TYPES

    out = Path(output_path)
    out.parent.mkdir(parents=True, exist_ok=True)

    lines = _header("Lines on a cubic surface, equivariantly")
    lines += ["", "## Euler class", "", f"`e(Sym^3(pi dual)) = {report.euler}`", "", "## Line types", ""]
    for key, count in report.counts.items():
        lines.append(f"- **{key}** ({LINE_TYPES[key]}): {count}")
    lines += ["", f"As a C2-set: `{report.c2_set}`, total {report.total} lines.", "", "## Submanifold representatives", ""]
    lines += [f"- {name} = {rep}" for name, rep in report.representatives.items()]

    md = "\n".join(lines)
    if report.trace:
        md += "\n\n## Derivation\n\n"
        md += "\n".join(f"{k}. {step}" for k, step in enumerate(report.trace, start=1))
    md += "\n\n## Data\n\n"
    md += "```json\n"
    md += json.dumps(
        {"coefficient": {"a": report.alpha.a, "b": report.alpha.b}, "counts": report.counts, "total": report.total},
        indent=2,
        sort_keys=True,
    )
    md += "\n```\n"

    out.write_text(md, encoding="utf-8")
    return str(out)

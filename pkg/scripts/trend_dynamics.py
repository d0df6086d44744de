#!/usr/bin/env python3
"""Show composite-index trends the Gini alone misses.

Runs the per-country series over the bundled dynamics panel (Mexico, World
Bank rows; Italy, OECD rows) and prints how the composite index rises while
the Gini stays flat because the top/bottom decile gap widens.
"""

import sys
from pathlib import Path

from ineqkit import parse_panel, series

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


def main() -> int:
    text = (DATA_DIR / "dynamics_panel.csv").read_text(encoding="utf-8")
    panel, diagnostics = parse_panel(text)
    if diagnostics:
        for d in diagnostics:
            print(f"line {d.line}: {d.reason}", file=sys.stderr)
        return 2

    for country in panel.countries():
        points = series(panel, country)
        print(country)
        print("  year    gini     T/B      index")
        for p in points:
            print(f"  {p.year}   {p.gini:.3f}   {p.t_over_b:6.2f}   {p.index_i:.3f}")
        first, last = points[0], points[-1]
        gini_move = abs(last.gini - first.gini)
        print(
            f"  gini moved {gini_move:.3f}; index moved "
            f"{last.index_i - first.index_i:+.3f} as T/B went "
            f"{first.t_over_b:.2f} -> {last.t_over_b:.2f}"
        )
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Regenerate ``tests/data/corpus.pd`` and ``tests/data/oracle_values.json``.

Run from the repository root with ``python tests/freeze_oracles.py``.  Only
the reference code in ``oracles.py`` produces values; the package is used
solely to relabel braid closures into PD codes.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from _gen import CORPUS_BRAIDS, braid_closure  # noqa: E402
from oracles import brute_colorings, naive_bracket  # noqa: E402

from skeinkit.diagram import render_line  # noqa: E402

FIXED = [
    ("unknot", "U1;"),
    ("unlink2", "U2;"),
    ("trefoil", "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"),
]


def corpus() -> list[tuple[str, str]]:
    """Named PD lines; ``L2a1`` is the Hopf link and ``4_1`` the figure-eight knot."""
    entries = list(FIXED)
    entries.append(("unknot_kink", render_line(braid_closure(2, [1]))))
    for name, (n, word) in CORPUS_BRAIDS.items():
        entries.append((name, render_line(braid_closure(n, word))))
    entries.append(("trefoil_and_circle", render_line(braid_closure(3, [1, 1, 1]))))
    return entries


def main():
    from skeinkit.diagram import diagram

    lines = ["# Test corpus: one PD code per line, name in the trailing comment."]
    values = {}
    for name, code in corpus():
        lines.append(f"{code}  # {name}")
        d = diagram(code)
        entry = {
            "pd": code,
            "bracket": sorted([e, c] for e, c in naive_bracket(d.crossings, d.extra_unknots).items()),
            "components": d.n_components,
            "crossings": d.n_crossings,
        }
        if 3 ** d.edge_count <= 2_000_000:
            entry["col3"] = brute_colorings(d.crossings, 3, d.extra_unknots)
        if 5 ** d.edge_count <= 2_000_000:
            entry["col5"] = brute_colorings(d.crossings, 5, d.extra_unknots)
        values[name] = entry
    data = HERE / "data"
    data.mkdir(exist_ok=True)
    (data / "corpus.pd").write_text("\n".join(lines) + "\n")
    (data / "oracle_values.json").write_text(json.dumps(values, indent=1) + "\n")


if __name__ == "__main__":
    main()

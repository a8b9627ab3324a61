"""Regenerate src/permpoly/data/bipartite_classes_n*.g6 (one graph6 per line).

Usage: python tools/build_bipartite_classes.py [max_n]   (default 10)
"""

import sys
import time
from pathlib import Path

from permpoly.corpus import _build_bipartite_classes
from permpoly.formats import format_graph6

DATA = Path(__file__).resolve().parents[1] / "src" / "permpoly" / "data"


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    for n in range(max_n + 1):
        t0 = time.time()
        graphs = _build_bipartite_classes(n)
        (DATA / f"bipartite_classes_n{n}.g6").write_text(
            "".join(format_graph6(g) + "\n" for g in graphs)
        )
        print(f"n={n}: {len(graphs)} classes ({time.time() - t0:.1f}s)")


if __name__ == "__main__":
    main()

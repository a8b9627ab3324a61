"""Search for graphs matching the worked-example fingerprint and freeze the first hit.

Usage: python tools/search_figure1.py [--write]

Prints every match (as an edge list and graph6) together with the number of
isomorphism classes among them. With --write, the first match is stored as
src/permpoly/data/figure1.edges.
"""

import argparse
import time
from pathlib import Path

import networkx as nx

from permpoly.corpus import _nx, search_figure1
from permpoly.formats import format_edge_list, format_graph6

FIXTURE = Path(__file__).resolve().parents[1] / "src" / "permpoly" / "data" / "figure1.edges"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    args = ap.parse_args()

    t0 = time.time()
    found = search_figure1()
    print(f"{len(found)} matching labelled graphs in {time.time() - t0:.1f}s")
    classes = []
    for g in found:
        h = _nx(g)
        if not any(nx.is_isomorphic(h, c) for c in classes):
            classes.append(h)
    print(f"{len(classes)} isomorphism class(es)")
    for g in found[:5]:
        print(format_graph6(g), g.edges)
    if args.write and found:
        header = (
            "# 10-vertex bipartite 4k-intercyclic graph matching the worked-example fingerprint\n"
            "# generated by tools/search_figure1.py\n"
        )
        FIXTURE.write_text(header + format_edge_list(found[0]))
        print(f"wrote {FIXTURE}")


if __name__ == "__main__":
    main()

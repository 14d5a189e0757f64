#!/usr/bin/env python3
"""Regenerate data/benchmark45.pathway.

Deterministic 45-gene graph for the synthetic benchmark: three hub genes in a
triangle, each hub carrying four chain legs (two of depth 4, two of depth 3).
Long hub-to-hub routes give a rich pool of driver-eligible shortest paths.
"""

import os
import sys

LEG_DEPTHS = [4, 4, 3, 3]


def build():
    nodes = []  # (id, symbol)
    edges = []
    hubs = {}
    for hub in "ABC":
        hub_id = f"h{hub.lower()}"
        hubs[hub] = hub_id
        nodes.append((hub_id, f"HUB{hub}"))
    edges += [(hubs["A"], hubs["B"]), (hubs["A"], hubs["C"]), (hubs["B"], hubs["C"])]

    for hub in "ABC":
        for leg, depth in enumerate(LEG_DEPTHS, start=1):
            prev = hubs[hub]
            for level in range(1, depth + 1):
                node_id = f"{hub.lower()}{leg}n{level}"
                nodes.append((node_id, f"{hub}{leg}_{level}"))
                edges.append((prev, node_id))
                prev = node_id
    return nodes, edges


def main(out_path):
    nodes, edges = build()
    assert len(nodes) == 45, len(nodes)
    with open(out_path, "w") as fh:
        fh.write("# pathway benchmark45\n")
        fh.write("# three-hub synthetic benchmark graph, 45 genes\n")
        for node_id, symbol in nodes:
            fh.write(f"node {node_id} gene {symbol}\n")
        for a, b in edges:
            fh.write(f"edge {a} {b}\n")
    print(f"wrote {out_path}: {len(nodes)} nodes, {len(edges)} edges")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data", "benchmark45.pathway")
    main(out)

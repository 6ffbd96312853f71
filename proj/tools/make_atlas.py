#!/usr/bin/env python3
"""Regenerate tests/data/atlas.g6: every graph on 1..7 vertices, one per
isomorphism class, in networkx graph-atlas order (graph6, no header)."""
import sys
import networkx as nx
from networkx.generators.atlas import graph_atlas_g

out = sys.argv[1] if len(sys.argv) > 1 else "tests/data/atlas.g6"
with open(out, "wb") as f:
    for g in graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        f.write(nx.to_graph6_bytes(g, header=False))

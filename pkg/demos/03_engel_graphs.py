"""Build Engel graphs and measure them: components, diameter, clique
number, planarity, isolated vertices.  Export DOT for rendering.

Run from the repository root:  python demos/03_engel_graphs.py
"""

from engelgraph import (
    EngelGroupError,
    build_engel_graph,
    build_group,
    compute_metrics,
    write_dot,
)

for spec in ["S3", "A4", "D12", "T", "S4", "@fixtures/c7_c3.gens"]:
    G = build_group(spec)
    graph = build_engel_graph(G)
    m = compute_metrics(graph)
    print(
        f"{G.name:22s} |G|={G.order:3d}  vertices={m.vertex_count:3d} "
        f"edges={m.edge_count:4d}  diameter={m.diameter}  "
        f"clique={m.clique_number}  planar={m.planar}"
    )

# Engel groups have no Engel graph at all (every element is left Engel).
try:
    build_engel_graph(build_group("C6"))
except EngelGroupError as err:
    print(f"\nC6: {err}")

# DOT output is deterministic: canonical vertex order, each edge once.
s3 = build_group("S3")
graph = build_engel_graph(s3)
labels = [str(s3.perm(x)) for x in graph.labels]
print("\nDOT for E_S3 (pipe into `dot -Tpng` to draw):\n")
print(write_dot(graph, labels))

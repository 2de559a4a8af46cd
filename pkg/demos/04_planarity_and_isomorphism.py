"""The planar Engel graphs, a Kuratowski witness for A4, and the
isomorphic pair E_D12 = E_T with its order divisibility.

Run from the repository root:  python demos/04_planarity_and_isomorphism.py
"""

from engelgraph import (
    build_engel_graph,
    build_group,
    find_isomorphism,
    is_planar,
    kuratowski_witness,
    left_engel_set,
    verify_kuratowski_witness,
)

# Among all finite groups, exactly three Engel-graph shapes are planar:
# those of S3, D12, and T = Dic3.
for spec in ["S3", "D12", "T", "A4", "S4", "D10"]:
    G = build_group(spec)
    print(f"E_{G.name} planar: {is_planar(build_engel_graph(G))}")

# E_A4 is non-planar; extract and verify a Kuratowski witness.
a4 = build_group("A4")
graph = build_engel_graph(a4)
witness = kuratowski_witness(graph)
kind = verify_kuratowski_witness(witness, graph)
print(f"\nE_A4 contains a verified {kind} subdivision on edges:")
print(" ", sorted(witness.edges()))

# E_D12 and E_T are isomorphic octahedra.
d12, t = build_group("D12"), build_group("T")
gd, gt = build_engel_graph(d12), build_engel_graph(t)
mapping = find_isomorphism(gd, gt)
print(f"\nE_D12 = E_T via vertex map {mapping}")

# Isomorphic Engel graphs force |L(H)| to divide |G| - |L(G)|.
l_d12, l_t = len(left_engel_set(d12)), len(left_engel_set(t))
complement = d12.order - l_d12
print(
    f"|L(T)| = {l_t} divides |D12| - |L(D12)| = {complement}: "
    f"{complement % l_t == 0}"
)

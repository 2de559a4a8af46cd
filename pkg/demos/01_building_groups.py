"""Build finite groups three ways: family constructors, parsed specs, and
generator files in cycle notation.

Run from the repository root:  python demos/01_building_groups.py
"""

from engelgraph import (
    Permutation,
    build_group,
    closure,
    dicyclic_group,
    dihedral_group,
    direct_product,
    parse_group_spec,
    render_group_spec,
    symmetric_group,
)

# Family constructors.  Dihedral groups are named by ORDER, so D12 here is
# the 12-element group with s^6 = r^2 = 1 and s^r = s^-1.
s4 = symmetric_group(4)
d12 = dihedral_group(12)
t = dicyclic_group(12)  # the order-12 dicyclic group, often called T
print(f"{s4.name}: order {s4.order}")
print(f"{d12.name}: order {d12.order}")
print(f"{t.name}: order {t.order}")

s, r = d12.generators
print(f"in D12: |s| = {d12.order_of(s)}, |r| = {d12.order_of(r)}, "
      f"s^r = s^-1 is {d12.conjugate(s, r) == d12.inv(s)}")

# Closure of explicit permutations: the Frobenius group of order 21.
frob = closure(
    [
        Permutation.from_cycles([(1, 2, 3, 4, 5, 6, 7)]),
        Permutation.from_cycles([(2, 3, 5), (4, 7, 6)]),
    ],
    "C7:C3",
)
print(f"{frob.name}: order {frob.order}")

# Direct products act on disjoint point sets.
prod = direct_product(symmetric_group(3), dicyclic_group(8))
print(f"{prod.name}: order {prod.order}")

# The same constructions through the spec grammar.
for text in ["S4", "D12", "T", "S3xC2", "Dic2"]:
    spec = parse_group_spec(text)
    G = build_group(spec)
    print(f"spec {text!r} -> {render_group_spec(spec)}, order {G.order}")

# ... and from a generator file (one cycle-notation line per generator).
from_file = build_group("@fixtures/c7_c3.gens")
print(f"{from_file.name}: order {from_file.order}, "
      f"same elements as the closure above: {from_file.elements == frob.elements}")

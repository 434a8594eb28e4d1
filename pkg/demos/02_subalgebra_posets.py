"""Enumerating Sub(L) and BSub(L) and reading off their order theory.

Run with:  python3 demos/02_subalgebra_posets.py
"""

from omlkit import boolean_algebra, bsub, catalog, fileio, poset_isomorphic, sub

L = catalog("example22")
p = bsub(L)

print(f"BSub of the two-block example: {p.size} nodes")
for i, node in enumerate(p.nodes):
    tags = []
    if i == p.bottom():
        tags.append("bottom")
    if i in p.atoms():
        tags.append("atom")
    if i in p.maximal_elements():
        tags.append("block")
    print(f"  node {i}: {node.elements}  height {p.height(i)}  {'/'.join(tags)}")

# Joins need not exist: two atom nodes join only if their elements commute.
a_node = p.node_index(L.generated_subalgebra([1]).members)
d_node = p.node_index(L.generated_subalgebra([4]).members)
b_node = p.node_index(L.generated_subalgebra([2]).members)
print("\njoin(a-node, b-node):", p.join(a_node, b_node))
print("join(a-node, d-node):", p.join(a_node, d_node), " (a and d do not commute)")

# The interval below a block is the subalgebra lattice of that block.
block = p.maximal_elements()[0]
interval, _ = p.interval_below(block)
print("\ninterval below a block has", interval.size, "nodes;",
      "isomorphic to Sub(2^3):",
      poset_isomorphic(interval, sub(boolean_algebra(3)).as_abstract()) is not None)

# Hasse diagram as DOT, ready for graphviz.
print("\nDOT export of the Hasse diagram:\n")
print(fileio.poset_to_dot(p))

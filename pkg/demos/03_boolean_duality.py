"""Boolean subalgebra lattices: dual subalgebras, partitions, lifting.

Run with:  python3 demos/03_boolean_duality.py
"""

from omlkit import (
    boolean_algebra,
    dual_decomposition,
    dual_order_test,
    lift_boolean_iso,
    morphism,
    partition_lattice,
    pd_order_test,
    poset_isomorphic,
    sub,
    subalgebra_to_partition,
)
from omlkit.lattice_core import bits

B = boolean_algebra(4)
s = sub(B)
print(f"Sub(2^4): {s.size} nodes (the Bell number for 4)")

# Each subalgebra corresponds to a partition of the four atoms; inclusion
# reverses refinement.
print("\nnodes as atom partitions:")
for node in s.nodes:
    print(f"  {str(subalgebra_to_partition(B, node)):>10}  <-  {node.elements}")

lattice, parts = partition_lattice(4)
print("\ndually isomorphic to the partition lattice:",
      poset_isomorphic(s.as_abstract(), lattice.dual()) is not None)

# Dual subalgebras (ideal plus complementary filter) are recognizable from
# the order alone; in a finite Boolean algebra they are exactly the
# principal dual ones [0,a] u [a',1].
print("\nnode-by-node: dual? principal dual?")
for i, node in enumerate(s.nodes):
    d = dual_order_test(s, i)
    p = pd_order_test(s, i)
    direct = dual_decomposition(B, node) is not None
    assert d == direct
    print(f"  node {i:2d} ({len(node):2d} elements): dual={d}  pd={p}")

# The principal dual subalgebras drive the lifting: a subalgebra-lattice
# isomorphism pins down an element isomorphism through them.
perm = (2, 0, 1)  # cycle the three atoms of 2^3
C = boolean_algebra(3)
sc = sub(C)
mapping = [sum(1 << perm[t] for t in bits(e)) for e in range(8)]
psi = morphism(C, C, mapping)
phi = tuple(sc.node_index(psi.apply_mask(n.members)) for n in sc.nodes)
lift = lift_boolean_iso(C, C, phi, sc, sc)
print("\natom 3-cycle on 2^3, recovered from its node map:", lift[0].mapping)
print("matches the original:", lift[0].mapping == psi.mapping)

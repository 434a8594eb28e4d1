"""Tour of the lattice catalog: validation, flavors, commutation, blocks.

Run with:  python3 demos/01_lattices_and_blocks.py
"""

from omlkit import benzene, catalog, example22, mo

# Every catalog entry comes back validated, with its flavor decided by
# checking the orthomodular law on all comparable pairs.
for name in ["2^3", "MO2", "MO2x2", "example22", "hsum(2^3,2^3)", "benzene"]:
    L = catalog(name)
    print(f"{name:>14}: {L.n:2d} elements, {L.flavor}")

print()

# The hexagon is the go-to non-orthomodular ortholattice: x <= y but
# x v (x' ^ y) stays at x.
hexagon = benzene()
x, y = 1, 2
print("hexagon law check:", hexagon.join(x, hexagon.meet(hexagon.ortho[x], y)),
      "!=", y)

# Commutation is the algebraic identity a = (a^b) v (a^b').  In the
# two-block pasting, a and d live in different blocks and do not commute.
L = example22()
print("\ntwo-block example, commutation matrix (nontrivial elements):")
names = "a b c d e a' b' c' d' e'".split()
elems = list(range(1, 11))
for a in elems:
    row = "".join("+" if L.commutes(a, b) else "." for b in elems)
    print(f"  {names[a - 1]:>2} {row}")

# Blocks are the maximal Boolean subalgebras; they cover the lattice and
# pairwise intersect in smaller subalgebras.
print("\nblocks:")
for blk in L.blocks():
    print("  ", blk.elements)

shared = L.blocks()[0].members & L.blocks()[1].members
print("shared part of the two blocks:", tuple(
    e for e in range(L.n) if shared >> e & 1))

# MO2: two four-element blocks glued at the bounds.
print("\nMO2 blocks:", [b.elements for b in mo(2).blocks()])

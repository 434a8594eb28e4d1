"""From a bare poset back to the lattice: frames and orthoclosed sets.

Run with:  python3 demos/04_reconstruction.py
"""

from omlkit import (
    bsub,
    build_frame,
    catalog,
    classify_atoms,
    find_isomorphism,
    orthoclosed_lattice,
    reconstruct,
)

# Take only the ORDER TYPE of the Boolean-subalgebra poset; relabel it to
# destroy any accidental structure, then rebuild.
L = catalog("example22")
p = bsub(L).as_abstract().relabel([5, 0, 2, 7, 1, 6, 4, 3])

u, v = classify_atoms(p)
print("atoms standing for atom pairs of the lattice:", u)
print("maximal such atoms (doubled into point pairs):", v)

frame = build_frame(p, u, v)
print("\northogonality frame:")
for i, lbl in enumerate(frame.labels):
    print(f"  point {i} ({lbl}) perp {[j for i2, j in frame.edges() if i2 == i]}")

rebuilt = orthoclosed_lattice(frame)
print(f"\northoclosed sets: {rebuilt.n} of them, flavor {rebuilt.flavor}")
print("isomorphic to the original:", find_isomorphism(rebuilt, L) is not None)

# The same round trip holds across the catalog.
print()
for name in ["2^2", "2^4", "MO3", "MO2x2", "hsum(2^3,2^3)"]:
    M = catalog(name)
    again = reconstruct(bsub(M).as_abstract())
    ok = find_isomorphism(again, M) is not None
    print(f"  {name:>13}: rebuilt {again.n:2d} elements, isomorphic: {ok}")

# The hexagon shows why orthomodularity is in the promise: its poset has
# the same order type as the one for MO2, so the rebuild returns MO2.
hexagon = catalog("benzene")
from_hexagon = reconstruct(bsub(hexagon).as_abstract())
print("\nrebuilt from the hexagon's poset:",
      find_isomorphism(from_hexagon, catalog("MO2")) is not None and "MO2")
print("...which is not the hexagon:",
      find_isomorphism(from_hexagon, hexagon) is None)

"""Lifting poset isomorphisms, and what preimage maps remember.

Run with:  python3 demos/05_lifting_and_functor.py
"""

from omlkit import (
    automorphisms,
    boolean_algebra,
    bsub,
    catalog,
    classify_recovery,
    enumerate_homs,
    identity_morphism,
    induced_node_map,
    lift_bsub_iso,
    mo,
    sub,
    unrealized_meet_preserving_map,
    verify_determination,
)

# A poset isomorphism of BSub determines the lattice isomorphism whenever
# no block has four elements; with four-element blocks there is a two-way
# choice per block.
L = catalog("example22")
p = bsub(L)
for psi in automorphisms(L)[:3]:
    phi = induced_node_map(psi, p, p)
    lifts = lift_bsub_iso(L, L, phi, p, p)
    print("automorphism", psi.mapping, "-> unique lift:", len(lifts) == 1)

m2 = mo(2)
pm = bsub(m2)
lifts = lift_bsub_iso(m2, m2, tuple(range(pm.size)), pm, pm)
print("\nMO2 has two 4-element blocks; the identity node map lifts",
      len(lifts), "ways:")
for f in lifts:
    print("  ", f.mapping)

# End-to-end determination check, including the ortholattice caveat.
print("\ndetermination reports:")
for a, b in [("example22", "MO2x2"), ("2^3", "MO2"), ("MO2", "benzene")]:
    print(f"  {a} vs {b}:")
    for line in verify_determination(catalog(a), catalog(b)).lines():
        print("    " + line)

# The preimage side: f -> f^{-1} preserves meets but forgets a lot.
B = boolean_algebra(3)
s = sub(B)
homs = enumerate_homs(B, B)
print(f"\n{len(homs)} endomorphisms of 2^3; classifying what f^-1 recovers:")
counts = {}
for f in homs:
    counts[classify_recovery(f).kind] = counts.get(classify_recovery(f).kind, 0) + 1
for kind, c in sorted(counts.items(), key=lambda kv: kv[0].value):
    print(f"  {kind.value}: {c}")

r = classify_recovery(identity_morphism(m2))
print("\nidentity on MO2 is not recoverable; a witness with the same "
      "preimage map:", r.witness.mapping)

report = unrealized_meet_preserving_map()
print("\na meet-preserving self-map of Sub(2^3) that no hom induces:")
for line in report.lines():
    print("  " + line)

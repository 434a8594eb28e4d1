"""Lifting poset isomorphisms to lattice isomorphisms, and determination."""

import pytest

from omlkit import (
    NotAnIso,
    automorphisms,
    boolean_algebra,
    bsub,
    catalog,
    induced_node_map,
    lift_boolean_iso,
    lift_bsub_iso,
    lift_sub_iso,
    mo,
    poset_iso,
    poset_isomorphic,
    recognize_boolean_node,
    relabel,
    sub,
    sublattice,
    verify_determination,
)
from omlkit.lattice_core import bits

NO_FOUR_BLOCKS = ["2^3", "MO2x2", "example22", "hsum(2^3,2^3)"]


def test_identity_lift_on_two_block_example():
    L = catalog("example22")
    p = bsub(L)
    result = lift_bsub_iso(L, L, tuple(range(p.size)), p, p)
    assert [f.mapping for f in result] == [tuple(range(12))]


def test_block_swap_automorphism_lifts():
    L = catalog("example22")
    p = bsub(L)
    swaps = [a for a in automorphisms(L)
             if a.mapping != tuple(range(12)) and a(3) == 3 and a(1) in (4, 5)]
    assert swaps, "expected automorphisms exchanging the two blocks"
    for psi in swaps:
        phi = induced_node_map(psi, p, p)
        result = lift_bsub_iso(L, L, phi, p, p)
        assert [f.mapping for f in result] == [psi.mapping]


def test_every_automorphism_round_trips_uniquely():
    for name in NO_FOUR_BLOCKS:
        L = catalog(name)
        p = bsub(L)
        for psi in automorphisms(L):
            phi = induced_node_map(psi, p, p)
            result = lift_bsub_iso(L, L, phi, p, p)
            assert len(result) == 1
            assert result[0].mapping == psi.mapping


def test_identity_lift_on_mo2_gives_four():
    L = mo(2)
    p = bsub(L)
    result = lift_bsub_iso(L, L, tuple(range(p.size)), p, p)
    assert len(result) == 4
    expected = {a.mapping for a in automorphisms(L)
                if induced_node_map(a, p, p) == tuple(range(p.size))}
    assert {f.mapping for f in result} == expected
    canonical = lift_bsub_iso(L, L, tuple(range(p.size)), p, p, canonical_only=True)
    assert [f.mapping for f in canonical] == [tuple(range(6))]


def test_mo4_identity_lift_count():
    L = mo(4)
    p = bsub(L)
    result = lift_bsub_iso(L, L, tuple(range(p.size)), p, p)
    assert len(result) == 16  # one independent swap per four-element block


def test_many_four_blocks_need_the_canonical_flag():
    from omlkit import Unsupported, boolean_algebra, horizontal_sum
    L = horizontal_sum([boolean_algebra(2)] * 7)  # seven 4-element blocks
    p = bsub(L)
    identity = tuple(range(p.size))
    with pytest.raises(Unsupported):
        lift_bsub_iso(L, L, identity, p, p)
    canonical = lift_bsub_iso(L, L, identity, p, p, canonical_only=True)
    assert [f.mapping for f in canonical] == [tuple(range(L.n))]


def test_lift_between_relabeled_copies():
    L = catalog("hsum(2^3,2^3)")
    perm = list(range(14))
    perm[1], perm[4] = perm[4], perm[1]
    perm[8], perm[11] = perm[11], perm[8]
    M = relabel(L, perm)
    pl, pm = bsub(L), bsub(M)
    witness = poset_isomorphic(pl, pm)
    assert witness is not None
    result = lift_bsub_iso(L, M, witness, pl, pm)
    assert len(result) == 1
    f = result[0]
    for i, node in enumerate(pl.nodes):
        assert f.apply_mask(node.members) == pm.nodes[witness[i]].members


def test_lift_rejects_bad_node_maps():
    L = mo(2)
    p = bsub(L)
    with pytest.raises(NotAnIso):
        lift_bsub_iso(L, L, (0, 0, 1), p, p)
    with pytest.raises(NotAnIso):
        lift_bsub_iso(L, L, (1, 0, 2), p, p)  # moves the bottom


def test_lift_requires_orthomodular():
    hexagon = catalog("benzene")
    p = bsub(hexagon)
    with pytest.raises(NotAnIso):
        lift_bsub_iso(hexagon, hexagon, tuple(range(p.size)), p, p)


def test_blockwise_lifts_agree_on_overlaps():
    # recompute the per-block lifts independently and compare on intersections
    L = catalog("example22")
    p = bsub(L)
    for psi in automorphisms(L):
        phi = induced_node_map(psi, p, p)
        per_block = {}
        for x in p.maximal_elements():
            xmask = p.nodes[x].members
            ymask = p.nodes[phi[x]].members
            bx, bmap = sublattice(L, xmask)
            cy, cmap = sublattice(L, ymask)
            cinv = {g: i for i, g in enumerate(cmap)}
            sb, sc = sub(bx), sub(cy)
            phix = []
            for node in sb.nodes:
                gmask = 0
                for e in bits(node.members):
                    gmask |= 1 << bmap[e]
                hmask = p.nodes[phi[p.node_index(gmask)]].members
                local = 0
                for h in bits(hmask):
                    local |= 1 << cinv[h]
                phix.append(sc.node_index(local))
            fx = lift_boolean_iso(bx, cy, phix, sb, sc)[0]
            per_block[xmask] = {g: cmap[fx.mapping[i]] for i, g in enumerate(bmap)}
        (m1, f1), (m2, f2) = per_block.items()
        for shared in bits(m1 & m2):
            assert f1[shared] == f2[shared]


def test_recognize_boolean_node_examples():
    sm = sub(mo(2))
    assert not recognize_boolean_node(sm, sm.top())        # 2 atoms below
    smx = sub(catalog("MO2x2"))
    assert not recognize_boolean_node(smx, smx.top())      # 5 atoms below
    s3 = sub(boolean_algebra(3))
    assert recognize_boolean_node(s3, s3.top())            # 3 atoms, dual to P_3


def test_recognize_boolean_node_matches_is_boolean():
    for name in ("2^3", "MO2", "MO3", "MO2x2", "example22", "hsum(2^3,2^3)"):
        L = catalog(name)
        s = sub(L)
        for i in range(s.size):
            assert recognize_boolean_node(s, i) == L.is_boolean(s.nodes[i].members)


def test_lift_sub_identity_examples():
    B = boolean_algebra(3)
    s = sub(B)
    result = lift_sub_iso(B, B, tuple(range(s.size)), s, s)
    assert [f.mapping for f in result] == [tuple(range(8))]

    L = mo(2)
    sm = sub(L)
    result = lift_sub_iso(L, L, tuple(range(sm.size)), sm, sm)
    assert len(result) == 4
    p = bsub(L)
    expected = {a.mapping for a in automorphisms(L)
                if induced_node_map(a, sm, sm) == tuple(range(sm.size))}
    assert {f.mapping for f in result} == expected


def test_lift_sub_block_swap():
    L = catalog("example22")
    s = sub(L)
    for psi in automorphisms(L):
        phi = induced_node_map(psi, s, s)
        result = lift_sub_iso(L, L, phi, s, s)
        assert [f.mapping for f in result] == [psi.mapping]
        # restricted to any block, the lift is a Boolean isomorphism
        for blk in L.blocks():
            img = result[0].apply_mask(blk.members)
            assert L.is_boolean(img)


def test_poset_iso_type():
    p = bsub(mo(2))
    iso = poset_iso(p, p, (0, 2, 1))
    assert iso(1) == 2
    with pytest.raises(NotAnIso):
        poset_iso(p, p, (0, 1, 1))
    result = lift_bsub_iso(mo(2), mo(2), iso, p, p)
    assert len(result) == 4


def test_verify_determination_reports():
    L = catalog("example22")
    M = relabel(L, [0, 2, 1, 3, 5, 4, 7, 6, 8, 10, 9, 11])
    r = verify_determination(L, M)
    assert r.posets_isomorphic and r.lattices_isomorphic
    assert r.both_orthomodular and r.consistent
    assert r.lifted_count == 1

    r = verify_determination(boolean_algebra(3), mo(2))
    assert not r.posets_isomorphic and not r.lattices_isomorphic
    assert r.consistent

    r = verify_determination(mo(2), catalog("benzene"))
    assert r.posets_isomorphic and not r.lattices_isomorphic
    assert not r.both_orthomodular and r.consistent
    assert "outside OML hypothesis" in r.note
    assert any("note" in line for line in r.lines())

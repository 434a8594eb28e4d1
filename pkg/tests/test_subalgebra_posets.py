"""Subalgebra enumeration completeness and the poset utilities."""

import pytest
import sympy

from omlkit import (
    AbstractPoset,
    ExplosionCap,
    MalformedInput,
    NoLeastElement,
    NotAPartialOrder,
    Unsupported,
    benzene,
    boolean_algebra,
    bsub,
    catalog,
    enumerate_subalgebras,
    mo,
    poset_automorphisms,
    poset_isomorphic,
    sub,
)
from omlkit.lattice_core import mask_of

SMALL = ["2^2", "2^3", "MO2", "MO3", "benzene", "example22"]


def brute_force_subalgebras(L, boolean_only=False):
    # closure always adds the bounds, so closure(mask) == mask means closed
    out = set()
    for mask in range(1 << L.n):
        if L.closure_mask(mask) != mask:
            continue
        if boolean_only and not L.is_boolean(mask):
            continue
        out.add(mask)
    return out


@pytest.mark.parametrize("name", SMALL)
def test_enumeration_matches_brute_force(name):
    L = catalog(name)
    for boolean_only in (False, True):
        poset = enumerate_subalgebras(L, boolean_only=boolean_only)
        assert {n.members for n in poset.nodes} == \
            brute_force_subalgebras(L, boolean_only)
        # canonical order and no duplicates
        masks = [n.members for n in poset.nodes]
        assert masks == sorted(set(masks))


def test_node_counts():
    assert sub(boolean_algebra(3)).size == 5
    assert bsub(catalog("example22")).size == 8
    assert bsub(benzene()).size == 3
    assert sub(benzene()).size == 4
    # every subalgebra of a Boolean algebra is Boolean
    for k in (2, 3, 4):
        B = boolean_algebra(k)
        assert sub(B).size == bsub(B).size == int(sympy.bell(k))


def test_bottom_node_is_the_least_subalgebra():
    for name in SMALL:
        L = catalog(name)
        p = sub(L)
        assert p.bottom() == 0
        assert p.nodes[0].members == mask_of((0, L.n - 1))


def test_atoms_maximal_covers_against_definitions():
    for name in ("MO2", "example22", "2^3"):
        p = bsub(catalog(name))
        bottom = p.bottom()
        atoms = set(p.atoms())
        for x in range(p.size):
            is_atom = x != bottom and all(
                not (p.leq(bottom, z) and p.leq(z, x) and z not in (bottom, x))
                for z in range(p.size)) and p.leq(bottom, x)
            assert (x in atoms) == is_atom
        maximal = set(p.maximal_elements())
        for x in range(p.size):
            assert (x in maximal) == all(
                not p.leq(x, y) for y in range(p.size) if y != x)
        for x in range(p.size):
            for y in p.covers(x):
                assert p.leq(x, y) and x != y
                assert not any(p.leq(x, z) and p.leq(z, y)
                               for z in range(p.size) if z not in (x, y))


def test_example_atom_counts():
    assert len(bsub(catalog("example22")).atoms()) == 5
    assert len(sub(catalog("MO2")).atoms()) == 2
    assert len(sub(catalog("MO2x2")).atoms()) == 5


def test_joins_and_meets():
    p = bsub(mo(2))
    a1, a2 = p.atoms()
    assert p.join(a1, a2) is None
    assert p.meet(a1, a2) == p.bottom()
    q = bsub(catalog("example22"))
    node_a = q.node_index(mask_of((0, 1, 6, 11)))
    node_b = q.node_index(mask_of((0, 2, 7, 11)))
    left_block = q.node_index(mask_of((0, 1, 2, 3, 6, 7, 8, 11)))
    assert q.join(node_a, node_b) == left_block


def test_meets_are_intersections():
    for name in ("MO2", "example22", "2^3", "MO2x2"):
        p = bsub(catalog(name))
        for x in range(p.size):
            for y in range(p.size):
                m = p.meet(x, y)
                assert m is not None, "Boolean subalgebra meets must exist"
                assert p.nodes[m].members == p.nodes[x].members & p.nodes[y].members


def test_every_node_is_generated_by_its_atoms():
    for name in ("MO2", "example22", "2^3", "MO2x2", "hsum(2^3,2^3)"):
        L = catalog(name)
        p = bsub(L)
        atoms = p.atoms()
        for x in range(p.size):
            seed = 0
            for a in atoms:
                if p.leq(a, x):
                    seed |= p.nodes[a].members
            assert L.closure_mask(seed) == p.nodes[x].members


def test_maximal_bsub_nodes_are_the_blocks():
    for name in ("MO2", "MO3", "example22", "MO2x2", "hsum(2^3,2^3)"):
        L = catalog(name)
        p = bsub(L)
        enumerated = sorted(p.nodes[x].members for x in p.maximal_elements())
        assert enumerated == [b.members for b in L.blocks()]


def test_commutation_matches_atom_joins():
    for name in ("MO2", "example22", "2^3"):
        L = catalog(name)
        p = bsub(L)
        for a in range(1, L.n - 1):
            for b in range(1, L.n - 1):
                x = p.node_index(L.generated_subalgebra([a]).members)
                y = p.node_index(L.generated_subalgebra([b]).members)
                join = p.join(x, y)
                assert L.commutes(a, b) == (join is not None)
                comparable = L.leq(a, b) or L.leq(b, a) or \
                    L.leq(a, L.ortho[b]) or L.leq(L.ortho[b], a)
                assert comparable == (join is not None and p.height(join) <= 2)


def test_heights():
    p = bsub(catalog("example22"))
    assert p.height(p.bottom()) == 0
    for a in p.atoms():
        assert p.height(a) == 1
    for m in p.maximal_elements():
        assert p.height(m) == 2


def test_interval_below():
    p = bsub(catalog("example22"))
    block = p.maximal_elements()[0]
    interval, support = p.interval_below(block)
    assert interval.size == 5
    assert poset_isomorphic(interval, sub(boolean_algebra(3)).as_abstract()) is not None
    assert all(p.leq(s, block) for s in support)
    bottom_iv, _ = p.interval_below(p.bottom())
    assert bottom_iv.size == 1
    s4 = sub(boolean_algebra(4))
    top_iv, _ = s4.interval_below(s4.top())
    assert top_iv.size == 15


def test_poset_isomorphic_examples():
    assert poset_isomorphic(bsub(benzene()), bsub(mo(2))) is not None
    assert poset_isomorphic(sub(benzene()), sub(mo(2))) is not None
    assert poset_isomorphic(bsub(boolean_algebra(3)), bsub(mo(2))) is None


def test_poset_isomorphism_witness_is_checked_both_ways():
    p = bsub(catalog("example22"))
    perm = [0, 2, 1, 3, 4, 6, 5, 7]
    q = p.as_abstract().relabel(perm)
    w = poset_isomorphic(p, q)
    assert w is not None
    for x in range(p.size):
        for y in range(p.size):
            assert p.leq(x, y) == q.leq(w[x], w[y])


def test_poset_automorphisms_count():
    assert len(poset_automorphisms(sub(boolean_algebra(3)))) == 6


def test_poset_iso_cap():
    big = AbstractPoset([1 << i for i in range(5001)])
    with pytest.raises(Unsupported):
        poset_isomorphic(big, big)


def test_explosion_cap():
    with pytest.raises(ExplosionCap):
        enumerate_subalgebras(boolean_algebra(4), cap=3)


def test_node_cap_env(monkeypatch):
    monkeypatch.setenv("OMLKIT_NODE_CAP", "2")
    with pytest.raises(ExplosionCap):
        enumerate_subalgebras(boolean_algebra(3))
    monkeypatch.setenv("OMLKIT_NODE_CAP", "junk")
    with pytest.raises(MalformedInput):
        enumerate_subalgebras(boolean_algebra(3))


def test_threaded_enumeration_is_canonical():
    L = catalog("hsum(2^3,2^3)")
    plain = enumerate_subalgebras(L)
    threaded = enumerate_subalgebras(L, threads=4)
    assert [n.members for n in plain.nodes] == [n.members for n in threaded.nodes]
    assert plain.up == threaded.up


def test_abstract_poset_validation():
    with pytest.raises(NotAPartialOrder):
        AbstractPoset([0b10, 0b11])  # not reflexive at 0
    with pytest.raises(NotAPartialOrder):
        AbstractPoset.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    with pytest.raises(MalformedInput):
        AbstractPoset.from_pairs(2, [(0, 0), (0, 0), (1, 1)])
    chain = AbstractPoset.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)])
    assert chain.bottom() == 0 and chain.top() == 2
    assert chain.height(2) == 2
    no_bottom = AbstractPoset([0b01, 0b10])
    assert no_bottom.bottom() is None
    with pytest.raises(NoLeastElement):
        no_bottom.atoms()


def test_dual_and_relabel():
    p = sub(boolean_algebra(3)).as_abstract()
    d = p.dual()
    for x in range(p.size):
        for y in range(p.size):
            assert p.leq(x, y) == d.leq(y, x)
    r = p.relabel([4, 3, 2, 1, 0])
    assert poset_isomorphic(p, r) is not None

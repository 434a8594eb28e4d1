"""Lifting subalgebra-poset isomorphisms to lattice isomorphisms.

A poset isomorphism between the Boolean-subalgebra posets of two
orthomodular lattices is realized by element isomorphisms: every block with
more than four elements lifts uniquely through the Boolean machinery, the
lifts glue because they agree on intersections, and each four-element block
leaves an independent two-way choice.  The same works from the full
subalgebra lattices once the Boolean nodes are recognized order-
theoretically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    BlockMismatch,
    GlueConflict,
    NotAnIso,
    RestrictionMismatch,
    Unsupported,
)
from .lattice_core import (
    FiniteOrtholattice,
    Morphism,
    ORTHOMODULAR,
    bits,
    find_isomorphism,
    morphism,
    sublattice,
)
from .sachs_boolean import lift_boolean_iso
from .subalgebra_posets import (
    AbstractPoset,
    SubalgebraPoset,
    check_order_iso,
    enumerate_subalgebras,
    poset_isomorphic,
)
from . import sachs_boolean

MAX_FOUR_BLOCK_CHOICES = 6


@dataclass(frozen=True)
class PosetIso:
    """A checked order isomorphism between two posets, as a node map."""

    source: AbstractPoset
    target: AbstractPoset
    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]


def poset_iso(source: AbstractPoset, target: AbstractPoset,
              mapping: Sequence[int]) -> PosetIso:
    """Validate ``mapping`` as an order isomorphism; raises NotAnIso."""
    return PosetIso(source, target, check_order_iso(mapping, source, target))


def induced_node_map(psi: Morphism, source_poset: SubalgebraPoset,
                     target_poset: SubalgebraPoset) -> tuple[int, ...]:
    """The node map x -> psi[x] a lattice isomorphism induces on subalgebra posets."""
    return tuple(target_poset.node_index(psi.apply_mask(node.members))
                 for node in source_poset.nodes)


def _as_mapping(phi) -> Sequence[int]:
    return phi.mapping if isinstance(phi, PosetIso) else phi


def lift_bsub_iso(L: FiniteOrtholattice, M: FiniteOrtholattice, phi,
                  bsub_l: Optional[SubalgebraPoset] = None,
                  bsub_m: Optional[SubalgebraPoset] = None,
                  canonical_only: bool = False) -> list[Morphism]:
    """Lift a BSub(L) -> BSub(M) poset isomorphism to lattice isomorphisms.

    Every returned morphism f satisfies f[y] = phi(y) for all nodes y.  With
    k four-element blocks the list has 2^k entries (one per combination of
    atom-pair matchings, the lowest-to-lowest choice first); with none it
    has exactly one.  ``canonical_only`` keeps just the first combination.
    The full list is refused above 6 four-element blocks.

    Blocks larger than four elements are lifted through their subalgebra
    lattices and glued; a disagreement on a shared element (impossible for
    genuine inputs) raises GlueConflict.
    """
    if L.flavor != ORTHOMODULAR or M.flavor != ORTHOMODULAR:
        raise NotAnIso("lifting is defined between orthomodular lattices")
    if bsub_l is None:
        bsub_l = enumerate_subalgebras(L, boolean_only=True)
    if bsub_m is None:
        bsub_m = enumerate_subalgebras(M, boolean_only=True)
    phi = check_order_iso(_as_mapping(phi), bsub_l, bsub_m)

    maximal_l = bsub_l.maximal_elements()
    maximal_m = set(bsub_m.maximal_elements())
    if {phi[x] for x in maximal_l} != maximal_m:
        raise BlockMismatch("node map does not match up the maximal nodes")

    global_map = [-1] * L.n
    global_map[0] = 0
    global_map[L.n - 1] = M.n - 1
    four_blocks = []
    for x in maximal_l:
        xmask = bsub_l.nodes[x].members
        ymask = bsub_m.nodes[phi[x]].members
        size = xmask.bit_count()
        if size == 2:
            continue
        if size == 4:
            if ymask.bit_count() != 4:
                raise BlockMismatch("four-element block mapped to a larger block")
            four_blocks.append((xmask, ymask))
            continue
        bx, bmap = sublattice(L, xmask)
        cy, cmap = sublattice(M, ymask)
        cinv = {g: i for i, g in enumerate(cmap)}
        sub_bx = enumerate_subalgebras(bx)
        sub_cy = enumerate_subalgebras(cy)
        psi_nodes = []
        for node in sub_bx.nodes:
            gmask = 0
            for e in bits(node.members):
                gmask |= 1 << bmap[e]
            hmask = bsub_m.nodes[phi[bsub_l.node_index(gmask)]].members
            local = 0
            for h in bits(hmask):
                local |= 1 << cinv[h]
            psi_nodes.append(sub_cy.node_index(local))
        fx = lift_boolean_iso(bx, cy, psi_nodes, sub_bx, sub_cy)[0]
        for e_local, e_global in enumerate(bmap):
            value = cmap[fx.mapping[e_local]]
            if global_map[e_global] not in (-1, value):
                raise GlueConflict(
                    f"blockwise lifts disagree on element {e_global}")
            global_map[e_global] = value

    choice_pairs = []
    for xmask, ymask in four_blocks:
        p, q = [e for e in bits(xmask) if e != 0 and e != L.n - 1]
        c, d = [e for e in bits(ymask) if e != 0 and e != M.n - 1]
        assert global_map[p] == -1 and global_map[q] == -1
        choice_pairs.append(((p, q), ((c, d), (d, c))))
    if not canonical_only and len(choice_pairs) > MAX_FOUR_BLOCK_CHOICES:
        raise Unsupported(
            f"{len(choice_pairs)} four-element blocks; request the canonical lift")

    combos = itertools.product(*(range(2) for _ in choice_pairs))
    if canonical_only:
        combos = [tuple(0 for _ in choice_pairs)]
    out = []
    for combo in combos:
        candidate = list(global_map)
        for ((p, q), options), pick in zip(choice_pairs, combo):
            candidate[p], candidate[q] = options[pick]
        assert -1 not in candidate
        try:
            f = morphism(L, M, candidate)
        except Exception as exc:
            raise GlueConflict(f"glued map is not a homomorphism: {exc}") from exc
        if f.kind != "iso":
            raise GlueConflict("glued map is not an isomorphism")
        for i, node in enumerate(bsub_l.nodes):
            if f.apply_mask(node.members) != bsub_m.nodes[phi[i]].members:
                raise GlueConflict("glued map does not realize the node map")
        out.append(f)
    return out


def recognize_boolean_node(sub_l: SubalgebraPoset, x: int) -> bool:
    """Order-theoretic Boolean recognition inside a full subalgebra lattice.

    The interval below a Boolean node is the subalgebra lattice of a Boolean
    algebra, hence dual to a partition lattice; the candidate atom count
    comes from counting interval atoms (a Boolean algebra with 2^k elements
    has 2^(k-1) - 1 atoms in its subalgebra lattice).
    """
    interval, _ = sub_l.interval_below(x)
    bottom = interval.bottom()
    assert bottom is not None
    a = len(tuple(bits(interval.cover_up[bottom])))
    if (a + 1) & a:
        return False  # atom count + 1 must be a power of two
    k = (a + 1).bit_length()
    lattice, _ = sachs_boolean.partition_lattice(k)
    return poset_isomorphic(interval, lattice.dual()) is not None


def lift_sub_iso(L: FiniteOrtholattice, M: FiniteOrtholattice, phi,
                 sub_l: Optional[SubalgebraPoset] = None,
                 sub_m: Optional[SubalgebraPoset] = None,
                 canonical_only: bool = False) -> list[Morphism]:
    """Lift a Sub(L) -> Sub(M) lattice isomorphism to lattice isomorphisms.

    Boolean nodes are recognized order-theoretically on both sides; the map
    must restrict to a bijection between them (else RestrictionMismatch),
    and the restriction is lifted.  Every returned morphism realizes phi on
    all subalgebras, Boolean or not.
    """
    if sub_l is None:
        sub_l = enumerate_subalgebras(L)
    if sub_m is None:
        sub_m = enumerate_subalgebras(M)
    phi = check_order_iso(_as_mapping(phi), sub_l, sub_m)
    bool_l = [i for i in range(sub_l.size) if recognize_boolean_node(sub_l, i)]
    bool_m = [i for i in range(sub_m.size) if recognize_boolean_node(sub_m, i)]
    if sorted(phi[i] for i in bool_l) != bool_m:
        raise RestrictionMismatch("recognized Boolean nodes do not correspond")

    bsub_l = enumerate_subalgebras(L, boolean_only=True)
    bsub_m = enumerate_subalgebras(M, boolean_only=True)
    assert [sub_l.nodes[i].members for i in bool_l] == \
        [n.members for n in bsub_l.nodes]
    assert [sub_m.nodes[i].members for i in bool_m] == \
        [n.members for n in bsub_m.nodes]
    restricted = tuple(
        bsub_m.node_index(sub_m.nodes[phi[i]].members) for i in bool_l)
    out = lift_bsub_iso(L, M, restricted, bsub_l, bsub_m,
                        canonical_only=canonical_only)
    for f in out:
        for i, node in enumerate(sub_l.nodes):
            if f.apply_mask(node.members) != sub_m.nodes[phi[i]].members:
                raise GlueConflict("lift does not realize the full node map")
    return out


@dataclass(frozen=True)
class DeterminationReport:
    """Outcome of comparing two lattices through their Boolean-subalgebra posets."""

    posets_isomorphic: bool
    lattices_isomorphic: bool
    both_orthomodular: bool
    lifted_count: Optional[int]
    consistent: bool
    note: str

    def lines(self) -> list[str]:
        yn = {True: "yes", False: "no"}
        out = [
            f"bsub posets isomorphic: {yn[self.posets_isomorphic]}",
            f"lattices isomorphic: {yn[self.lattices_isomorphic]}",
            f"both orthomodular: {yn[self.both_orthomodular]}",
        ]
        if self.lifted_count is not None:
            out.append(f"lifted isomorphisms: {self.lifted_count}")
        out.append(f"consistent with determination: {yn[self.consistent]}")
        if self.note:
            out.append(f"note: {self.note}")
        return out


def verify_determination(L: FiniteOrtholattice, M: FiniteOrtholattice) -> DeterminationReport:
    """Check that the Boolean-subalgebra poset pins the lattice down.

    For orthomodular inputs the poset comparison and the brute-force lattice
    comparison must agree, and a poset witness must lift to a genuine
    isomorphism.  Non-orthomodular inputs are reported as outside the
    hypothesis (the hexagon shows the posets alone cannot decide those).
    """
    bsub_l = enumerate_subalgebras(L, boolean_only=True)
    bsub_m = enumerate_subalgebras(M, boolean_only=True)
    witness = poset_isomorphic(bsub_l, bsub_m)
    lattice_iso = find_isomorphism(L, M)
    both = L.flavor == ORTHOMODULAR and M.flavor == ORTHOMODULAR
    lifted = None
    if witness is not None and both:
        lifted = len(lift_bsub_iso(L, M, witness, bsub_l, bsub_m))
    if both:
        consistent = (witness is not None) == (lattice_iso is not None)
        if witness is not None:
            consistent = consistent and lifted > 0
        note = ""
    else:
        consistent = True
        bad = [x.name or "input" for x in (L, M) if x.flavor != ORTHOMODULAR]
        note = "outside OML hypothesis: " + ", ".join(bad) + " not orthomodular"
    return DeterminationReport(
        posets_isomorphic=witness is not None,
        lattices_isomorphic=lattice_iso is not None,
        both_orthomodular=both,
        lifted_count=lifted,
        consistent=consistent,
        note=note,
    )

"""Preimage maps of homomorphisms and how much they remember.

Every homomorphism f: L -> M induces the preimage map f-inverse from Sub(M)
to Sub(L); it preserves all meets but the assignment is neither dense, full
nor faithful as a contravariant construction.  The recovery trichotomy
below pins down exactly when f-inverse determines f: never informative for
two-element images, ambiguous exactly through four-element blocks of the
image, unique otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import SizeCap
from .lattice_core import (
    FiniteOrtholattice,
    Morphism,
    SubalgebraSet,
    boolean_algebra,
    mask_of,
    morphism,
    sublattice,
)
from .subalgebra_posets import SubalgebraPoset, enumerate_subalgebras

HOM_SEARCH_CAP = 256


@dataclass(frozen=True)
class PreimageMap:
    """The node map x -> f^{-1}[x] from Sub(target) to Sub(source)."""

    source_poset: SubalgebraPoset   # Sub(M) for f: L -> M
    target_poset: SubalgebraPoset   # Sub(L)
    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def preserves_meets(self) -> bool:
        """Binary meets and the top; enough for all meets at finite size."""
        P, Q = self.source_poset, self.target_poset
        if self.mapping[P.top()] != Q.top():
            return False
        for x in range(P.size):
            for y in range(x, P.size):
                m = P.meet(x, y)
                if Q.meet(self.mapping[x], self.mapping[y]) != self.mapping[m]:
                    return False
        return True


def image_subalgebra(f: Morphism) -> SubalgebraSet:
    """The image of f as a subalgebra of the target."""
    return f.target.subalgebra(f.image_mask())


def preimage_functor(f: Morphism,
                     sub_m: Optional[SubalgebraPoset] = None,
                     sub_l: Optional[SubalgebraPoset] = None) -> PreimageMap:
    """The preimage node map induced by a homomorphism f: L -> M."""
    if sub_m is None:
        sub_m = enumerate_subalgebras(f.target)
    if sub_l is None:
        sub_l = enumerate_subalgebras(f.source)
    out = []
    for node in sub_m.nodes:
        pre = mask_of(a for a in range(f.source.n) if node.members >> f.mapping[a] & 1)
        out.append(sub_l.node_index(pre))
    return PreimageMap(sub_m, sub_l, tuple(out))


def enumerate_homs(L: FiniteOrtholattice, M: FiniteOrtholattice) -> list[Morphism]:
    """All homomorphisms L -> M, sorted by their mapping tuples.

    Backtracking over element assignments in height order, pruned by
    monotonicity, forced complements, and meet/join consistency against
    already-assigned elements; complete assignments are revalidated.  Only
    for small inputs: |L| * |M| is capped at 256.
    """
    if L.n * M.n > HOM_SEARCH_CAP:
        raise SizeCap(f"hom search capped at |L|*|M| <= {HOM_SEARCH_CAP}")
    n = L.n
    order = sorted(range(n), key=lambda a: (L.down[a].bit_count(), a))
    mapping = [-1] * n
    mapping[0] = 0
    mapping[n - 1] = M.n - 1
    results: list[Morphism] = []

    def consistent(a: int, v: int) -> bool:
        for c in range(n):
            w = mapping[c]
            if w < 0:
                continue
            if L.up[a] >> c & 1 and not M.up[v] >> w & 1:
                return False
            if L.up[c] >> a & 1 and not M.up[w] >> v & 1:
                return False
            fm = mapping[L.meet(a, c)]
            if fm >= 0 and M.meet(v, w) != fm:
                return False
            fj = mapping[L.join(a, c)]
            if fj >= 0 and M.join(v, w) != fj:
                return False
        return True

    def search(pos: int):
        while pos < n and mapping[order[pos]] >= 0:
            pos += 1
        if pos == n:
            try:
                results.append(morphism(L, M, tuple(mapping)))
            except Exception:
                pass
            return
        a = order[pos]
        ao = L.ortho[a]
        for v in range(M.n):
            if not consistent(a, v):
                continue
            vo = M.ortho[v]
            mapping[a] = v
            if mapping[ao] < 0:
                if consistent(ao, vo):
                    mapping[ao] = vo
                    search(pos + 1)
                    mapping[ao] = -1
            elif mapping[ao] == vo:
                search(pos + 1)
            mapping[a] = -1

    search(0)
    results.sort(key=lambda f: f.mapping)
    return results


class RecoveryKind(enum.Enum):
    TWO_ELEMENT_IMAGE = "TwoElementImage"
    FOUR_BLOCK_IMAGE = "FourBlockImage"
    DETERMINED = "Determined"


@dataclass(frozen=True)
class RecoveryReport:
    """How much the preimage map of a homomorphism determines it."""

    kind: RecoveryKind
    image_size: int
    witness: Optional[Morphism]   # a g != f with the same preimage map
    unique: Optional[bool]        # set on the Determined branch

    def lines(self) -> list[str]:
        out = [f"classification: {self.kind.value}",
               f"image size: {self.image_size}"]
        if self.witness is not None:
            out.append(f"witness with equal preimage map: {list(self.witness.mapping)}")
        if self.unique is not None:
            out.append(f"unique among all homomorphisms: {'yes' if self.unique else 'no'}")
        return out


def classify_recovery(f: Morphism) -> RecoveryReport:
    """Trichotomy for recovering f from its preimage map.

    Two-element image: nothing beyond the image is recoverable.  An image
    with a four-element block: swapping that block's atom pair after f gives
    a different homomorphism with the same preimage map; the witness is
    constructed.  Otherwise f is the unique homomorphism with its preimage
    map, verified against the full enumeration.
    """
    im = image_subalgebra(f)
    if len(im) == 2:
        return RecoveryReport(RecoveryKind.TWO_ELEMENT_IMAGE, 2, None, None)
    im_lattice, im_map = sublattice(f.target, im.members)
    four = [blk for blk in im_lattice.blocks() if len(blk) == 4]
    if four:
        p, q = [im_map[e] for e in four[0].elements
                if e != 0 and e != im_lattice.n - 1]
        swap = {p: q, q: p}
        g = morphism(f.source, f.target,
                     tuple(swap.get(v, v) for v in f.mapping))
        assert g.mapping != f.mapping
        sub_m = enumerate_subalgebras(f.target)
        sub_l = enumerate_subalgebras(f.source)
        assert preimage_functor(f, sub_m, sub_l).mapping == \
            preimage_functor(g, sub_m, sub_l).mapping
        return RecoveryReport(RecoveryKind.FOUR_BLOCK_IMAGE, len(im), g, None)
    sub_m = enumerate_subalgebras(f.target)
    sub_l = enumerate_subalgebras(f.source)
    target_map = preimage_functor(f, sub_m, sub_l).mapping
    matches = sum(1 for g in enumerate_homs(f.source, f.target)
                  if preimage_functor(g, sub_m, sub_l).mapping == target_map)
    return RecoveryReport(RecoveryKind.DETERMINED, len(im), None, matches == 1)


@dataclass(frozen=True)
class MeetMapReport:
    """A meet-preserving self-map of Sub(2^3) no homomorphism induces."""

    poset: SubalgebraPoset
    mapping: tuple[int, ...]
    meets_preserved: bool
    realized_by_hom: bool
    hom_count: int

    def lines(self) -> list[str]:
        return [
            f"map on Sub(2^3): {list(self.mapping)}",
            f"preserves all meets: {'yes' if self.meets_preserved else 'no'}",
            f"realized as a preimage map: {'yes' if self.realized_by_hom else 'no'}",
            f"homomorphisms checked: {self.hom_count}",
        ]


def unrealized_meet_preserving_map() -> MeetMapReport:
    """Send one atom node of Sub(2^3) to the bottom, fix everything else.

    The result preserves all meets (and trivially all up-directed joins at
    this size) yet differs from the preimage map of every endomorphism of
    the 8-element Boolean algebra: collapsing that node would force the
    endomorphism to be simultaneously one-one and not onto.
    """
    B = boolean_algebra(3)
    s = enumerate_subalgebras(B)
    collapsed = s.atoms()[-1]
    mapping = tuple(s.bottom() if i == collapsed else i for i in range(s.size))
    pm = PreimageMap(s, s, mapping)
    homs = enumerate_homs(B, B)
    realized = any(preimage_functor(h, s, s).mapping == mapping for h in homs)
    return MeetMapReport(s, mapping, pm.preserves_meets(), realized, len(homs))

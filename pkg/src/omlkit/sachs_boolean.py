"""Dual and principal-dual subalgebras of finite Boolean algebras.

A dual subalgebra is an ideal together with its complementary filter; it is
principal dual (p.d.) when the ideal is [0,a] for a single element a.  Both
kinds admit purely order-theoretic descriptions inside the subalgebra
lattice, and the p.d. ones carry enough information to rebuild an element
isomorphism from a subalgebra-lattice isomorphism.  This module also holds
the partition side of the classical duality between Sub(2^n) and the
partition lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from sympy.utilities.iterables import multiset_partitions

from .errors import Inconsistent, MalformedInput, NotBoolean
from .lattice_core import (
    FiniteOrtholattice,
    Morphism,
    ORTHOMODULAR,
    SubalgebraSet,
    bits,
    morphism,
)
from .subalgebra_posets import (
    AbstractPoset,
    SubalgebraPoset,
    check_order_iso,
    enumerate_subalgebras,
)


def is_boolean_algebra(L: FiniteOrtholattice) -> bool:
    return L.flavor == ORTHOMODULAR and L.is_boolean(L.universe)


def _require_boolean(B: FiniteOrtholattice):
    if not is_boolean_algebra(B):
        raise NotBoolean("operation needs a Boolean algebra")


def _as_mask(B: FiniteOrtholattice, x) -> int:
    mask = x.members if isinstance(x, SubalgebraSet) else x
    if B.closure_mask(mask) != mask:
        raise MalformedInput("element set is not a closed subalgebra")
    return mask


@dataclass(frozen=True)
class DualDecomposition:
    """A subalgebra split as ideal plus complementary filter (bit sets)."""

    subalgebra: SubalgebraSet
    ideal: int
    filter: int


def dual_decomposition(B: FiniteOrtholattice, x) -> Optional[DualDecomposition]:
    """Split x into I = {a : [0,a] in x} and its complementary filter.

    Returns the decomposition when x = I u I', i.e. when x is a dual
    subalgebra, else None.
    """
    _require_boolean(B)
    mask = _as_mask(B, x)
    ideal = 0
    for a in bits(mask):
        if not B.down[a] & ~mask:
            ideal |= 1 << a
    filt = 0
    for a in bits(ideal):
        filt |= 1 << B.ortho[a]
    if ideal | filt != mask:
        return None
    return DualDecomposition(SubalgebraSet(B, mask), ideal, filt)


def pd_mask(B: FiniteOrtholattice, a: int) -> int:
    """The principal dual subalgebra [0,a] u [a',1] as a bit set."""
    return B.down[a] | B.up[B.ortho[a]]


def principal_element(B: FiniteOrtholattice, x) -> Optional[int]:
    """Some a with x = [0,a] u [a',1], or None; the direct p.d. oracle."""
    _require_boolean(B)
    mask = _as_mask(B, x)
    for a in bits(mask):
        if pd_mask(B, a) == mask:
            return a
    return None


def dual_order_test(sub_b: SubalgebraPoset, x: int) -> bool:
    """Order-theoretic dual-subalgebra test inside Sub(B).

    True when every atom incomparable to x joins with x to a cover of x
    (vacuously true when no atom is incomparable).
    """
    for y in sub_b.atoms():
        if sub_b.leq(y, x) or sub_b.leq(x, y):
            continue
        j = sub_b.join(x, y)
        if j is None or not sub_b.cover_up[x] >> j & 1:
            return False
    return True


def pd_order_test(sub_b: SubalgebraPoset, x: int) -> bool:
    """Order-theoretic principal-dual test inside Sub(B).

    True when x is the bottom or the top, or an atom passing the dual order
    test, or passes the dual order test and meets some dual node in an atom
    that fails it.
    """
    if x == sub_b.bottom() or x == sub_b.top():
        return True
    if not dual_order_test(sub_b, x):
        return False
    atom_set = set(sub_b.atoms())
    if x in atom_set:
        return True
    for y in range(sub_b.size):
        if not dual_order_test(sub_b, y):
            continue
        m = sub_b.meet(x, y)
        if m in atom_set and not dual_order_test(sub_b, m):
            return True
    return False


# -- partitions --------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """A partition of {1..n}: disjoint sorted blocks, sorted by least member."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for blk in self.blocks:
            if not blk or list(blk) != sorted(blk):
                raise MalformedInput("partition blocks must be nonempty and sorted")
            if seen & set(blk):
                raise MalformedInput("partition blocks overlap")
            seen.update(blk)
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise MalformedInput("partition blocks must be sorted by least member")

    @classmethod
    def of(cls, blocks) -> "Partition":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return cls(canon)

    @property
    def universe(self) -> frozenset[int]:
        return frozenset(i for blk in self.blocks for i in blk)

    def refines(self, other: "Partition") -> bool:
        """Every block of self sits inside a block of other."""
        lookup = {}
        for k, blk in enumerate(other.blocks):
            for i in blk:
                lookup[i] = k
        for blk in self.blocks:
            ks = {lookup.get(i) for i in blk}
            if len(ks) != 1 or None in ks:
                return False
        return True

    def __str__(self):
        return "|".join("".join(str(i) for i in blk) for blk in self.blocks)

    def __len__(self):
        return len(self.blocks)


def subalgebra_to_partition(B: FiniteOrtholattice, x) -> Partition:
    """Partition of B's atoms by the atoms of the subalgebra x.

    Atom positions are 1-based in ascending element order, so finer
    partitions correspond to larger subalgebras.
    """
    _require_boolean(B)
    mask = _as_mask(B, x)
    atoms = B.atoms()
    pos = {a: i + 1 for i, a in enumerate(atoms)}
    blocks = []
    for s in bits(mask):
        if s == 0:
            continue
        if B.down[s] & mask == (1 << s) | 1:  # s is an atom of x
            blocks.append(tuple(pos[p] for p in atoms if B.leq(p, s)))
    return Partition.of(blocks)


def partition_to_subalgebra(B: FiniteOrtholattice, p: Partition) -> SubalgebraSet:
    """The subalgebra whose atoms are the joins of the partition blocks."""
    _require_boolean(B)
    atoms = B.atoms()
    if p.universe != frozenset(range(1, len(atoms) + 1)):
        raise MalformedInput("partition does not cover the atom positions")
    block_join = []
    for blk in p.blocks:
        v = 0
        for i in blk:
            v = B.join(v, atoms[i - 1])
        block_join.append(v)
    mask = 0
    for choice in range(1 << len(block_join)):
        v = 0
        for k in bits(choice):
            v = B.join(v, block_join[k])
        mask |= 1 << v
    return B.subalgebra(mask)


def partition_lattice(n: int) -> tuple[AbstractPoset, tuple[Partition, ...]]:
    """All partitions of {1..n} ordered by refinement (finer below).

    Node 0 is the all-singletons partition; the one-block partition is the
    top.  Returns (poset, partitions) with partitions in node order.
    """
    if n < 1:
        raise MalformedInput("partition lattice needs n >= 1")
    parts = sorted(
        (Partition.of(blocks) for blocks in multiset_partitions(list(range(1, n + 1)))),
        key=lambda p: p.blocks)
    rows = []
    for p in parts:
        row = 0
        for j, q in enumerate(parts):
            if p.refines(q):
                row |= 1 << j
        rows.append(row)
    return AbstractPoset(rows), tuple(parts)


# -- lifting a subalgebra-lattice isomorphism --------------------------------

def lift_boolean_iso(B: FiniteOrtholattice, C: FiniteOrtholattice,
                     phi: Sequence[int],
                     sub_b: Optional[SubalgebraPoset] = None,
                     sub_c: Optional[SubalgebraPoset] = None) -> list[Morphism]:
    """Lift a Sub(B) -> Sub(C) order isomorphism to element isomorphisms.

    ``phi`` maps node indices of the canonical Sub(B) enumeration to node
    indices of Sub(C).  Returns every isomorphism f: B -> C with
    f[x] = phi(x) for all nodes x: exactly two when |B| = 4 (the two ways
    to match the atom pairs), exactly one otherwise.

    The unique lift is read off the principal dual subalgebras: an element b
    that is neither a coatom nor the top determines the node [0,b] u [b',1],
    whose image node is principal dual again and names f(b); coatoms and the
    top follow by complement.
    """
    _require_boolean(B)
    _require_boolean(C)
    if sub_b is None:
        sub_b = enumerate_subalgebras(B)
    if sub_c is None:
        sub_c = enumerate_subalgebras(C)
    phi = check_order_iso(phi, sub_b, sub_c)
    if B.n != C.n:
        raise Inconsistent("isomorphic subalgebra lattices of different-size algebras")

    def check_node_images(f: Morphism):
        for i, node in enumerate(sub_b.nodes):
            if f.apply_mask(node.members) != sub_c.nodes[phi[i]].members:
                raise Inconsistent("lift does not realize the node map")

    if B.n == 2:
        f = morphism(B, C, (0, 1))
        check_node_images(f)
        return [f]

    if B.n == 4:
        p, q = B.atoms()
        c, d = C.atoms()
        out = []
        for cc, dd in ((c, d), (d, c)):
            m = [0] * 4
            m[p], m[q] = cc, dd
            m[3] = 3
            f = morphism(B, C, m)
            check_node_images(f)
            out.append(f)
        return out

    coatoms = set(B.coatoms())
    mapping: list[Optional[int]] = [None] * B.n
    for b in range(B.n):
        if b == B.n - 1 or b in coatoms:
            continue
        node = sub_b.node_index(pd_mask(B, b))
        image = sub_c.nodes[phi[node]].members
        dd = dual_decomposition(C, image)
        if dd is None:
            raise Inconsistent("image of a principal dual node is not dual")
        c = None
        for e in bits(dd.ideal):
            if C.down[e] == dd.ideal:
                c = e
                break
        if c is None:
            raise Inconsistent("image of a principal dual node is not principal")
        mapping[b] = c
    for b in range(B.n):
        if mapping[b] is None:
            bo = B.ortho[b]
            if mapping[bo] is None:
                raise Inconsistent("complement of a coatom escaped the lift domain")
            mapping[b] = C.ortho[mapping[bo]]
    try:
        f = morphism(B, C, mapping)
    except Exception as exc:
        raise Inconsistent(f"lifted map is not an isomorphism: {exc}") from exc
    if f.kind != "iso":
        raise Inconsistent("lifted map is not bijective")
    check_node_images(f)
    return [f]

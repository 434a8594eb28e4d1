"""Finite ortholattices and orthomodular lattices over bit-set universes.

Elements are the integers 0..n-1 with 0 the least and n-1 the greatest
element.  Every subset of the lattice is a Python int used as a bit set,
which is why the universe is capped at 64 elements: one machine word per
subset keeps the exhaustive searches cheap.

Validated lattices are immutable after construction; all operations here are
pure functions of their inputs, so instances are safe to share freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from .errors import (
    BadOrthocomplement,
    FlavorError,
    MalformedInput,
    NoBoundedLattice,
    NotAMorphism,
    NotAPartialOrder,
    SizeCap,
    UnknownName,
)

MAX_ELEMENTS = 64

ORTHOLATTICE = "ortholattice"
ORTHOMODULAR = "orthomodular"


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


class FiniteOrtholattice:
    """A validated finite ortholattice, possibly orthomodular.

    ``up[i]`` is the bit set of elements j with i <= j.  The constructor
    checks the partial-order axioms, that 0 and n-1 are the bounds, that
    every pair has a meet and a join, and the orthocomplementation laws
    (involutive, order-reversing, complementing).  ``flavor`` records
    whether the orthomodular law  a <= b  implies  b = a v (a' ^ b)  holds.
    """

    def __init__(self, up: Sequence[int], ortho: Sequence[int], name: Optional[str] = None):
        up = tuple(up)
        n = len(up)
        if n < 2:
            raise NoBoundedLattice("a bounded lattice needs at least 2 elements")
        if n > MAX_ELEMENTS:
            raise SizeCap(f"{n} elements exceed the bit-set cap of {MAX_ELEMENTS}")
        universe = (1 << n) - 1
        for i, row in enumerate(up):
            if row & ~universe:
                raise MalformedInput(f"row {i} mentions elements outside 0..{n - 1}")

        for i in range(n):
            if not up[i] >> i & 1:
                raise NotAPartialOrder(f"relation is not reflexive at {i}")
        for i in range(n):
            for j in bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise NotAPartialOrder(f"antisymmetry fails on {i}, {j}")
                if up[j] & ~up[i]:
                    raise NotAPartialOrder(f"transitivity fails above {i} <= {j}")

        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        down = tuple(down)
        if up[0] != universe:
            raise NoBoundedLattice("element 0 is not the least element")
        if down[n - 1] != universe:
            raise NoBoundedLattice(f"element {n - 1} is not the greatest element")

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                common = down[a] & down[b]
                g = _unique_bound(down, common)
                if g is None:
                    raise NoBoundedLattice(f"elements {a} and {b} have no meet")
                meet[a][b] = meet[b][a] = g
                common = up[a] & up[b]
                g = _unique_bound(up, common)
                if g is None:
                    raise NoBoundedLattice(f"elements {a} and {b} have no join")
                join[a][b] = join[b][a] = g

        ortho = tuple(ortho)
        if len(ortho) != n or sorted(ortho) != list(range(n)):
            raise BadOrthocomplement("ortho is not a permutation of the elements")
        for a in range(n):
            if ortho[ortho[a]] != a:
                raise BadOrthocomplement(f"ortho is not an involution at {a}")
        for a in range(n):
            for b in bits(up[a]):
                if not up[ortho[b]] >> ortho[a] & 1:
                    raise BadOrthocomplement(f"ortho does not reverse {a} <= {b}")
        for a in range(n):
            if meet[a][ortho[a]] != 0 or join[a][ortho[a]] != n - 1:
                raise BadOrthocomplement(f"element {a} and its image are not complements")

        self.n = n
        self.up = up
        self.down = down
        self.ortho = ortho
        self.name = name
        self._meet = tuple(tuple(row) for row in meet)
        self._join = tuple(tuple(row) for row in join)

        omod = True
        for a in range(n):
            ao = ortho[a]
            for b in bits(up[a]):
                if join[a][meet[ao][b]] != b:
                    omod = False
                    break
            if not omod:
                break
        self.flavor = ORTHOMODULAR if omod else ORTHOLATTICE

    # -- basic queries ----------------------------------------------------

    def __repr__(self):
        tag = self.name or f"{self.n} elements"
        return f"<FiniteOrtholattice {tag}: {self.flavor}>"

    def __len__(self):
        return self.n

    @property
    def universe(self) -> int:
        return (1 << self.n) - 1

    @property
    def top(self) -> int:
        return self.n - 1

    @property
    def is_orthomodular(self) -> bool:
        return self.flavor == ORTHOMODULAR

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def ocomp(self, a: int) -> int:
        return self.ortho[a]

    @cached_property
    def cover_up(self) -> tuple[int, ...]:
        """cover_up[a] is the bit set of elements covering a."""
        out = []
        for a in range(self.n):
            cov = 0
            for b in bits(self.up[a] & ~(1 << a)):
                if self.up[a] & self.down[b] == (1 << a) | (1 << b):
                    cov |= 1 << b
            out.append(cov)
        return tuple(out)

    @cached_property
    def cover_down(self) -> tuple[int, ...]:
        out = [0] * self.n
        for a in range(self.n):
            for b in bits(self.cover_up[a]):
                out[b] |= 1 << a
        return tuple(out)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Length of a longest chain from 0 up to each element."""
        h = [0] * self.n
        for e in sorted(range(self.n), key=lambda x: self.down[x].bit_count()):
            below = self.cover_down[e]
            h[e] = 1 + max((h[b] for b in bits(below)), default=-1)
        return tuple(h)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        h = [0] * self.n
        for e in sorted(range(self.n), key=lambda x: self.up[x].bit_count()):
            above = self.cover_up[e]
            h[e] = 1 + max((h[b] for b in bits(above)), default=-1)
        return tuple(h)

    def atoms(self) -> tuple[int, ...]:
        return tuple(bits(self.cover_up[0]))

    def coatoms(self) -> tuple[int, ...]:
        return tuple(bits(self.cover_down[self.n - 1]))

    # -- commutation and subalgebras --------------------------------------

    def commutes(self, a: int, b: int) -> bool:
        """Whether a = (a^b) v (a^b'); only meaningful on orthomodular lattices."""
        if self.flavor != ORTHOMODULAR:
            raise FlavorError("commutation is only defined on orthomodular lattices")
        return self._commutes(a, b)

    def _commutes(self, a: int, b: int) -> bool:
        row = self._meet[a]
        return self._join[row[b]][row[self.ortho[b]]] == a

    def closure_mask(self, mask: int) -> int:
        """Close ``mask`` under complement, meet and join, plus the bounds."""
        mask |= 1 | 1 << (self.n - 1)
        members = list(bits(mask))
        meet, join, ortho = self._meet, self._join, self.ortho
        i = 0
        while i < len(members):
            e = members[i]
            i += 1
            o = ortho[e]
            if not mask >> o & 1:
                mask |= 1 << o
                members.append(o)
            me, je = meet[e], join[e]
            for k in range(i):
                m = members[k]
                v = me[m]
                if not mask >> v & 1:
                    mask |= 1 << v
                    members.append(v)
                v = je[m]
                if not mask >> v & 1:
                    mask |= 1 << v
                    members.append(v)
        return mask

    def generated_subalgebra(self, seed: Iterable[int] = ()) -> "SubalgebraSet":
        """Least subalgebra containing ``seed`` (and always 0 and n-1)."""
        mask = 0
        for e in seed:
            if not 0 <= e < self.n:
                raise MalformedInput(f"element {e} out of range")
            mask |= 1 << e
        return SubalgebraSet(self, self.closure_mask(mask))

    def subalgebra(self, members) -> "SubalgebraSet":
        """Wrap an element set as a SubalgebraSet, insisting it is closed."""
        mask = members if isinstance(members, int) else mask_of(members)
        if self.closure_mask(mask) != mask:
            raise MalformedInput("element set is not a closed subalgebra")
        return SubalgebraSet(self, mask)

    def is_boolean(self, s) -> bool:
        """Whether the closed set ``s`` is a Boolean subalgebra.

        Checks the pairwise commutation identity and distributivity on all
        triples; the bounds are skipped since they satisfy both trivially.
        """
        mask = s.members if isinstance(s, SubalgebraSet) else s
        els = [e for e in bits(mask) if e != 0 and e != self.n - 1]
        meet, join, ortho = self._meet, self._join, self.ortho
        for a in els:
            row = meet[a]
            for b in els:
                if join[row[b]][row[ortho[b]]] != a:
                    return False
        for a in els:
            row = meet[a]
            for b in els:
                ab = row[b]
                jb = join[b]
                for c in els:
                    if row[jb[c]] != join[ab][row[c]]:
                        return False
        return True

    def blocks(self) -> list["SubalgebraSet"]:
        """All maximal Boolean subalgebras, ascending by bit-set value.

        A block of an orthomodular lattice is exactly a maximal set of
        pairwise commuting elements, so this reduces to maximal-clique
        enumeration on the commutation graph.
        """
        if self.flavor != ORTHOMODULAR:
            raise FlavorError("blocks are defined for orthomodular lattices")
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self._commutes(a, b):
                    g.add_edge(a, b)
        out = []
        for clique in nx.find_cliques(g):
            mask = mask_of(clique)
            assert self.closure_mask(mask) == mask and self.is_boolean(mask)
            out.append(SubalgebraSet(self, mask))
        out.sort(key=lambda s: s.members)
        return out


def _unique_bound(cones: Sequence[int], common: int) -> Optional[int]:
    # the bound, if any, is the x in `common` whose cone is exactly `common`
    for x in bits(common):
        if cones[x] == common:
            return x
    return None


@dataclass(frozen=True)
class SubalgebraSet:
    """A closed subset of a fixed lattice, stored as a bit set of elements."""

    owner: FiniteOrtholattice
    members: int

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.members))

    def __len__(self):
        return self.members.bit_count()

    def __contains__(self, e: int) -> bool:
        return bool(self.members >> e & 1)

    def is_boolean(self) -> bool:
        return self.owner.is_boolean(self.members)

    def __repr__(self):
        return f"SubalgebraSet({{{','.join(map(str, self.elements))}}})"


# -- morphisms -------------------------------------------------------------

HOM = "hom"
EMBEDDING = "embedding"
ISO = "iso"


@dataclass(frozen=True)
class Morphism:
    """A validated structure map; kind is 'hom', 'embedding' or 'iso'."""

    source: FiniteOrtholattice
    target: FiniteOrtholattice
    mapping: tuple[int, ...]
    kind: str

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def apply_mask(self, mask: int) -> int:
        out = 0
        for e in bits(mask):
            out |= 1 << self.mapping[e]
        return out

    def image_mask(self) -> int:
        return self.apply_mask(self.source.universe)

    def __repr__(self):
        return f"Morphism({self.kind}: {list(self.mapping)})"


def morphism(source: FiniteOrtholattice, target: FiniteOrtholattice,
             mapping: Sequence[int]) -> Morphism:
    """Validate ``mapping`` as an ortholattice homomorphism and classify it.

    Raises NotAMorphism unless 0, 1, complement, meet and join are all
    preserved.  The returned kind is the strongest that applies.
    """
    mapping = tuple(mapping)
    n, m = source.n, target.n
    if len(mapping) != n or any(not 0 <= v < m for v in mapping):
        raise NotAMorphism("mapping is not a total map into the target")
    if mapping[0] != 0 or mapping[n - 1] != m - 1:
        raise NotAMorphism("mapping does not preserve the bounds")
    for a in range(n):
        if mapping[source.ortho[a]] != target.ortho[mapping[a]]:
            raise NotAMorphism(f"mapping does not preserve the complement of {a}")
    for a in range(n):
        for b in range(a, n):
            fa, fb = mapping[a], mapping[b]
            if mapping[source._meet[a][b]] != target._meet[fa][fb]:
                raise NotAMorphism(f"mapping does not preserve meet({a},{b})")
            if mapping[source._join[a][b]] != target._join[fa][fb]:
                raise NotAMorphism(f"mapping does not preserve join({a},{b})")
    kind = HOM
    if len(set(mapping)) == n:
        kind = EMBEDDING
        if n == m:
            inv = [0] * n
            for a, v in enumerate(mapping):
                inv[v] = a
            # bijective: confirm the inverse is a homomorphism too
            ok = all(inv[target.ortho[v]] == source.ortho[inv[v]] for v in range(m))
            ok = ok and all(
                inv[target._meet[v][w]] == source._meet[inv[v]][inv[w]]
                for v in range(m) for w in range(v, m))
            if not ok:
                raise NotAMorphism("bijective map whose inverse is not a homomorphism")
            kind = ISO
    return Morphism(source, target, mapping, kind)


def identity_morphism(L: FiniteOrtholattice) -> Morphism:
    return Morphism(L, L, tuple(range(L.n)), ISO)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f, revalidated."""
    if g.source is not f.target:
        raise NotAMorphism("composition mismatch: target of f is not source of g")
    return morphism(f.source, g.target, tuple(g.mapping[v] for v in f.mapping))


# -- isomorphism search (verification oracle) ------------------------------

def _iso_signatures(L: FiniteOrtholattice) -> list[tuple]:
    sig = []
    for a in range(L.n):
        o = L.ortho[a]
        sig.append((
            L.down[a].bit_count(), L.up[a].bit_count(),
            L.heights[a], L.depths[a],
            L.cover_up[a].bit_count(), L.cover_down[a].bit_count(),
            L.down[o].bit_count(), L.cover_up[o].bit_count(),
        ))
    return sig


def isomorphisms(L: FiniteOrtholattice, M: FiniteOrtholattice) -> Iterator[Morphism]:
    """All isomorphisms L -> M, in a canonical order.

    Backtracking over element bijections that preserve order and complement,
    pruned by per-element signatures (heights, cover degrees, the same data
    for the complement).  Deterministic: elements are processed in a fixed
    order and candidates tried ascending.
    """
    n = L.n
    if n != M.n or L.flavor != M.flavor:
        return
    sig_l = _iso_signatures(L)
    sig_m = _iso_signatures(M)
    if sorted(sig_l) != sorted(sig_m):
        return
    candidates = [[b for b in range(n) if sig_m[b] == sig_l[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: (len(candidates[a]), a))
    mapping = [-1] * n
    used = [False] * n

    def consistent(a: int, b: int) -> bool:
        for c in range(n):
            d = mapping[c]
            if d < 0:
                continue
            if bool(L.up[a] >> c & 1) != bool(M.up[b] >> d & 1):
                return False
            if bool(L.up[c] >> a & 1) != bool(M.up[d] >> b & 1):
                return False
        return True

    def place(a: int, b: int) -> bool:
        if not consistent(a, b):
            return False
        mapping[a] = b
        used[b] = True
        return True

    def unplace(a: int):
        used[mapping[a]] = False
        mapping[a] = -1

    def search(pos: int):
        while pos < n and mapping[order[pos]] >= 0:
            pos += 1
        if pos == n:
            yield morphism(L, M, tuple(mapping))
            return
        a = order[pos]
        ao = L.ortho[a]
        for b in candidates[a]:
            if used[b]:
                continue
            if not place(a, b):
                continue
            bo = M.ortho[b]
            forced = False
            if mapping[ao] < 0:
                if not used[bo] and place(ao, bo):
                    forced = True
                else:
                    unplace(a)
                    continue
            elif mapping[ao] != bo:
                unplace(a)
                continue
            yield from search(pos + 1)
            if forced:
                unplace(ao)
            unplace(a)

    yield from search(0)


def find_isomorphism(L: FiniteOrtholattice, M: FiniteOrtholattice) -> Optional[Morphism]:
    """Some isomorphism L -> M if one exists, else None (brute-force oracle)."""
    return next(isomorphisms(L, M), None)


def automorphisms(L: FiniteOrtholattice) -> list[Morphism]:
    return list(isomorphisms(L, L))


# -- constructions and the catalog -----------------------------------------

def boolean_algebra(num_atoms: int, name: Optional[str] = None) -> FiniteOrtholattice:
    """Power-set lattice on ``num_atoms`` atoms; element i is the subset i."""
    if not 1 <= num_atoms <= 6:
        raise SizeCap("Boolean construction supports 1..6 atoms")
    n = 1 << num_atoms
    full = n - 1
    up = [0] * n
    for i in range(n):
        row = 0
        for j in range(n):
            if i & j == i:
                row |= 1 << j
        up[i] = row
    ortho = [full ^ i for i in range(n)]
    return FiniteOrtholattice(up, ortho, name or f"2^{num_atoms}")


def product(L: FiniteOrtholattice, M: FiniteOrtholattice,
            name: Optional[str] = None) -> FiniteOrtholattice:
    """Direct product with componentwise order and complement."""
    if L.n * M.n > MAX_ELEMENTS:
        raise SizeCap(f"product would have {L.n * M.n} elements")
    n = L.n * M.n
    up = [0] * n
    ortho = [0] * n
    for x in range(L.n):
        for y in range(M.n):
            i = x * M.n + y
            row = 0
            for x2 in bits(L.up[x]):
                for y2 in bits(M.up[y]):
                    row |= 1 << (x2 * M.n + y2)
            up[i] = row
            ortho[i] = L.ortho[x] * M.n + M.ortho[y]
    return FiniteOrtholattice(up, ortho, name)


def horizontal_sum(summands: Sequence[FiniteOrtholattice],
                   name: Optional[str] = None) -> FiniteOrtholattice:
    """Glue the summands at their bounds; everything else stays incomparable.

    Each summand needs at least 4 elements (a 2-element summand would
    contribute nothing).  For Boolean summands the result is orthomodular
    with the summands as its blocks.
    """
    if not summands:
        raise MalformedInput("horizontal sum of nothing")
    if any(s.n < 4 for s in summands):
        raise MalformedInput("horizontal sum needs summands with at least 4 elements")
    n = sum(s.n - 2 for s in summands) + 2
    if n > MAX_ELEMENTS:
        raise SizeCap(f"horizontal sum would have {n} elements")
    top = n - 1
    offsets = []
    base = 1
    for s in summands:
        offsets.append(base)
        base += s.n - 2

    def glob(s_idx: int, e: int) -> int:
        if e == 0:
            return 0
        if e == summands[s_idx].n - 1:
            return top
        return offsets[s_idx] + e - 1

    up = [0] * n
    ortho = [0] * n
    up[0] = (1 << n) - 1
    up[top] = 1 << top
    ortho[0] = top
    ortho[top] = 0
    for s_idx, s in enumerate(summands):
        for e in range(1, s.n - 1):
            g = glob(s_idx, e)
            row = 1 << top
            for e2 in bits(s.up[e] & ~(1 << (s.n - 1))):
                row |= 1 << glob(s_idx, e2)
            up[g] = row
            ortho[g] = glob(s_idx, s.ortho[e])
    return FiniteOrtholattice(up, ortho, name)


def mo(k: int) -> FiniteOrtholattice:
    """Bounds plus k orthogonal atom pairs (horizontal sum of k diamonds)."""
    if k < 1:
        raise UnknownName("MO index must be at least 1")
    return horizontal_sum([boolean_algebra(2)] * k, name=f"MO{k}")


def benzene() -> FiniteOrtholattice:
    """The 6-element hexagon 0 < x < y < 1, 0 < y' < x' < 1.

    An ortholattice that is not orthomodular; useful as a counterexample
    input only.
    """
    up = [
        0b111111,        # 0
        0b100110,        # x
        0b100100,        # y
        0b111000,        # y'
        0b110000,        # x'
        0b100000,        # 1
    ]
    ortho = [5, 4, 3, 2, 1, 0]
    return FiniteOrtholattice(up, ortho, "benzene")


def example22() -> FiniteOrtholattice:
    """Two 8-element Boolean blocks pasted along a shared atom pair.

    Elements: 0; atoms a,b,c,d,e = 1..5; coatoms a'..e' = 6..10; 1 = 11.
    The blocks are {0,a,a',b,b',c,c',1} and {0,c,c',d,d',e,e',1}.
    """
    n = 12
    pairs = [
        (1, 7), (1, 8),
        (2, 6), (2, 8),
        (3, 6), (3, 7), (3, 9), (3, 10),
        (4, 8), (4, 10),
        (5, 8), (5, 9),
    ]
    up = [0] * n
    up[0] = (1 << n) - 1
    for e in range(1, n - 1):
        up[e] = (1 << e) | (1 << (n - 1))
    up[n - 1] = 1 << (n - 1)
    for a, b in pairs:
        up[a] |= 1 << b
    ortho = [11, 6, 7, 8, 9, 10, 1, 2, 3, 4, 5, 0]
    return FiniteOrtholattice(up, ortho, "example22")


_BOOLEAN_NAME = re.compile(r"b?2\^(\d+)")
_MO_NAME = re.compile(r"mo(\d+)")
_HSUM_NAME = re.compile(r"hsum\((.*)\)")


def catalog(name: str) -> FiniteOrtholattice:
    """Construct a lattice by name.

    Accepted: ``2^n`` or ``B2^n`` (n <= 5), ``MOk`` (k <= 4), ``MO2x2``,
    ``example22``, ``benzene``, and ``hsum(2^a,2^b,...)`` with Boolean
    summands.  Raises UnknownName for anything else and SizeCap when a
    horizontal sum would pass 64 elements.
    """
    key = name.strip().lower().replace(" ", "")
    if key == "example22":
        return example22()
    if key == "benzene":
        return benzene()
    if key == "mo2x2":
        return product(mo(2), boolean_algebra(1), name="MO2x2")
    m = _BOOLEAN_NAME.fullmatch(key)
    if m:
        k = int(m.group(1))
        if not 1 <= k <= 5:
            raise UnknownName(f"Boolean catalog covers 2^1 .. 2^5, not {name!r}")
        return boolean_algebra(k)
    m = _MO_NAME.fullmatch(key)
    if m:
        k = int(m.group(1))
        if not 1 <= k <= 4:
            raise UnknownName(f"MO catalog covers MO1 .. MO4, not {name!r}")
        return mo(k)
    m = _HSUM_NAME.fullmatch(key)
    if m:
        args = [a for a in m.group(1).split(",") if a]
        if not args:
            raise UnknownName("hsum needs at least one summand")
        summands = []
        for a in args:
            bm = _BOOLEAN_NAME.fullmatch(a)
            if not bm or not 1 <= int(bm.group(1)) <= 5:
                raise UnknownName(f"hsum summands must be 2^1 .. 2^5, got {a!r}")
            summands.append(boolean_algebra(int(bm.group(1))))
        label = "hsum(" + ",".join(f"2^{s.n.bit_length() - 1}" for s in summands) + ")"
        return horizontal_sum(summands, name=label)
    raise UnknownName(name)


# -- structural helpers -----------------------------------------------------

def validate(size: int, leq: Iterable[tuple[int, int]], ortho: Sequence[int],
             name: Optional[str] = None) -> FiniteOrtholattice:
    """Validate raw order data given as (lower, upper) pairs.

    The pairs must spell out the full reflexive-transitive relation; nothing
    is closed or repaired here.
    """
    if size < 1:
        raise MalformedInput("size must be positive")
    rows = [0] * size
    for pair in leq:
        try:
            i, j = pair
        except (TypeError, ValueError):
            raise MalformedInput(f"bad relation pair {pair!r}") from None
        if not (0 <= i < size and 0 <= j < size):
            raise MalformedInput(f"pair {pair!r} out of range")
        rows[i] |= 1 << j
    return FiniteOrtholattice(rows, ortho, name)


def relabel(L: FiniteOrtholattice, perm: Sequence[int],
            name: Optional[str] = None) -> FiniteOrtholattice:
    """Copy of L with element i renamed perm[i]; bounds must stay pinned."""
    perm = tuple(perm)
    if sorted(perm) != list(range(L.n)):
        raise MalformedInput("relabeling is not a permutation")
    if perm[0] != 0 or perm[L.n - 1] != L.n - 1:
        raise MalformedInput("relabeling must fix the bounds 0 and n-1")
    up = [0] * L.n
    ortho = [0] * L.n
    for i in range(L.n):
        row = 0
        for j in bits(L.up[i]):
            row |= 1 << perm[j]
        up[perm[i]] = row
        ortho[perm[i]] = perm[L.ortho[i]]
    return FiniteOrtholattice(up, ortho, name)


def sublattice(L: FiniteOrtholattice, members) -> tuple[FiniteOrtholattice, tuple[int, ...]]:
    """Standalone copy of a closed subalgebra.

    Returns (lattice, backmap) where backmap[local] is the element of L the
    local index came from.  Local indices keep the ambient ascending order,
    so 0 and the local top stay pinned.
    """
    mask = members.members if isinstance(members, SubalgebraSet) else members
    if L.closure_mask(mask) != mask:
        raise MalformedInput("element set is not a closed subalgebra")
    backmap = tuple(bits(mask))
    local = {g: i for i, g in enumerate(backmap)}
    k = len(backmap)
    up = [0] * k
    ortho = [0] * k
    for i, g in enumerate(backmap):
        row = 0
        for h in bits(L.up[g] & mask):
            row |= 1 << local[h]
        up[i] = row
        ortho[i] = local[L.ortho[g]]
    return FiniteOrtholattice(up, ortho), backmap

"""Enumeration of subalgebra families and the order theory they live in.

Sub(L) is the family of all subalgebras of a finite ortholattice, BSub(L)
the family of Boolean ones, both ordered by inclusion.  Enumeration is
breadth-first closure extension from {0,1}; posets come out with nodes
sorted ascending by bit-set value so identical inputs give identical
output, byte for byte.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .errors import (
    ExplosionCap,
    MalformedInput,
    NoLeastElement,
    NotAnIso,
    NotAPartialOrder,
    Unsupported,
)
from .lattice_core import FiniteOrtholattice, SubalgebraSet, bits

DEFAULT_NODE_CAP = 100000
NODE_CAP_ENV = "OMLKIT_NODE_CAP"
POSET_ISO_CAP = 5000

SUB = "sub"
BSUB = "bsub"


class AbstractPoset:
    """A bare finite partial order on 0..size-1, rows as bit sets."""

    def __init__(self, up: Sequence[int]):
        up = tuple(up)
        n = len(up)
        universe = (1 << n) - 1
        for i, row in enumerate(up):
            if row & ~universe:
                raise MalformedInput(f"row {i} mentions nodes outside 0..{n - 1}")
            if not row >> i & 1:
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
        self.size = n
        self.up = up
        self.down = tuple(down)

    @classmethod
    def from_pairs(cls, size: int, pairs) -> "AbstractPoset":
        """Build from an explicit full relation given as (lower, upper) pairs."""
        if size < 1:
            raise MalformedInput("poset needs at least one node")
        rows = [0] * size
        seen = set()
        for p in pairs:
            try:
                i, j = p
            except (TypeError, ValueError):
                raise MalformedInput(f"bad relation pair {p!r}") from None
            if not (0 <= i < size and 0 <= j < size):
                raise MalformedInput(f"pair {p!r} out of range")
            if (i, j) in seen:
                raise MalformedInput(f"duplicate pair {p!r}")
            seen.add((i, j))
            rows[i] |= 1 << j
        return cls(rows)

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in bits(self.up[i])]

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<{type(self).__name__} on {self.size} nodes>"

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    @cached_property
    def cover_up(self) -> tuple[int, ...]:
        out = []
        for x in range(self.size):
            cov = 0
            for y in bits(self.up[x] & ~(1 << x)):
                if self.up[x] & self.down[y] == (1 << x) | (1 << y):
                    cov |= 1 << y
            out.append(cov)
        return tuple(out)

    @cached_property
    def cover_down(self) -> tuple[int, ...]:
        out = [0] * self.size
        for x in range(self.size):
            for y in bits(self.cover_up[x]):
                out[y] |= 1 << x
        return tuple(out)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Longest chain length ending at each node (0 for minimal nodes)."""
        h = [0] * self.size
        for x in sorted(range(self.size), key=lambda v: self.down[v].bit_count()):
            h[x] = 1 + max((h[y] for y in bits(self.cover_down[x])), default=-1)
        return tuple(h)

    def bottom(self) -> Optional[int]:
        universe = (1 << self.size) - 1
        for x in range(self.size):
            if self.up[x] == universe:
                return x
        return None

    def top(self) -> Optional[int]:
        universe = (1 << self.size) - 1
        for x in range(self.size):
            if self.down[x] == universe:
                return x
        return None

    def atoms(self) -> tuple[int, ...]:
        b = self.bottom()
        if b is None:
            raise NoLeastElement("poset has no least element")
        return tuple(bits(self.cover_up[b]))

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.size) if self.up[x] == 1 << x)

    def covers(self, x: int) -> tuple[int, ...]:
        return tuple(bits(self.cover_up[x]))

    def join(self, x: int, y: int) -> Optional[int]:
        common = self.up[x] & self.up[y]
        for z in bits(common):
            if self.up[z] == common:
                return z
        return None

    def meet(self, x: int, y: int) -> Optional[int]:
        common = self.down[x] & self.down[y]
        for z in bits(common):
            if self.down[z] == common:
                return z
        return None

    def height(self, x: int) -> int:
        """One less than the size of a maximal chain from the bottom to x."""
        if self.bottom() is None:
            raise NoLeastElement("height needs a least element")
        return self.heights[x]

    def interval_below(self, x: int) -> tuple["AbstractPoset", tuple[int, ...]]:
        """The induced order on {y : y <= x}, relabeled to 0..k-1.

        Returns (poset, support) where support[i] is the original node of
        relabeled node i.
        """
        support = tuple(bits(self.down[x]))
        local = {g: i for i, g in enumerate(support)}
        rows = []
        for g in support:
            row = 0
            for h in bits(self.up[g] & self.down[x]):
                row |= 1 << local[h]
            rows.append(row)
        return AbstractPoset(rows), support

    def dual(self) -> "AbstractPoset":
        return AbstractPoset(self.down)

    def relabel(self, perm: Sequence[int]) -> "AbstractPoset":
        perm = tuple(perm)
        if sorted(perm) != list(range(self.size)):
            raise MalformedInput("relabeling is not a permutation")
        rows = [0] * self.size
        for i in range(self.size):
            row = 0
            for j in bits(self.up[i]):
                row |= 1 << perm[j]
            rows[perm[i]] = row
        return AbstractPoset(rows)

    def as_abstract(self) -> "AbstractPoset":
        """A plain copy with any subalgebra decoration dropped."""
        return AbstractPoset(self.up)


class SubalgebraPoset(AbstractPoset):
    """Inclusion order on an enumerated family of subalgebras of one lattice."""

    def __init__(self, up, owner: FiniteOrtholattice,
                 nodes: Sequence[SubalgebraSet], flavor: str):
        super().__init__(up)
        self.owner = owner
        self.nodes = tuple(nodes)
        self.flavor = flavor
        self._index = {s.members: i for i, s in enumerate(self.nodes)}
        assert self.nodes[0].members == 1 | 1 << (owner.n - 1)

    def node_index(self, members) -> int:
        mask = members.members if isinstance(members, SubalgebraSet) else members
        try:
            return self._index[mask]
        except KeyError:
            raise MalformedInput("element set is not a node of this poset") from None

    def labels(self) -> list[tuple[int, ...]]:
        return [s.elements for s in self.nodes]


def _node_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get(NODE_CAP_ENV)
    if raw is None:
        return DEFAULT_NODE_CAP
    try:
        return int(raw)
    except ValueError:
        raise MalformedInput(f"{NODE_CAP_ENV} must be an integer, got {raw!r}") from None


def enumerate_subalgebras(L: FiniteOrtholattice, boolean_only: bool = False,
                          cap: Optional[int] = None,
                          threads: Optional[int] = None) -> SubalgebraPoset:
    """Enumerate Sub(L) (or BSub(L) with ``boolean_only``) as a poset.

    Frontier extension: each known subalgebra is extended by one new element
    and closed; the visited set is keyed by bit-set value.  This reaches
    every (Boolean) subalgebra because any target is approachable through a
    chain of one-element extensions inside itself.  ``cap`` bounds the node
    count (default 100000, or the OMLKIT_NODE_CAP environment variable);
    going past it raises ExplosionCap.
    """
    cap = _node_cap(cap)
    bottom = L.closure_mask(0)
    seen = {bottom}
    if boolean_only and not L.is_boolean(bottom):
        raise MalformedInput("the least subalgebra is not Boolean")
    frontier = [bottom]
    pool = ThreadPoolExecutor(max_workers=threads) if threads and threads > 1 else None
    try:
        while frontier:
            tasks = [s | 1 << e
                     for s in frontier
                     for e in range(L.n) if not s >> e & 1]
            closed = pool.map(L.closure_mask, tasks) if pool \
                else map(L.closure_mask, tasks)
            frontier = []
            for t in closed:
                if t in seen:
                    continue
                if boolean_only and not L.is_boolean(t):
                    continue
                seen.add(t)
                frontier.append(t)
                if len(seen) > cap:
                    raise ExplosionCap(f"more than {cap} subalgebras; raise the cap")
    finally:
        if pool:
            pool.shutdown()
    masks = sorted(seen)
    rows = [0] * len(masks)
    for i, mi in enumerate(masks):
        row = 0
        for j, mj in enumerate(masks):
            if not mi & ~mj:
                row |= 1 << j
        rows[i] = row
    nodes = [SubalgebraSet(L, m) for m in masks]
    return SubalgebraPoset(rows, L, nodes, BSUB if boolean_only else SUB)


def sub(L: FiniteOrtholattice, **kw) -> SubalgebraPoset:
    """All subalgebras of L, ordered by inclusion."""
    return enumerate_subalgebras(L, boolean_only=False, **kw)


def bsub(L: FiniteOrtholattice, **kw) -> SubalgebraPoset:
    """All Boolean subalgebras of L, ordered by inclusion."""
    return enumerate_subalgebras(L, boolean_only=True, **kw)


# -- poset isomorphism -------------------------------------------------------

def check_order_iso(mapping, source: AbstractPoset, target: AbstractPoset) -> tuple[int, ...]:
    """Validate a node map as an order isomorphism; raises NotAnIso.

    Returns the map as a tuple.  Order preservation is checked in both
    directions since callers hand in arbitrary data.
    """
    mapping = tuple(mapping)
    if len(mapping) != source.size or sorted(mapping) != list(range(target.size)):
        raise NotAnIso("node map is not a bijection between the posets")
    for i in range(source.size):
        for j in bits(source.up[i]):
            if not target.up[mapping[i]] >> mapping[j] & 1:
                raise NotAnIso(f"node map does not preserve node order at {i} <= {j}")
    inv = [0] * target.size
    for i, v in enumerate(mapping):
        inv[v] = i
    for i in range(target.size):
        for j in bits(target.up[i]):
            if not source.up[inv[i]] >> inv[j] & 1:
                raise NotAnIso("node map does not reflect node order")
    return mapping


def _poset_signatures(P: AbstractPoset) -> list[tuple]:
    return [(
        P.down[x].bit_count(), P.up[x].bit_count(),
        P.heights[x],
        P.cover_up[x].bit_count(), P.cover_down[x].bit_count(),
    ) for x in range(P.size)]


def poset_isomorphisms(P: AbstractPoset, Q: AbstractPoset) -> Iterator[tuple[int, ...]]:
    """All order isomorphisms P -> Q as node maps, canonically ordered.

    Backtracking pruned by (cone sizes, height, cover degrees) signatures.
    Limited to posets of at most 5000 nodes; beyond that raises Unsupported.
    """
    if max(P.size, Q.size) > POSET_ISO_CAP:
        raise Unsupported(f"poset isomorphism search capped at {POSET_ISO_CAP} nodes")
    n = P.size
    if n != Q.size:
        return
    sig_p = _poset_signatures(P)
    sig_q = _poset_signatures(Q)
    if sorted(sig_p) != sorted(sig_q):
        return
    candidates = [[y for y in range(n) if sig_q[y] == sig_p[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
    mapping = [-1] * n
    used = [False] * n

    def search(pos: int):
        if pos == n:
            yield tuple(mapping)
            return
        x = order[pos]
        for y in candidates[x]:
            if used[y]:
                continue
            ok = True
            for c in range(n):
                d = mapping[c]
                if d < 0:
                    continue
                if bool(P.up[x] >> c & 1) != bool(Q.up[y] >> d & 1) or \
                   bool(P.up[c] >> x & 1) != bool(Q.up[d] >> y & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used[y] = True
            yield from search(pos + 1)
            mapping[x] = -1
            used[y] = False

    yield from search(0)


def poset_isomorphic(P: AbstractPoset, Q: AbstractPoset) -> Optional[tuple[int, ...]]:
    """A witness node bijection preserving order both ways, or None."""
    return next(poset_isomorphisms(P, Q), None)


def poset_automorphisms(P: AbstractPoset) -> list[tuple[int, ...]]:
    return list(poset_isomorphisms(P, P))

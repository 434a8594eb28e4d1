"""Rebuilding an orthomodular lattice from its Boolean-subalgebra poset.

The input is a bare poset promised to be (isomorphic to) the inclusion
order on the Boolean subalgebras of some finite orthomodular lattice.  The
atoms of the poset that correspond to atom pairs of the lattice are
recognized by a pure order condition, an orthogonality frame is built on
them, and the lattice comes back as the family of orthoclosed subsets of
that frame.  The promise itself is not checked; a failed output validation
raises MalformedInput instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import FrameCap, MalformedInput, NoLeastElement
from .lattice_core import FiniteOrtholattice, ORTHOMODULAR, bits
from .subalgebra_posets import AbstractPoset

FRAME_CAP = 20


@dataclass(frozen=True)
class OrthoFrame:
    """A point set with a symmetric irreflexive orthogonality relation.

    ``perp[i]`` is the bit set of points orthogonal to point i; ``labels``
    records where each point came from (handy when the frame is derived
    from poset atoms).
    """

    size: int
    perp: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.perp) != self.size or len(self.labels) != self.size:
            raise MalformedInput("frame rows and labels must match the point count")
        universe = (1 << self.size) - 1
        for i, row in enumerate(self.perp):
            if row & ~universe:
                raise MalformedInput("perp row mentions unknown points")
            if row >> i & 1:
                raise MalformedInput(f"point {i} is orthogonal to itself")
        for i in range(self.size):
            for j in bits(self.perp[i]):
                if not self.perp[j] >> i & 1:
                    raise MalformedInput("orthogonality is not symmetric")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in bits(self.perp[i]) if i < j]


def classify_atoms(P: AbstractPoset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the poset atoms into the frame-relevant families (U, V).

    An atom x qualifies when for every atom y, the join x v y either fails
    to exist or has height at most 2.  Qualifying atoms that are maximal go
    to V (they stand for blocks with a single atom pair and get doubled),
    the rest go to U.
    """
    if P.bottom() is None:
        raise NoLeastElement("classification needs a least element")
    atoms = P.atoms()
    maximal = set(P.maximal_elements())
    u, v = [], []
    for x in atoms:
        ok = True
        for y in atoms:
            j = P.join(x, y)
            if j is not None and P.height(j) > 2:
                ok = False
                break
        if not ok:
            continue
        (v if x in maximal else u).append(x)
    return tuple(u), tuple(v)


def build_frame(P: AbstractPoset, u: tuple[int, ...], v: tuple[int, ...]) -> OrthoFrame:
    """Points: one per U-atom, two per V-atom.

    Two U-points are orthogonal when their atoms have a join in P; the two
    points of a V-atom are orthogonal to each other and nothing else.
    """
    labels = [f"u{x}" for x in u]
    for x in v:
        labels.extend((f"v{x}.1", f"v{x}.2"))
    size = len(labels)
    perp = [0] * size
    for i, x in enumerate(u):
        for k in range(i + 1, len(u)):
            if P.join(x, u[k]) is not None:
                perp[i] |= 1 << k
                perp[k] |= 1 << i
    for k in range(len(v)):
        i = len(u) + 2 * k
        perp[i] |= 1 << (i + 1)
        perp[i + 1] |= 1 << i
    return OrthoFrame(size, tuple(perp), tuple(labels))


def orthoclosed_lattice(frame: OrthoFrame, name: Optional[str] = None) -> FiniteOrtholattice:
    """The ortholattice of subsets S with S = S-perp-perp, ordered by inclusion.

    Subsets are enumerated exhaustively, so the frame is capped at 20
    points.  The orthocomplement of a closed set is its perp; the result is
    validated from scratch, which also determines its flavor.
    """
    if frame.size > FRAME_CAP:
        raise FrameCap(f"frame has {frame.size} points; cap is {FRAME_CAP}")
    universe = (1 << frame.size) - 1

    def perp_of(s: int) -> int:
        out = universe
        for p in bits(s):
            out &= frame.perp[p]
        return out

    closed = [s for s in range(universe + 1) if perp_of(perp_of(s)) == s]
    closed.sort()
    if len(closed) < 2:
        raise MalformedInput("orthoclosed family is trivial; not a lattice")
    index = {s: i for i, s in enumerate(closed)}
    up = [0] * len(closed)
    for i, s in enumerate(closed):
        row = 0
        for j, t in enumerate(closed):
            if not s & ~t:
                row |= 1 << j
        up[i] = row
    ortho = [index[perp_of(s)] for s in closed]
    return FiniteOrtholattice(up, ortho, name)


def reconstruct(P: AbstractPoset, name: Optional[str] = None) -> FiniteOrtholattice:
    """Rebuild the orthomodular lattice whose Boolean-subalgebra poset is P.

    One-point posets return the 2-element lattice directly (a single node
    forces the trivial algebra).  Otherwise classify the atoms, build the
    frame, take the orthoclosed sets, and insist the result is orthomodular;
    anything else means P was not a genuine input and raises MalformedInput.
    """
    if P.bottom() is None:
        raise NoLeastElement("reconstruction needs a least element")
    if P.size == 1:
        return FiniteOrtholattice((0b11, 0b10), (1, 0), name)
    u, v = classify_atoms(P)
    frame = build_frame(P, u, v)
    out = orthoclosed_lattice(frame, name)
    if out.flavor != ORTHOMODULAR:
        raise MalformedInput("orthoclosed family is not orthomodular; "
                             "input poset is not a Boolean-subalgebra poset")
    return out

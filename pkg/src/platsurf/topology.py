"""Strand segments, link components, and sphere/link intersections.

The diagram's strands are cut at every row into *segments*: segment
(g, x) is the piece of strand x in gap g, where gap 0 lies above row 1,
gap i between rows i and i+1, and gap m below row m.  Two ends of
segments are joined when a cap arc, a box, or a straight stretch of
strand connects them:

* top caps join (0, 2j-1) to (0, 2j), bottom caps likewise at gap m;
* a box at row i over strands (s, s+1) joins its four incident segment
  ends according to its boundary pairing: straight through, crosswise,
  or capped off inside the box (the caps pairing joins the two upper
  ends to each other and the two lower ends to each other);
* strand positions not covered by a box pass straight through the row.

Union-find over segments yields the link components.  Component ids are
canonical: components sorted by their smallest segment in (gap, strand)
lexicographic order, numbered from 0.

``braid_permutation`` gives an independent route to the same count: the
permutation that the rows induce on strand positions, read top to
bottom.  The plat closure identifies positions pairwise at top and
bottom; the cycle count of that identification composed with the
permutation must match the union-find answer, and the test suite checks
it does.

A separating sphere along an allowable path meets the link in m + 1
pieces: the top cap at pair (pos(1), pos(1)+1), one strand segment per
interior gap, and the bottom cap at (pos(m), pos(m)+1).  In gap i the
crossed segment sits at strand max(pos(i), pos(i+1)), which the
``crossing_pieces`` formula writes as (pos(i) + pos(i+1) + 1) / 2; the
geometric simulation in the tests backs this up.  Everything else in
gap i is strictly left (x below the crossed strand) or strictly right
(above it); at gaps 0 and m the corridor descends at pos +- 1/2, so the
threshold is pos itself.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterator, Literal, Sequence

from .diagram import PlatDiagram, box_fraction, box_strands
from .errors import PathError, UnsupportedBoxError
from .paths import AllowablePath, check_allowable, corridor_positions
from .tangles import Pairing, pairing

Segment = tuple[int, int]  # (gap, strand)
_TOP = 0
_BOT = 1
End = tuple[int, int, int]  # (gap, strand, _TOP | _BOT)


class UnionFind:
    """Disjoint sets over hashable items, with path compression."""

    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self) -> list[set]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return list(out.values())


Connector = tuple  # ("top_cap", j) | ("bottom_cap", j) | ("box", i, j) | ("straight", i, x)


def _end_links(d: PlatDiagram) -> dict[End, tuple[End, Connector]]:
    """The perfect matching on segment ends induced by caps, boxes, rows."""
    links: dict[End, tuple[End, Connector]] = {}

    def join(e1: End, e2: End, conn: Connector) -> None:
        links[e1] = (e2, conn)
        links[e2] = (e1, conn)

    for j in range(1, d.n + 1):
        join((0, 2 * j - 1, _TOP), (0, 2 * j, _TOP), ("top_cap", j))
        join((d.m, 2 * j - 1, _BOT), (d.m, 2 * j, _BOT), ("bottom_cap", j))

    for i in range(1, d.m + 1):
        covered: set[int] = set()
        for j in range(1, d.row_length(i) + 1):
            s, t = box_strands(i, j)
            covered.update((s, t))
            kind = pairing(box_fraction(d.box(i, j)))
            if kind is Pairing.THROUGH_IDENTITY:
                join((i - 1, s, _BOT), (i, s, _TOP), ("box", i, j))
                join((i - 1, t, _BOT), (i, t, _TOP), ("box", i, j))
            elif kind is Pairing.THROUGH_SWAP:
                join((i - 1, s, _BOT), (i, t, _TOP), ("box", i, j))
                join((i - 1, t, _BOT), (i, s, _TOP), ("box", i, j))
            else:  # caps: both upper ends meet, both lower ends meet
                join((i - 1, s, _BOT), (i - 1, t, _BOT), ("box", i, j))
                join((i, s, _TOP), (i, t, _TOP), ("box", i, j))
        for x in range(1, 2 * d.n + 1):
            if x not in covered:
                join((i - 1, x, _BOT), (i, x, _TOP), ("straight", i, x))

    return links


@dataclasses.dataclass(eq=False)
class LinkTopology:
    """Link components of a diagram, with canonical integer ids."""

    diagram: PlatDiagram
    components: tuple[frozenset[Segment], ...]
    _label: dict[Segment, int] = dataclasses.field(repr=False)

    @property
    def n(self) -> int:
        return self.diagram.n

    @property
    def m(self) -> int:
        return self.diagram.m

    @property
    def component_count(self) -> int:
        return len(self.components)

    def component_of(self, gap: int, strand: int) -> int:
        try:
            return self._label[(gap, strand)]
        except KeyError:
            raise PathError(f"no segment (gap {gap}, strand {strand})") from None

    def top_cap_component(self, j: int) -> int:
        return self.component_of(0, 2 * j - 1)

    def bottom_cap_component(self, j: int) -> int:
        return self.component_of(self.m, 2 * j - 1)


@functools.lru_cache(maxsize=256)
def build_topology(d: PlatDiagram) -> LinkTopology:
    """Union segments across all caps, boxes, and straights of d."""
    uf = UnionFind()
    for g in range(d.m + 1):
        for x in range(1, 2 * d.n + 1):
            uf.find((g, x))
    for e1, (e2, _) in _end_links(d).items():
        uf.union(e1[:2], e2[:2])
    comps = sorted((sorted(g) for g in uf.groups()), key=lambda g: g[0])
    label = {seg: idx for idx, group in enumerate(comps) for seg in group}
    return LinkTopology(d, tuple(frozenset(g) for g in comps), label)


def component_cycles(d: PlatDiagram) -> tuple[tuple, ...]:
    """Each component as its ordered cycle of segments and connectors.

    A cycle alternates ("segment", g, x) elements with the connector
    crossed between consecutive segments, starting at the component's
    canonical segment headed downward.  Caps-paired boxes reverse the
    vertical direction; the traversal follows them.
    """
    links = _end_links(d)
    topo = build_topology(d)
    cycles = []
    for comp in topo.components:
        start = min(comp)
        cycle: list[tuple] = []
        seg, exit_side = start, _BOT
        while True:
            cycle.append(("segment",) + seg)
            nxt, conn = links[(seg[0], seg[1], exit_side)]
            cycle.append(conn)
            seg = nxt[:2]
            exit_side = _TOP if nxt[2] == _BOT else _BOT
            if seg == start and exit_side == _BOT:
                break
        cycles.append(tuple(cycle))
    return tuple(cycles)


def braid_permutation(d: PlatDiagram) -> tuple[int, ...]:
    """Position permutation induced by the rows, top to bottom.

    Returns sigma as a tuple with sigma[x-1] the bottom position of the
    strand entering at top position x.  Only through-type boxes are
    meaningful here; a caps-paired rational box has no braid reading and
    raises UnsupportedBoxError.
    """
    perm = list(range(1, 2 * d.n + 1))
    for i, j, box in d.boxes():
        kind = pairing(box_fraction(box))
        if kind is Pairing.CAPS:
            raise UnsupportedBoxError(
                f"box ({i}, {j}) has a caps pairing and no braid form"
            )
        if kind is Pairing.THROUGH_SWAP:
            s, t = box_strands(i, j)
            for x in range(len(perm)):
                if perm[x] == s:
                    perm[x] = t
                elif perm[x] == t:
                    perm[x] = s
    return tuple(perm)


# ---------------------------------------------------------------------------
# sphere / link intersections


def _validated(t: LinkTopology, path: AllowablePath | Sequence[int]) -> tuple[int, ...]:
    check = check_allowable(t.diagram, path)
    if not check:
        raise PathError(check.reason or "path is not allowable")
    return tuple(path)


def crossing_pieces(
    t: LinkTopology, path: AllowablePath | Sequence[int]
) -> tuple[Connector, ...]:
    """The m + 1 pieces of the link crossed by the path's sphere, in order."""
    entries = _validated(t, path)
    ps = corridor_positions(entries)
    pieces: list[Connector] = [("top_cap", (ps[0] + 1) // 2)]
    for g in range(1, t.m):
        pieces.append(("segment", g, (ps[g - 1] + ps[g] + 1) // 2))
    pieces.append(("bottom_cap", (ps[-1] + 1) // 2))
    return tuple(pieces)


def crossing_components(
    t: LinkTopology, path: AllowablePath | Sequence[int]
) -> tuple[int, ...]:
    """Component id of each crossed piece, top to bottom (with repeats)."""
    out = []
    for piece in crossing_pieces(t, path):
        if piece[0] == "top_cap":
            out.append(t.top_cap_component(piece[1]))
        elif piece[0] == "bottom_cap":
            out.append(t.bottom_cap_component(piece[1]))
        else:
            out.append(t.component_of(piece[1], piece[2]))
    return tuple(out)


def components_meeting_sphere(
    t: LinkTopology, path: AllowablePath | Sequence[int]
) -> frozenset[int]:
    """Ids of the components the path's sphere intersects."""
    return frozenset(crossing_components(t, path))


def _side_thresholds(m: int, positions: tuple[int, ...]) -> list[int]:
    # strand x in gap g is left of the corridor iff x < thr[g], right iff >
    thr = [positions[0]]
    for g in range(1, m):
        thr.append((positions[g - 1] + positions[g] + 1) // 2)
    thr.append(positions[-1])
    return thr


def components_strictly_beside(
    t: LinkTopology,
    path: AllowablePath | Sequence[int],
    side: Literal["left", "right"],
) -> frozenset[int]:
    """Components lying entirely on one side of the path's sphere.

    A component qualifies when the sphere misses it and every one of its
    segments sits on the given side of the corridor in its gap.  The
    crossed components, the left set, and the right set partition all
    component ids; the test suite checks the partition on random
    diagrams.
    """
    if side not in ("left", "right"):
        raise PathError(f"side must be 'left' or 'right', got {side!r}")
    entries = _validated(t, path)
    thr = _side_thresholds(t.m, corridor_positions(entries))
    crossed = components_meeting_sphere(t, entries)
    keep = []
    for cid, comp in enumerate(t.components):
        if cid in crossed:
            continue
        if side == "left":
            ok = all(x < thr[g] for g, x in comp)
        else:
            ok = all(x > thr[g] for g, x in comp)
        if ok:
            keep.append(cid)
    return frozenset(keep)

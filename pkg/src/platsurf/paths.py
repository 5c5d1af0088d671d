"""Allowable paths: the corridors that carry separating spheres.

A candidate path assigns to each row i an entry a_i, meaning the path
descends through the gap just right of box a_i of that row, at strand
position pos(i) + 1/2 where

    pos(i) = 2*a_i + 1   (odd rows)
    pos(i) = 2*a_i       (even rows).

The path starts above the top caps, ends below the bottom caps, and
moves monotonically downward.  It is *allowable* when it meets the link
in the minimum possible m+1 points.  Two equivalent characterizations
are implemented:

* the step rule: 1 <= a_i <= row_length(i) - 1, and consecutive entries
  satisfy a_(i+1) in {a_i, a_i + 1} going odd row to even and
  a_(i+1) in {a_i - 1, a_i} going even to odd;

* the geometric count: ``crossing_count`` returns the number of times
  the corridor polyline crosses the link, namely one top cap, one
  bottom cap, and |pos(i+1) - pos(i)| strand segments in each interior
  gap.  The path is allowable exactly when the count is m + 1 (with the
  bounds holding), because pos alternates parity between rows so every
  gap is crossed at least once, and the step rule is precisely the
  condition |pos(i+1) - pos(i)| = 1 for all i.

The step rule is the primary check; the count is kept as an independent
oracle and the equivalence is exercised exhaustively in the test suite.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .diagram import PlatDiagram, row_length
from .errors import ParameterError, PathError, TwoBridgeError


def position(i: int, a: int) -> int:
    """Strand position pos(i) of entry a in row i."""
    return 2 * a + 1 if i % 2 == 1 else 2 * a


def corridor_positions(entries: Sequence[int]) -> tuple[int, ...]:
    return tuple(position(i, a) for i, a in enumerate(entries, 1))


@dataclasses.dataclass(frozen=True)
class AllowablePath:
    """Entry vector (a_1, ..., a_m) of an allowable path."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))

    @classmethod
    def for_diagram(cls, d: PlatDiagram, entries: Sequence[int]) -> "AllowablePath":
        """Validate against d's shape; raises PathError when not allowable."""
        check = check_allowable(d, entries)
        if not check:
            raise PathError(check.reason or "path is not allowable")
        return cls(tuple(entries))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def positions(self) -> tuple[int, ...]:
        return corridor_positions(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclasses.dataclass(frozen=True)
class PathCheck:
    """Allowability verdict with the first violation spelled out."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _entries(path: AllowablePath | Sequence[int]) -> tuple[int, ...]:
    if isinstance(path, AllowablePath):
        return path.entries
    return tuple(path)


def check_allowable(d: PlatDiagram, path: AllowablePath | Sequence[int]) -> PathCheck:
    """Step-rule check of a candidate entry vector against d's shape."""
    entries = _entries(path)
    if len(entries) != d.m:
        return PathCheck(False, f"expected {d.m} entries, got {len(entries)}")
    for i, a in enumerate(entries, 1):
        if isinstance(a, bool) or not isinstance(a, int):
            return PathCheck(False, f"row {i}: entry {a!r} is not an int")
        hi = row_length(d.n, i) - 1
        if not 1 <= a <= hi:
            return PathCheck(
                False, f"row {i}: entry {a} outside allowable range 1..{hi}"
            )
    for i in range(1, len(entries)):
        prev, cur = entries[i - 1], entries[i]
        if i % 2 == 1:  # odd row to even row below it
            allowed = (prev, prev + 1)
        else:
            allowed = (prev - 1, prev)
        if cur not in allowed:
            return PathCheck(
                False,
                f"rows {i}->{i + 1}: step {prev}->{cur} not in {allowed}",
            )
    return PathCheck(True)


def crossing_count(d: PlatDiagram, path: AllowablePath | Sequence[int]) -> int:
    """Number of intersections of the corridor with the link.

    Accepts any entry vector with 0 <= a_i <= row_length(i), allowable
    or not; the count equals m + 1 exactly on step-rule paths.  The two
    endpoints of the corridor each cross one cap arc; interior gap i is
    crossed |pos(i+1) - pos(i)| times, once per strand position passed.
    """
    entries = _entries(path)
    if len(entries) != d.m:
        raise PathError(f"expected {d.m} entries, got {len(entries)}")
    for i, a in enumerate(entries, 1):
        if not 0 <= a <= row_length(d.n, i):
            raise PathError(f"row {i}: entry {a} outside 0..{row_length(d.n, i)}")
    ps = corridor_positions(entries)
    return 1 + sum(abs(ps[i + 1] - ps[i]) for i in range(len(ps) - 1)) + 1


def enumerate_allowable(d: PlatDiagram) -> tuple[AllowablePath, ...]:
    """All allowable paths in lexicographic order of their entry vectors.

    Empty for n <= 2: a 2-bridge plat has no room for a separating
    corridor (every odd row is a single span of width zero).
    """
    if d.n <= 2:
        return ()
    out: list[AllowablePath] = []
    entries = [0] * d.m

    def extend(i: int) -> None:
        if i > d.m:
            out.append(AllowablePath(tuple(entries)))
            return
        hi = row_length(d.n, i) - 1
        if i == 1:
            candidates = range(1, hi + 1)
        elif i % 2 == 0:  # descending from an odd row
            candidates = (entries[i - 2], entries[i - 2] + 1)
        else:
            candidates = (entries[i - 2] - 1, entries[i - 2])
        for a in candidates:
            if 1 <= a <= hi:
                entries[i - 1] = a
                extend(i + 1)

    extend(1)
    return tuple(out)


def count_allowable(n: int, m: int) -> int:
    """Exact number of allowable paths on the (n, m) shape.

    Row-by-row transfer: carry the count of paths ending at each entry
    value, push each through the two legal steps.  Runs in O(m * n) big
    integer additions; 0 when n <= 2.
    """
    if m < 1 or m % 2 == 0:
        raise ParameterError("m must be odd and positive")
    if n <= 2:
        return 0
    cur = {a: 1 for a in range(1, row_length(n, 1))}
    for i in range(2, m + 1):
        hi = row_length(n, i) - 1
        nxt: dict[int, int] = {}
        for a, c in cur.items():
            steps = (a, a + 1) if i % 2 == 0 else (a - 1, a)
            for b in steps:
                if 1 <= b <= hi:
                    nxt[b] = nxt.get(b, 0) + c
        cur = nxt
    return sum(cur.values())


def extremal_paths(d: PlatDiagram) -> tuple[AllowablePath, AllowablePath]:
    """The leftmost and rightmost allowable paths.

    Leftmost is (1, 1, ..., 1); rightmost takes n-2 in odd rows and
    n-1 in even rows.  These are the lexicographic extremes of
    ``enumerate_allowable`` (checked in the tests) and the two spheres
    whose far sides must be empty for slope coverage.
    """
    if d.n <= 2:
        raise TwoBridgeError(
            "a 2-bridge plat (n <= 2) admits no allowable paths"
        )
    low = AllowablePath(tuple(1 for _ in range(d.m)))
    high = AllowablePath(
        tuple(d.n - 2 if i % 2 == 1 else d.n - 1 for i in range(1, d.m + 1))
    )
    return low, high

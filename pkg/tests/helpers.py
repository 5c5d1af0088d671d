"""Shared test oracles, deliberately independent of the library internals.

Each function here recomputes something the library also computes, by a
different route: brute-force enumeration instead of recursive descent,
generic segment intersection instead of the closed-form crossing count,
a permutation pairing graph instead of union-find on segments, and a
run-counting walk along each component instead of side thresholds.
"""

from __future__ import annotations

import itertools
import random

from platsurf import PlatDiagram, make_diagram
from platsurf.topology import component_cycles


def row_len(n: int, i: int) -> int:
    return n - 1 if i % 2 == 1 else n


def pos_of(i: int, a: int) -> int:
    return 2 * a + 1 if i % 2 == 1 else 2 * a


def step_rule_ok(n: int, entries: tuple[int, ...]) -> bool:
    m = len(entries)
    for i, a in enumerate(entries, 1):
        if not 1 <= a <= row_len(n, i) - 1:
            return False
    for i in range(1, m):
        prev, cur = entries[i - 1], entries[i]
        want = (prev, prev + 1) if i % 2 == 1 else (prev - 1, prev)
        if cur not in want:
            return False
    return True


def brute_force_paths(n: int, m: int) -> list[tuple[int, ...]]:
    """Filter the full product space by the step rule."""
    ranges = [range(1, row_len(n, i)) for i in range(1, m + 1)]
    return [e for e in itertools.product(*ranges) if step_rule_ok(n, e)]


# ---------------------------------------------------------------------------
# geometric crossing oracle: corridor polyline vs drawn link segments


def _cross(p1, p2, p3, p4) -> bool:
    """Proper intersection of segments p1p2 and p3p4 (generic position)."""

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 0) - (v < 0)

    return (
        orient(p1, p2, p3) * orient(p1, p2, p4) < 0
        and orient(p3, p4, p1) * orient(p3, p4, p2) < 0
    )


def polyline_crossing_count(n: int, m: int, entries: tuple[int, ...]) -> int:
    """Count intersections of the drawn corridor with the drawn link.

    Rows sit at integer heights y = 1..m; gap g is the band (g, g+1).
    Strand x is drawn as one vertical segment per gap; the cap arcs are
    horizontal bars at y = 0.25 and y = m + 0.75.  The corridor is the
    polyline through (pos(i) + 1/2, i) extended straight up and down.
    """
    ps = [pos_of(i, a) for i, a in enumerate(entries, 1)]
    corridor = [(ps[0] + 0.5, 0.0)]
    corridor += [(p + 0.5, float(i)) for i, p in enumerate(ps, 1)]
    corridor.append((ps[-1] + 0.5, float(m + 1)))

    link = []
    for g in range(m + 1):
        lo = 0.25 if g == 0 else float(g)
        hi = m + 0.75 if g == m else float(g + 1)
        for x in range(1, 2 * n + 1):
            link.append(((float(x), lo), (float(x), hi)))
    for j in range(1, n + 1):
        link.append(((2 * j - 1.0, 0.25), (2.0 * j, 0.25)))
        link.append(((2 * j - 1.0, m + 0.75), (2.0 * j, m + 0.75)))

    total = 0
    for c1, c2 in zip(corridor, corridor[1:]):
        for s1, s2 in link:
            if _cross(c1, c2, s1, s2):
                total += 1
    return total


# ---------------------------------------------------------------------------
# component count via the permutation pairing graph


def plat_cycle_count(perm: tuple[int, ...]) -> int:
    """Circles of the plat closure of a position permutation."""
    n2 = len(perm)
    parent = list(range(2 * n2))  # nodes: top x-1, bottom n2 + (x-1)

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for j in range(0, n2, 2):
        union(j, j + 1)
        union(n2 + j, n2 + j + 1)
    for x in range(n2):
        union(x, n2 + perm[x] - 1)
    return len({find(v) for v in range(2 * n2)})


# ---------------------------------------------------------------------------
# run-counting walk: arcs per side, intersections per component


def _piece_set(m: int, ps: list[int]) -> set[tuple]:
    pieces = {("top_cap", (ps[0] + 1) // 2), ("bottom_cap", (ps[-1] + 1) // 2)}
    for g in range(1, m):
        pieces.add(("segment", g, max(ps[g - 1], ps[g])))
    return pieces


def _element_side(el: tuple, m: int, ps: list[int], entries) -> str:
    kind = el[0]
    if kind == "segment":
        _, g, x = el
        if g == 0:
            return "left" if x <= ps[0] else "right"
        if g == m:
            return "left" if x <= ps[-1] else "right"
        thr = max(ps[g - 1], ps[g])
        if x == thr:
            raise AssertionError(f"{el} is a crossing piece, not sided")
        return "left" if x < thr else "right"
    if kind == "top_cap":
        return "left" if 2 * el[1] <= ps[0] else "right"
    if kind == "bottom_cap":
        return "left" if 2 * el[1] <= ps[-1] else "right"
    if kind == "box":
        _, i, j = el
        return "left" if j <= entries[i - 1] else "right"
    if kind == "straight":
        _, i, x = el
        return "left" if x < ps[i - 1] else "right"
    raise AssertionError(f"unknown element {el}")


def trace_sides(d: PlatDiagram, entries: tuple[int, ...], cycles=None) -> dict:
    """Walk every component; count sphere hits and maximal one-side runs.

    Returns per-component intersection counts, total arcs per side, and
    the components lying wholly on one side.  Raises if a run between
    two consecutive sphere hits ever changes side, which would mean the
    side thresholds are inconsistent with the actual connectivity.
    Precomputed ``component_cycles(d)`` output can be passed in when one
    diagram is traced along many paths.
    """
    m = d.m
    ps = [pos_of(i, a) for i, a in enumerate(entries, 1)]
    pieces = _piece_set(m, ps)

    if cycles is None:
        cycles = component_cycles(d)
    hits: list[int] = []
    left_arcs = right_arcs = 0
    beside = {"left": [], "right": []}
    for cid, cycle in enumerate(cycles):
        flags = [el in pieces for el in cycle]
        count = sum(flags)
        hits.append(count)
        if count == 0:
            sides = {_element_side(el, m, ps, entries) for el in cycle}
            if len(sides) != 1:
                raise AssertionError(f"component {cid} straddles the sphere unseen")
            beside[sides.pop()].append(cid)
            continue
        # rotate so the cycle starts at a sphere hit, then split into runs
        first = flags.index(True)
        rotated = cycle[first:] + cycle[:first]
        run: list[tuple] = []
        for el in rotated[1:] + rotated[:1]:
            if el in pieces:
                if not run:
                    raise AssertionError("adjacent sphere hits with no arc between")
                sides = {_element_side(x, m, ps, entries) for x in run}
                if len(sides) != 1:
                    raise AssertionError(f"mixed-side arc in component {cid}: {run}")
                if sides.pop() == "left":
                    left_arcs += 1
                else:
                    right_arcs += 1
                run = []
            else:
                run.append(el)
    return {
        "hits": hits,
        "left_arcs": left_arcs,
        "right_arcs": right_arcs,
        "beside_left": beside["left"],
        "beside_right": beside["right"],
    }


# ---------------------------------------------------------------------------
# corpora


def random_all_twist(rng: random.Random, n: int, m: int, spread: int = 5) -> PlatDiagram:
    """Arbitrary all-twist diagram, zero boxes and small ends included."""
    rows = []
    for i in range(1, m + 1):
        rows.append([rng.randint(-spread, spread) for _ in range(row_len(n, i))])
    return make_diagram(n, m, rows)


def random_shape(rng: random.Random, n_hi: int, m_hi: int) -> tuple[int, int]:
    return rng.randint(3, n_hi), rng.choice(range(1, m_hi + 1, 2))

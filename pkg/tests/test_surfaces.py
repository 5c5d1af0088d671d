"""Sphere decompositions and surface invariants."""

import random

import pytest

from platsurf import (
    PLANAR,
    TUBED_LEFT,
    TUBED_RIGHT,
    PathError,
    assembled_surface_cells,
    build_topology,
    components_strictly_beside,
    crossing_components,
    decompose,
    enumerate_allowable,
    make_diagram,
    surface_invariants,
)
from helpers import random_all_twist, random_shape, trace_sides


def test_decompose_frozen_small():
    d = make_diagram(3, 1, [[2, 4]])
    dec = decompose(d, (1,))
    assert dec.m == 1
    assert dec.puncture_count == 2
    assert dec.crossing == (1, 1)
    assert dec.left.boxes == frozenset({(1, 1)})
    assert dec.right.boxes == frozenset({(1, 2)})
    assert dec.left.arc_count == dec.right.arc_count == 1
    assert dec.left.loop_components == (0,)
    assert dec.right.loop_components == (2,)
    assert dec.left.loop_count == dec.right.loop_count == 1


def test_decompose_frozen_figure():
    d = make_diagram(4, 5, [[3] * 3, [3] * 4, [3] * 3, [3] * 4, [3] * 3])
    dec = decompose(d, (1, 1, 1, 2, 2))
    assert dec.crossing == (0,) * 6
    assert dec.left.boxes == frozenset(
        {(1, 1), (2, 1), (3, 1), (4, 1), (4, 2), (5, 1), (5, 2)}
    )
    assert dec.right.boxes == frozenset(
        {(1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 3), (4, 4), (5, 3)}
    )
    assert dec.left.arc_count == dec.right.arc_count == 3
    assert dec.left.loop_components == dec.right.loop_components == ()


def test_decompose_rejects_bad_path():
    d = make_diagram(3, 3, [[3, 3], [3, 3, 3], [3, 3]])
    with pytest.raises(PathError):
        decompose(d, (1, 1))
    with pytest.raises(PathError):
        decompose(d, (1, 3, 1))


def test_surface_invariants_frozen():
    d = make_diagram(3, 1, [[2, 4]])
    planar, left, right = surface_invariants(decompose(d, (1,)))
    assert planar == planar.__class__(PLANAR, 0, 0, 2, False)
    assert planar.extra_tori is None
    assert left.kind == TUBED_LEFT and right.kind == TUBED_RIGHT
    for rep in (left, right):
        assert (rep.euler, rep.genus, rep.boundary, rep.closed) == (0, 1, 0, True)
    # side loops stay separate tori, they never inflate the genus
    assert left.extra_tori == 1
    assert right.extra_tori == 1


def test_surface_invariants_by_m():
    for m in (1, 3, 5, 7):
        n = 4
        rows = [[3] * (n - 1 if i % 2 == 1 else n) for i in range(1, m + 1)]
        d = make_diagram(n, m, rows)
        path = enumerate_allowable(d)[0]
        planar, left, right = surface_invariants(decompose(d, path))
        assert planar.euler == 1 - m
        assert planar.boundary == m + 1
        assert planar.genus == 0 and not planar.closed
        for rep in (left, right):
            assert rep.euler == 1 - m
            assert rep.genus == (m + 1) // 2
            assert rep.boundary == 0 and rep.closed


def test_surface_dicts():
    d = make_diagram(3, 3, [[3, 3], [3, 3, 3], [3, 3]])
    planar, left, _ = surface_invariants(decompose(d, (1, 1, 1)))
    assert planar.to_dict() == {
        "kind": "planar",
        "euler": -2,
        "genus": 0,
        "boundary": 4,
        "closed": False,
    }
    assert left.to_dict()["extra_tori"] == left.extra_tori


def test_cell_assembly_matches_closed_forms():
    for m in range(1, 13, 2):
        open_cells = assembled_surface_cells(m + 1, 0)
        assert open_cells["euler"] == 1 - m
        assert open_cells["boundary"] == m + 1
        assert not open_cells["closed"]
        closed_cells = assembled_surface_cells(m + 1, (m + 1) // 2)
        assert closed_cells["euler"] == 1 - m
        assert closed_cells["boundary"] == 0
        assert closed_cells["closed"]
        assert closed_cells["genus"] == (m + 1) // 2


def test_cell_assembly_counts_are_explicit():
    cells = assembled_surface_cells(2, 1)
    assert cells["vertices"] - cells["edges"] + cells["faces"] == cells["euler"]
    assert cells == {
        "vertices": 4,
        "edges": 7,
        "faces": 3,
        "euler": 0,
        "boundary": 0,
        "closed": True,
        "genus": 1,
    }


def test_cell_assembly_rejects_partial_tubing():
    with pytest.raises(PathError):
        assembled_surface_cells(4, 1)


def test_decompose_random_consistency():
    rng = random.Random(47)
    for _ in range(60):
        n, m = random_shape(rng, 5, 7)
        d = random_all_twist(rng, n, m)
        t = build_topology(d)
        for path in enumerate_allowable(d):
            dec = decompose(d, path)
            assert dec.path.entries == path.entries
            both = dec.left.boxes | dec.right.boxes
            assert len(both) == len(dec.left.boxes) + len(dec.right.boxes)
            assert both == {(i, j) for i, j, _ in d.boxes()}
            assert dec.crossing == crossing_components(t, path)
            assert set(dec.left.loop_components) == components_strictly_beside(
                t, path, "left"
            )
            assert set(dec.right.loop_components) == components_strictly_beside(
                t, path, "right"
            )


def test_arc_counts_match_component_walk():
    # the walk counts actual maximal one-side runs; each side must hold
    # exactly (m + 1) / 2 of them
    rng = random.Random(53)
    for _ in range(60):
        n, m = random_shape(rng, 5, 7)
        d = random_all_twist(rng, n, m)
        for path in enumerate_allowable(d):
            trace = trace_sides(d, path.entries)
            dec = decompose(d, path)
            assert trace["left_arcs"] == dec.left.arc_count == (m + 1) // 2
            assert trace["right_arcs"] == dec.right.arc_count == (m + 1) // 2

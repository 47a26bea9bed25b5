import random
from fractions import Fraction

import pytest

from khbound.fronts import desingularize, is_admissible, tb, validate_front, zero_resolution
from khbound.khovanov import khovanov_homology, strong_bound, weak_bound
from khbound.classical import alternating_tb, jones_hat
from khbound.links import braid_closure, parse_pd
from khbound.mondrian import (
    EnhancedCycle,
    MondrianDiagram,
    MondrianError,
    RegionAnalysis,
    add_interior_vertex,
    boundary_walks,
    build_max_tb_front,
    contract,
    front_from_mondrian,
    is_strong,
    join_treelike,
    mondrian_cycle,
    mondrian_enhanced_cycle,
    mondrian_from_graph,
)
from khbound.planar import is_embedded_isomorphic, is_reduced_graph

from conftest import cycle_graph, graph_from_coords, random_reduced_graph

TREFOIL_PD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
FIG8_PD = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"


def test_mondrian_validation():
    with pytest.raises(MondrianError):
        MondrianDiagram.build([(0, 0, 4), (0, 2, 6)], [])  # overlapping horizontals
    with pytest.raises(MondrianError):
        MondrianDiagram.build([(0, 0, 4)], [(2, 0, 2)])  # dangling vertical end
    with pytest.raises(MondrianError):
        # vertical crossing a horizontal strictly between its ends
        MondrianDiagram.build(
            [(0, 0, 4), (2, 0, 4), (4, 0, 4)], [(2, 0, 4)]
        )


def test_mondrian_cycle_contracts_to_cycle():
    for n in (2, 3, 4, 5, 8):
        m = mondrian_cycle(n)
        assert len(m.horizontals) == n
        assert len(m.verticals) == n
        assert is_strong(m)
        assert is_embedded_isomorphic(contract(m), cycle_graph(n))


def test_enhanced_cycle_examples():
    cases = [
        EnhancedCycle(4, ((1, 3),)),
        EnhancedCycle(4, ((2, 3),)),
        EnhancedCycle(4, ((2, 4),)),
        EnhancedCycle(2, ((1, 2),)),
        EnhancedCycle(2, ((1, 2), (1, 2), (1, 2))),
        EnhancedCycle(6, ((1, 4), (2, 4), (2, 3), (1, 6))),
        EnhancedCycle(7, ((1, 3), (3, 5), (5, 7), (1, 7), (3, 4))),
    ]
    for ec in cases:
        m = mondrian_enhanced_cycle(ec)
        assert is_strong(m)
        g = contract(m)
        assert g.edge_count == ec.length + len(ec.chords)
        assert is_reduced_graph(g)


def test_enhanced_cycle_no_chords_is_cycle():
    assert mondrian_enhanced_cycle(EnhancedCycle(5)).horizontals == mondrian_cycle(5).horizontals


def test_enhanced_cycle_rejects_interleaved_chords():
    with pytest.raises(MondrianError):
        mondrian_enhanced_cycle(EnhancedCycle(6, ((1, 4), (2, 5))))


def test_square_with_diagonal_counts():
    m = mondrian_enhanced_cycle(EnhancedCycle(4, ((1, 3),)))
    assert len(m.horizontals) == 4
    assert len(m.verticals) == 5
    assert is_strong(m)


def test_join_two_triangles():
    t1 = mondrian_enhanced_cycle(EnhancedCycle(3))
    t2 = mondrian_enhanced_cycle(EnhancedCycle(3))
    joined, maps = join_treelike([(t1, None), (t2, (0, 0))])
    assert len(joined.horizontals) == 5
    assert len(joined.verticals) == 6
    assert is_strong(joined)
    g = contract(joined)
    assert is_reduced_graph(g)
    assert sorted(len(r) for r in g.rotation) == [2, 2, 2, 2, 4]


def test_join_single_part_is_identity():
    t1 = mondrian_enhanced_cycle(EnhancedCycle(3))
    joined, _maps = join_treelike([(t1, None)])
    assert joined.horizontals == t1.horizontals


def test_join_five_cycles_treelike():
    parts = [(mondrian_cycle(3), None)]
    parts.append((mondrian_cycle(4), (0, 1)))
    parts.append((mondrian_cycle(3), (0, 2)))
    parts.append((mondrian_cycle(2), (1, 2)))
    parts.append((mondrian_cycle(3), (2, 1)))
    joined, maps = join_treelike(parts)
    assert is_strong(joined)
    g = contract(joined)
    assert is_reduced_graph(g)
    # vertices: 3 + (4-1) + (3-1) + (2-1) + (3-1) shared bases collapse
    assert g.n == 3 + 3 + 2 + 1 + 2
    assert g.edge_count == 3 + 4 + 3 + 2 + 3


def _interior_point(m):
    analysis = RegionAnalysis(m)
    roots = analysis.bounded_regions()
    root, cells = sorted(roots.items())[0]
    s, i = cells[0]
    xa, xb = analysis.slabs[s]
    lo, hi = analysis.cell_interval(s, i)
    return (Fraction(xa + xb, 2), Fraction(lo + hi, 2))


def test_add_interior_vertex_keeps_strongness():
    sq = mondrian_cycle(4)
    m2, h_new, vids = add_interior_vertex(sq, _interior_point(sq), [0, 1, 2, 3])
    assert is_strong(m2)
    assert len(vids) == 4
    g = contract(m2)
    assert sorted(len(r) for r in g.rotation) == [3, 3, 3, 3, 4]


def test_doubled_edge_trick():
    sq = mondrian_cycle(4)
    m2, h_new, vids = add_interior_vertex(sq, _interior_point(sq), [0, 0])
    assert is_strong(m2)
    vs = [v for k, v in enumerate(m2.verticals) if k != vids[1]]
    m3 = MondrianDiagram(m2.horizontals, tuple(vs))
    m3.validate()
    assert is_strong(m3)
    assert contract(m3).degree_sequence() == [1, 2, 2, 2, 3]


def test_jammed_region_is_not_strong():
    # a sealed corridor belonging to another region splits the vertical
    # slices of the region wrapping around it
    m = MondrianDiagram.build(
        [(0, -10, 6), (-4, -6, 10), (-8, -6, 14), (-12, -10, 18)],
        [(5, -4, 0), (9, -8, -4), (13, -12, -8), (-8, -12, 0), (-4, -8, -4)],
    )
    assert not is_strong(m)


def test_boundary_walk_face_count():
    m = mondrian_enhanced_cycle(EnhancedCycle(4, ((1, 3),)))
    walks = boundary_walks(m)
    # V - E + F = 2
    assert len(walks) == len(m.verticals) - len(m.horizontals) + 2


def test_mondrian_from_graph_examples():
    wheel = graph_from_coords(
        [(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5)],
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)],
    )
    k4 = graph_from_coords(
        [(0, 0), (2, 0), (1, 2), (1, 0.7)],
        [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
    )
    for g in (wheel, k4, cycle_graph(2), cycle_graph(6)):
        m, hv, ve = mondrian_from_graph(g)
        assert is_strong(m)
        assert is_embedded_isomorphic(contract(m), g)


def test_mondrian_from_graph_rejects_bridges():
    from khbound.planar import PlanarGraph

    path = PlanarGraph(2, [(0, 1)], [[(0, 0)], [(0, 1)]])
    with pytest.raises(Exception):
        mondrian_from_graph(path)


def test_round_trip_random_graphs():
    rng = random.Random(424242)
    done = 0
    while done < 25:
        g = random_reduced_graph(rng, steps=rng.randint(2, 7))
        if g.n > 12:
            continue
        m, hv, ve = mondrian_from_graph(g)
        assert is_strong(m)
        assert is_embedded_isomorphic(contract(m), g)
        done += 1


def test_front_from_mondrian_lips():
    m = MondrianDiagram.build([(0, 0, 4)], [])
    f = front_from_mondrian(m)
    assert tb(f) == -1
    assert is_admissible(f)


def test_front_from_mondrian_accounting():
    for ec in (EnhancedCycle(2, ((1, 2),)), EnhancedCycle(4, ((1, 3),)), EnhancedCycle(3)):
        m = mondrian_enhanced_cycle(ec)
        f = front_from_mondrian(m)
        assert validate_front(f) == []
        assert f.crossing_count == len(m.verticals)
        assert f.cusp_count == 2 * len(m.horizontals)
        assert is_admissible(f)
        report = zero_resolution(f)
        assert report.component_count == len(m.horizontals)
        assert all(c == 2 for c in report.cusps_per_component.values())


def test_theta_mondrian_gives_trefoil():
    m = mondrian_enhanced_cycle(EnhancedCycle(2, ((1, 2),)))
    f = front_from_mondrian(m)
    d = desingularize(f)
    assert jones_hat(d) in (
        jones_hat(braid_closure([1, 1, 1])),
        jones_hat(braid_closure([-1, -1, -1])),
    )
    assert abs(tb(f)) in (1, 6)


def test_build_max_tb_front_small_knots():
    for pd, expected in ((TREFOIL_PD, -6), (FIG8_PD, -3)):
        d = parse_pd(pd)
        front = build_max_tb_front(d)
        assert tb(front) == expected == alternating_tb(d)
        assert is_admissible(front)
        H = khovanov_homology(d)
        assert strong_bound(H) == weak_bound(H) == expected


def test_build_max_tb_front_unknot():
    front = build_max_tb_front(parse_pd("[]"))
    assert tb(front) == -1


def test_build_max_tb_front_rejects_nonalternating():
    with pytest.raises(Exception):
        build_max_tb_front(braid_closure([1, 1, 2]))


def test_cycle_length_bounds():
    with pytest.raises(MondrianError):
        mondrian_cycle(1)
    with pytest.raises(MondrianError):
        mondrian_enhanced_cycle(EnhancedCycle(3, ((1, 5),)))

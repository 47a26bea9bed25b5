import pytest

from khbound.links import (
    DiagramError,
    LinkDiagram,
    braid_closure,
    mirror,
    parse_pd,
    smooth,
    writhe,
)

from conftest import brute_circle_count

TREFOIL_PD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"


def test_empty_pd_is_unknot():
    d = parse_pd("[]")
    assert d.crossing_count == 0
    assert d.component_count == 1
    assert writhe(d) == 0


def test_parse_three_crossing_knot():
    d = parse_pd(TREFOIL_PD)
    assert d.crossing_count == 3
    assert d.component_count == 1


def test_parse_rejects_bad_multiplicity():
    with pytest.raises(DiagramError):
        parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,4]]")


def test_parse_rejects_malformed():
    with pytest.raises(DiagramError):
        parse_pd("[[1,2,3]]")
    with pytest.raises(DiagramError):
        parse_pd("not json")


def test_braid_trefoil():
    d = braid_closure([1, 1, 1])
    assert d.crossing_count == 3
    assert d.component_count == 1
    assert writhe(d) == 3


def test_braid_torus_5_4():
    d = braid_closure([-1, -2, -3] * 5)
    assert d.crossing_count == 15
    assert d.component_count == 1
    assert writhe(d) == -15


def test_braid_single_kink():
    d = braid_closure([1])
    assert d.crossing_count == 1
    assert d.component_count == 1
    assert writhe(d) == 1


def test_braid_untouched_strand_gives_unknot_component():
    d = braid_closure([1], strands=3)
    assert d.unknot_components == 1
    assert d.component_count == 2


def test_braid_empty_word_needs_strands():
    with pytest.raises(DiagramError):
        braid_closure([])
    assert braid_closure([], strands=3).component_count == 3


def test_mirror_negates_writhe():
    d = braid_closure([1, 1, 1])
    assert writhe(mirror(d)) == -3


def test_mirror_involution():
    for d in (parse_pd(TREFOIL_PD), braid_closure([1, -2, 1, -2])):
        m = mirror(mirror(d))
        assert m.crossings == d.crossings
        assert m.over_in == d.over_in


def test_smooth_trefoil_circle_counts():
    d = braid_closure([1, 1, 1])
    assert smooth(d, (0, 0, 0)).circle_count == 2
    assert smooth(d, (1, 1, 1)).circle_count == 3


def test_smooth_unknot():
    d = parse_pd("[]")
    assert smooth(d, ()).circle_count == 1


def test_smooth_rejects_wrong_length():
    with pytest.raises(DiagramError):
        smooth(parse_pd(TREFOIL_PD), (0, 0))


def test_smooth_against_brute_force(rng):
    diagrams = [
        parse_pd(TREFOIL_PD),
        braid_closure([1, 1, 1]),
        braid_closure([1, -2, 1, -2]),
        braid_closure([-1, -2, -3] * 2),
        braid_closure([2, 2, 1, 1], strands=4),
    ]
    for d in diagrams:
        n = d.crossing_count
        for _ in range(20):
            state = tuple(rng.randint(0, 1) for _ in range(n))
            assert smooth(d, state).circle_count == brute_circle_count(d, state)


def test_adjacent_states_change_circles_by_one(rng):
    for d in (parse_pd(TREFOIL_PD), braid_closure([1, -2, 1, -2]), braid_closure([2, 1, -2, 1])):
        n = d.crossing_count
        for s in range(1 << n):
            bits = [(s >> k) & 1 for k in range(n)]
            k0 = smooth(d, bits).circle_count
            for t in range(n):
                if bits[t] == 0:
                    flipped = list(bits)
                    flipped[t] = 1
                    k1 = smooth(d, flipped).circle_count
                    assert abs(k1 - k0) == 1


def test_component_edges_partition_edge_set():
    d = parse_pd(TREFOIL_PD)
    seen = [e for comp in d.components for e in comp]
    assert sorted(seen) == sorted(d.edges())


def test_regions_count_euler():
    d = parse_pd(TREFOIL_PD)
    assert len(d.regions()) == d.crossing_count + 2


def test_checkerboard_two_coloring():
    d = parse_pd(TREFOIL_PD)
    faces, corner_to_face, colors = d.checkerboard_colors()
    for t in range(d.crossing_count):
        for q in range(4):
            f1 = corner_to_face[(t, q)]
            f2 = corner_to_face[(t, (q + 1) % 4)]
            assert colors[f1] != colors[f2]


def test_split_diagram_has_no_region_structure():
    t1 = braid_closure([1, 1, 1])
    shifted = [tuple(e + 100 for e in c) for c in t1.crossings]
    d = LinkDiagram.from_crossings(
        list(t1.crossings) + shifted, over_in=t1.over_in + t1.over_in
    )
    assert not d.is_connected()
    with pytest.raises(DiagramError):
        d.regions()


def test_mirror_of_unknot_is_unknot():
    d = mirror(parse_pd("[]"))
    assert d.crossing_count == 0
    assert d.component_count == 1


def test_diagram_json_roundtrip():
    from khbound.links import diagram_from_json

    d = parse_pd(TREFOIL_PD)
    d2 = diagram_from_json(d.to_json())
    assert d2.crossings == d.crossings
    b = diagram_from_json({"braid": [1, 1, 1], "strands": 2})
    assert writhe(b) == 3
    u = diagram_from_json({"pd": [], "unknot_components": 2})
    assert u.component_count == 2

import pytest

from khbound.fronts import (
    FrontDiagram,
    FrontError,
    desingularize,
    fish,
    is_admissible,
    lips,
    rotation_number,
    stabilized_unknot,
    tb,
    unlink_front,
    validate_front,
    zero_resolution,
)
from khbound.khovanov import khovanov_homology, strong_bound
from khbound.classical import jones_hat
from khbound.laurent import Laurent
from khbound.links import writhe


def test_lips_is_valid_unknot():
    f = lips()
    assert validate_front(f) == []
    assert f.cusp_count == 2
    assert f.crossing_count == 0
    assert f.component_count() == 1
    assert tb(f) == -1
    assert rotation_number(f) == 0
    assert is_admissible(f)


def test_lips_desingularizes_to_unknot():
    d = desingularize(lips())
    assert d.crossing_count == 0
    assert d.component_count == 1
    assert strong_bound(khovanov_homology(d)) == -1


def test_vertical_segment_flagged():
    f = FrontDiagram([[(0, 0), (0, 1), (2, 0)], [(0, 0), (2, 0)]])
    assert any("vertical tangency" in p for p in validate_front(f))


def test_shared_event_x_flagged():
    # two lips whose cusps share x-coordinates
    a = lips(0, 4, 0)
    b = lips(0, 4, 10)
    f = FrontDiagram(a.arcs + b.arcs)
    assert any("non-generic" in p for p in validate_front(f))


def test_non_cusp_junction_flagged():
    f = FrontDiagram([[(0, 0), (1, 1)], [(1, 1), (2, 0)], [(0, 0), (2, 0)]])
    assert any("non-cusp junction" in p for p in validate_front(f))


def test_fish():
    f = fish()
    assert validate_front(f) == []
    assert f.crossing_count == 1
    assert f.cusp_count == 2
    d = desingularize(f)
    assert writhe(d) == -1
    assert tb(f) == -2
    assert not is_admissible(f)
    report = zero_resolution(f)
    assert report.component_count == 1
    assert report.cusps_per_component == {0: 2}
    assert report.crossing_assignment[0][0] == report.crossing_assignment[0][1]
    assert jones_hat(d) == Laurent({1: 1, -1: 1})


def test_stabilized_unknots():
    for z in (1, 2, 3):
        f = stabilized_unknot(z)
        assert validate_front(f) == []
        assert tb(f) == -1 - z
        assert rotation_number(f) == z
        assert not is_admissible(f)
        report = zero_resolution(f)
        assert any(c >= 4 for c in report.cusps_per_component.values())


def test_rotation_number_reversal():
    f = stabilized_unknot(2)
    assert rotation_number(f, reverse={0}) == -2
    assert rotation_number(f, reverse=True) == -2


def test_tb_orientation_independent_for_knots():
    for f in (lips(), fish(), stabilized_unknot(2)):
        assert tb(f) == tb(f, reverse=True)


def test_unlink_front():
    f = unlink_front(3)
    assert validate_front(f) == []
    d = desingularize(f)
    assert d.component_count == 3
    assert d.crossing_count == 0


def test_tb_bounded_by_strong_bound_on_stock_fronts():
    for f in (lips(), fish(), stabilized_unknot(1), stabilized_unknot(2)):
        bound = strong_bound(khovanov_homology(desingularize(f)))
        assert tb(f) <= bound
        if is_admissible(f):
            assert tb(f) == bound


def test_strict_inequality_for_stabilized():
    f = stabilized_unknot(1)
    bound = strong_bound(khovanov_homology(desingularize(f)))
    assert tb(f) == -2
    assert bound == -1


def test_front_json_roundtrip():
    f = fish()
    g = FrontDiagram.from_json(f.to_json())
    assert g.arcs == f.arcs


def test_from_pieces_merges_smooth_junctions():
    pieces = [
        [(0, 0), (1, 1)],
        [(1, 1), (3, 1)],
        [(3, 1), (4, 0)],
        [(0, 0), (2, -1), (4, 0)],
    ]
    f = FrontDiagram.from_pieces(pieces)
    assert len(f.arcs) == 2
    assert validate_front(f) == []


def test_analysis_requires_validity():
    f = FrontDiagram([[(0, 0), (0, 1)]])
    with pytest.raises(FrontError):
        f._analyze()

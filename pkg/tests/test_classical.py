import pytest

from khbound.classical import (
    alternating_tb,
    alternating_tb_via_crossings,
    determinant,
    is_reduced_alternating,
    jones_hat,
    jones_v_at_minus_one,
    signature,
)
from khbound.khovanov import khovanov_homology, strong_bound, weak_bound
from khbound.laurent import Laurent
from khbound.links import DiagramError, braid_closure, mirror, parse_pd, smooth

TREFOIL_PD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
FIG8_PD = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"


def test_jones_unknot():
    assert jones_hat(parse_pd("[]")) == Laurent({1: 1, -1: 1})


def test_jones_right_trefoil_hand_value():
    # 8-state bracket sum gives q + q^3 + q^5 - q^9
    assert jones_hat(braid_closure([1, 1, 1])) == Laurent({1: 1, 3: 1, 5: 1, 9: -1})


def test_jones_mirror_inverts_variable():
    for word in ([1, 1, 1], [1, -2, 1, -2], [2, 1, 1]):
        d = braid_closure(word)
        assert jones_hat(mirror(d)) == jones_hat(d).substitute_inverse()


def test_determinants():
    assert determinant(parse_pd(TREFOIL_PD)) == 3
    assert determinant(parse_pd(FIG8_PD)) == 5
    assert determinant(parse_pd("[]")) == 1


def test_signature_right_trefoil_both_colorings():
    t = braid_closure([1, 1, 1])
    assert signature(t, color=0) == 2
    assert signature(t, color=1) == 2


def test_signature_left_trefoil():
    assert signature(parse_pd(TREFOIL_PD)) == -2


def test_signature_figure_eight_amphichiral():
    assert signature(parse_pd(FIG8_PD)) == 0


def test_signature_mirror_antisymmetry():
    for word in ([1, 1, 1], [1, 1], [2, 1, 2, 1], [1, 1, 1, 2, 2]):
        d = braid_closure(word)
        assert signature(mirror(d)) == -signature(d)


def test_signature_unknot_and_kinks():
    assert signature(parse_pd("[]")) == 0
    # Reidemeister-I invariance
    assert signature(braid_closure([1])) == 0
    assert signature(braid_closure([-1])) == 0
    assert signature(braid_closure([1, 1, 1, 2])) == signature(braid_closure([1, 1, 1]))


def test_signature_positive_hopf():
    assert signature(braid_closure([1, 1])) == 1


def test_signature_split_raises():
    with pytest.raises(DiagramError):
        signature(braid_closure([1], strands=3))


def test_signature_alternating_formula():
    """On reduced alternating diagrams the Goeritz value must match
    s_A(D) - n_plus(D) - 1 in the negated convention."""
    from khbound.table import alternating_names, lookup

    for name in alternating_names()[:12]:
        d = lookup(name)
        s_a = smooth(d, (0,) * d.crossing_count).circle_count
        assert -signature(d) == s_a - d.n_plus - 1


def test_is_reduced_alternating():
    assert is_reduced_alternating(parse_pd(TREFOIL_PD))
    assert is_reduced_alternating(parse_pd(FIG8_PD))
    assert is_reduced_alternating(parse_pd("[]"))
    assert not is_reduced_alternating(braid_closure([1]))          # kink
    assert not is_reduced_alternating(braid_closure([1, 1, 2]))    # not alternating
    assert not is_reduced_alternating(braid_closure([1], strands=3))  # split


def test_two_strand_braids_are_alternating_as_drawn():
    # all-same-sign 2-braids zigzag, so they alternate along the strand
    assert is_reduced_alternating(braid_closure([1, 1, 1]))
    assert is_reduced_alternating(braid_closure([-1, -1, -1, -1, -1]))


def test_alternating_tb_values():
    assert alternating_tb(parse_pd(TREFOIL_PD)) == -6
    assert alternating_tb(braid_closure([1, 1, 1])) == 1
    assert alternating_tb(parse_pd(FIG8_PD)) == -3
    assert alternating_tb(braid_closure([1, 1])) == 0  # positive Hopf link


def test_alternating_tb_via_crossings_agrees():
    for d in (parse_pd(TREFOIL_PD), braid_closure([1, 1, 1]), parse_pd(FIG8_PD), braid_closure([1, 1])):
        assert alternating_tb(d) == alternating_tb_via_crossings(d)


def test_alternating_tb_rejects_nonalternating():
    with pytest.raises(DiagramError):
        alternating_tb(braid_closure([1, 1, 2]))


def test_alternating_tb_matches_khovanov_bounds():
    for d in (parse_pd(TREFOIL_PD), braid_closure([1, 1, 1]), parse_pd(FIG8_PD)):
        H = khovanov_homology(d)
        assert alternating_tb(d) == strong_bound(H) == weak_bound(H)


def test_goeritz_colorings_agree():
    for word in ([1, 1, 1], [1, 1], [2, 1, 2, 1]):
        d = braid_closure(word)
        assert signature(d, color=0) == signature(d, color=1)


def test_jones_v_minus_one_sign():
    assert abs(jones_v_at_minus_one(parse_pd(TREFOIL_PD))) == 3

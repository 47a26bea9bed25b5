import pytest

from khbound.khovanov import (
    BigradedGroup,
    ResourceLimit,
    build_cube,
    graded_euler,
    khovanov_homology,
    poincare_polynomial,
    strong_bound,
    weak_bound,
)
from khbound.classical import jones_hat
from khbound.laurent import Laurent
from khbound.links import LinkDiagram, braid_closure, mirror, parse_pd

TREFOIL_PD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
FIG8_PD = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"


def test_unknot_homology():
    H = khovanov_homology(parse_pd("[]"))
    assert H.groups == {(-1, 0): (1, ()), (1, 0): (1, ())}
    assert strong_bound(H) == -1
    assert weak_bound(H) == -1


def test_two_component_unlink():
    H = khovanov_homology(LinkDiagram.from_crossings((), unknot_components=2))
    assert H.groups == {(-2, 0): (1, ()), (0, 0): (2, ()), (2, 0): (1, ())}
    assert poincare_polynomial(H).coeffs == {(-2, 0): 1, (0, 0): 2, (2, 0): 1}


def test_right_trefoil_homology():
    H = khovanov_homology(braid_closure([1, 1, 1]))
    assert {k: v for k, v in H.groups.items() if v[0]} == {
        (1, 0): (1, ()),
        (3, 0): (1, ()),
        (5, 2): (1, ()),
        (9, 3): (1, ()),
    }
    torsion = {k: v[1] for k, v in H.groups.items() if v[1]}
    assert torsion == {(7, 2): (2,)}


def test_left_trefoil_strong_bound_is_minus_six():
    H = khovanov_homology(parse_pd(TREFOIL_PD))
    assert strong_bound(H) == -6
    assert weak_bound(H) == -6


def test_invariance_under_diagram_change():
    # braid closure of sigma1^-3 and the table PD are both left trefoils
    H1 = khovanov_homology(parse_pd(TREFOIL_PD))
    H2 = khovanov_homology(braid_closure([-1, -1, -1]))
    assert H1 == H2


def test_crossing_permutation_invariance():
    crossings = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]
    H1 = khovanov_homology(LinkDiagram.from_crossings(crossings))
    H2 = khovanov_homology(LinkDiagram.from_crossings(crossings[::-1]))
    assert H1 == H2


def test_d_squared_zero_by_direct_multiplication():
    for word in ([1, 1, 1], [1, -2, 1, -2], [-1, 2, -1, 2]):
        cube = build_cube(braid_closure(word))
        for i in cube.quantum_degrees():
            dims, mats = cube.degree_slice(i)
            for j in sorted(mats):
                if j + 1 not in mats:
                    continue
                a, b = mats[j], mats[j + 1]
                # (b @ a) must vanish entry by entry
                prod = {}
                for mid, arow in a.rows.items():
                    for c, v in arow.items():
                        for r2, brows in b.rows.items():
                            v2 = brows.get(mid)
                            if v2:
                                key = (r2, c)
                                prod[key] = prod.get(key, 0) + v2 * v
                assert all(v == 0 for v in prod.values())


def test_figure_eight_symmetric():
    H = khovanov_homology(parse_pd(FIG8_PD))
    ranks = {k: v[0] for k, v in H.groups.items() if v[0]}
    assert ranks == {
        (-5, -2): 1, (-1, -1): 1, (-1, 0): 1, (1, 0): 1, (1, 1): 1, (5, 2): 1,
    }
    # mirror duality of the free part
    mirrored = {(-i, -j): r for (i, j), r in ranks.items()}
    assert mirrored == ranks


def test_mirror_duality_of_free_ranks():
    for word in ([1, 1, 1], [1, 1, 2, -1, 2], [-1, -2, -1]):
        d = braid_closure(word)
        H = khovanov_homology(d)
        Hm = khovanov_homology(mirror(d))
        ranks = {(i, j): r for (i, j), (r, _t) in H.groups.items() if r}
        ranks_m = {(i, j): r for (i, j), (r, _t) in Hm.groups.items() if r}
        assert ranks_m == {(-i, -j): r for (i, j), r in ranks.items()}


def test_quantum_parity_matches_components():
    for d in (
        parse_pd(TREFOIL_PD),
        braid_closure([1, 1]),          # Hopf link
        braid_closure([1, 1, 1, 1]),    # T(2,4) link
        LinkDiagram.from_crossings((), unknot_components=2),
    ):
        H = khovanov_homology(d)
        for (i, _j) in H.groups:
            assert (i - d.component_count) % 2 == 0


def test_euler_identity_on_small_diagrams():
    for word in ([1, 1, 1], [-1, -1, -1], [1, 1], [1, -2, 1, -2], [2, 2, 1, 1, 1]):
        d = braid_closure(word)
        assert graded_euler(khovanov_homology(d)) == jones_hat(d)


def test_graded_euler_right_trefoil_value():
    H = khovanov_homology(braid_closure([1, 1, 1]))
    assert graded_euler(H) == Laurent({1: 1, 3: 1, 5: 1, 9: -1})


def test_poincare_specializes_to_euler():
    H = khovanov_homology(parse_pd(FIG8_PD))
    assert poincare_polynomial(H).specialize_t(-1) == graded_euler(H)


def test_reduce_and_parallel_agree():
    d = braid_closure([1, 1, 2, -1, 2])
    base = khovanov_homology(d)
    assert khovanov_homology(d, reduce_first=True) == base
    assert khovanov_homology(d, parallel=3) == base
    assert khovanov_homology(d, reduce_first=True, parallel=3) == base


def test_crossing_cap():
    with pytest.raises(ResourceLimit):
        build_cube(braid_closure([1, -2] * 9), max_crossings=16)
    build_cube(braid_closure([1, -2] * 9), max_crossings=18)


def test_strong_bound_leq_weak_bound():
    for word in ([1, 1, 1], [-1, -2] * 4, [1, -2, 1, -2], [-1, -1, -1]):
        H = khovanov_homology(braid_closure(word))
        assert strong_bound(H) <= weak_bound(H)


def test_zero_homology_raises():
    with pytest.raises(ValueError):
        strong_bound(BigradedGroup({}))
    with pytest.raises(ValueError):
        weak_bound(BigradedGroup({(1, 0): (0, (2,))}))

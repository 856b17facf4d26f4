import numpy as np
import pytest

from whsl import (
    FractionalDivisor,
    ResolutionGraph,
    build_graph,
    intersection_matrix,
    is_negative_definite,
    to_dot,
)
from whsl.enumerator import dn_family_member, special_alpha_nonpositive
from whsl.resolution import arm_roundtrip_ok


def test_build_graph_examples():
    g_1a1 = build_graph(FractionalDivisor(genus=3, deg_e=4))
    assert g_1a1.central_genus == 3
    assert g_1a1.central_self_intersection == -4
    assert g_1a1.arms == ()

    d_1c7 = FractionalDivisor(genus=0, deg_e=-2, branches=((1, 2), (2, 3), (6, 7)))
    g_1c7 = build_graph(d_1c7)
    assert g_1c7.central_self_intersection == -1
    assert g_1c7.arms == ((-2,), (-3,), (-7,))

    arm = build_graph(FractionalDivisor(genus=1, deg_e=0, branches=((2, 5),))).arms[0]
    assert arm == (-2, -3)


def test_graph_validation():
    with pytest.raises(ValueError):
        ResolutionGraph(central_genus=0, central_self_intersection=-2, arms=((-1,),))
    with pytest.raises(ValueError):
        ResolutionGraph(central_genus=-1, central_self_intersection=-2, arms=())
    # a (-1) central curve of genus 0 with three arms is minimal good
    ResolutionGraph(central_genus=0, central_self_intersection=-1, arms=((-2,), (-3,), (-7,)))


def test_build_graph_rejects_non_minimal_good():
    # R(P^1, (1/2)P) is a polynomial ring; its "graph" would be a (-1)-curve
    # with a single chain and must be refused
    smooth = FractionalDivisor(genus=0, deg_e=0, branches=((1, 2),))
    with pytest.raises(ValueError):
        build_graph(smooth)


def test_intersection_matrix_examples():
    single = ResolutionGraph(central_genus=3, central_self_intersection=-4, arms=())
    assert intersection_matrix(single).tolist() == [[-4]]

    chain = ResolutionGraph(central_genus=1, central_self_intersection=-1, arms=((-2, -3),))
    assert intersection_matrix(chain).tolist() == [[-1, 1, 0], [1, -2, 1], [0, 1, -3]]

    d_1c7 = FractionalDivisor(genus=0, deg_e=-2, branches=((1, 2), (2, 3), (6, 7)))
    M = intersection_matrix(build_graph(d_1c7))
    assert M.tolist() == [
        [-1, 1, 1, 1],
        [1, -2, 0, 0],
        [1, 0, -3, 0],
        [1, 0, 0, -7],
    ]
    assert np.array_equal(M, M.T)


def test_is_negative_definite_examples():
    assert is_negative_definite([[-2, 1], [1, -3]])
    assert is_negative_definite([[-1]])
    assert not is_negative_definite([[0]])
    assert not is_negative_definite([[-1, 1], [1, -1]])  # semidefinite
    assert not is_negative_definite([[2, 0], [0, -1]])
    with pytest.raises(ValueError):
        is_negative_definite([[1, 2, 3], [4, 5, 6]])


def test_emitted_graphs_certify(classified):
    for alpha in (1, 2):
        for entry in classified.get(alpha):
            for D in entry.divisors:
                G = build_graph(D)
                M = intersection_matrix(G)
                assert G.size == 1 + sum(len(arm) for arm in G.arms)
                assert is_negative_definite(M)
                assert arm_roundtrip_ok(G)
                det = round(float(np.linalg.det(M)))
                assert (det > 0) == (G.size % 2 == 0)


def test_dynkin_graphs_for_negative_alpha():
    fixed = [x for x in special_alpha_nonpositive(-1) if hasattr(x, "divisor")]
    shapes = {x.label: build_graph(x.divisor) for x in fixed}
    assert shapes["E_6"].arms == ((-2,), (-2, -2), (-2, -2))
    assert shapes["E_7"].arms == ((-2,), (-2, -2), (-2, -2, -2))
    assert shapes["E_8"].arms == ((-2,), (-2, -2), (-2, -2, -2, -2))
    for label, G in shapes.items():
        assert G.central_self_intersection == -2
        assert G.size == int(label.split("_")[1])
        assert is_negative_definite(intersection_matrix(G))
    for n in range(2, 12):
        G = build_graph(dn_family_member(n).divisor)
        assert G.size == n + 2
        assert G.arms == ((-2,), (-2,), tuple([-2] * (n - 1)))
        assert is_negative_definite(intersection_matrix(G))


def test_to_dot_deterministic():
    d_1c7 = FractionalDivisor(genus=0, deg_e=-2, branches=((1, 2), (2, 3), (6, 7)))
    text1 = to_dot(build_graph(d_1c7))
    text2 = to_dot(build_graph(d_1c7))
    assert text1 == text2
    assert text1.count("[label=") == 4
    assert text1.count(" -- ") == 3
    single = to_dot(build_graph(FractionalDivisor(genus=3, deg_e=4)))
    assert 'n0 [label="g=3, -4"];' in single


def test_graph_json():
    G = ResolutionGraph(central_genus=1, central_self_intersection=-2, arms=((-2, -3),))
    assert G.to_json_dict() == {"genus": 1, "centralSelfInt": -2, "arms": [[-2, -3]]}

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwface.dynkin import (
    EXTRA,
    ExtendedDiagram,
    classify,
    components,
    extended_component_containing,
    is_orthogonal,
)
from hwface.errors import InputError
from hwface.rootsystem import DynkinType, from_cartan, highest_root, system

from helpers import W, nodes


def test_components():
    rs = system("A3")
    assert components(rs, nodes(1, 3)) == [nodes(1), nodes(3)]
    assert components(rs, nodes(1, 2)) == [nodes(1, 2)]
    assert components(rs, frozenset()) == []


def test_components_rejects_bad_nodes():
    with pytest.raises(InputError):
        components(system("A2"), {5})


def test_is_orthogonal():
    rs = system("A3")
    assert is_orthogonal(rs, nodes(1), nodes(3))
    assert not is_orthogonal(rs, nodes(1), nodes(2))
    assert is_orthogonal(rs, nodes(1, 2, 3), frozenset())


def test_classify():
    assert classify(system("A3"), nodes(1, 3)) == [DynkinType("A", 1)] * 2
    assert classify(system("B3"), nodes(2, 3)) == [DynkinType("B", 2)]
    assert classify(system("C3"), nodes(2, 3)) == [DynkinType("B", 2)]
    assert classify(system("F4"), nodes(1, 2, 3, 4)) == [DynkinType("F", 4)]


@pytest.mark.parametrize(
    "name,sub,expected",
    [
        ("D4", (1, 2, 3), "A3"),
        ("D4", (2, 3, 4), "A3"),
        ("D5", (2, 3, 4, 5), "D4"),
        ("E6", (1, 3, 4, 5, 6), "A5"),
        ("E6", (2, 3, 4, 5), "D4"),
        ("E7", (1, 2, 3, 4, 5, 6), "E6"),
        ("E8", (2, 3, 4, 5, 6, 7, 8), "D7"),
        ("F4", (2, 3, 4), "C3"),
        ("F4", (1, 2, 3), "B3"),
        ("B4", (2, 3, 4), "B3"),
        ("C4", (2, 3, 4), "C3"),
    ],
)
def test_classify_subdiagrams(name, sub, expected):
    (t,) = classify(system(name), nodes(*sub))
    assert str(t) == expected


def _relabelled(rs, perm):
    n = rs.rank
    return from_cartan([[rs.cartan[perm[i]][perm[j]] for j in range(n)] for i in range(n)])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A4", "B4", "C4", "D5", "E6", "F4", "G2", "B2xA2", "D4xA1"]), st.randoms(use_true_random=False))
def test_classify_invariant_under_relabelling(name, rnd):
    rs = system(name)
    perm = list(range(rs.rank))
    rnd.shuffle(perm)
    other = _relabelled(rs, perm)
    assert sorted(classify(other, other.nodes)) == sorted(classify(rs, rs.nodes))


def test_components_are_maximal():
    rs = system("E7")
    rnd = random.Random(3)
    for _ in range(30):
        J = frozenset(i for i in rs.nodes if rnd.random() < 0.6)
        parts = components(rs, J)
        assert frozenset().union(*parts) == J if parts else not J
        for a in parts:
            for b in parts:
                if a != b:
                    assert is_orthogonal(rs, a, b)


def test_affine_a2():
    rs = system("A2")
    E = ExtendedDiagram.affine(rs)
    assert E.attach == nodes(1, 2)
    assert extended_component_containing(E, frozenset()) == (rs.nodes, True)
    assert extended_component_containing(E, nodes(1)) == (nodes(2), True)


def test_affine_refused_on_semisimple():
    with pytest.raises(InputError):
        ExtendedDiagram.affine(system("A1xA1"))


def test_minus_lambda_omega1():
    rs = system("A2")
    E = ExtendedDiagram.minus_lambda(rs, W(1, 0))
    assert E.attach == nodes(1)
    assert extended_component_containing(E, frozenset()) == (nodes(1, 2), True)
    assert extended_component_containing(E, nodes(1)) == (frozenset(), True)


@pytest.mark.parametrize("name", ["A1", "A2", "A4", "B3", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"])
def test_minus_theta_matches_affine(name):
    rs = system(name)
    theta = highest_root(rs, rs.nodes)
    assert ExtendedDiagram.minus_lambda(rs, theta).edges() == ExtendedDiagram.affine(rs).edges()


def test_affine_attachment_known_cases():
    # the affine node hangs off node 1 for C_n, node 2 for B_n/D_n, node 2 for E6 (Bourbaki)
    assert ExtendedDiagram.affine(system("C3")).attach == nodes(1)
    assert ExtendedDiagram.affine(system("B3")).attach == nodes(2)
    assert ExtendedDiagram.affine(system("D4")).attach == nodes(2)
    assert ExtendedDiagram.affine(system("E6")).attach == nodes(2)
    assert ExtendedDiagram.affine(system("E8")).attach == nodes(8)
    assert ExtendedDiagram.affine(system("G2")).attach == nodes(2)
    assert EXTRA in ExtendedDiagram.affine(system("G2")).nodes

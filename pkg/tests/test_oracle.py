import itertools
from fractions import Fraction

import pytest

from hwface import facecalc as fc
from hwface.errors import InputError, UnsupportedAssumptionError
from hwface.modulespec import make_spec, preset
from hwface.oracle import (
    WeightSet,
    brute_stabilizer,
    cross_validate,
    default_depth,
    difference_rank,
    face_hull,
    maximizer_subset,
    module_weights_truncated,
    orthogonal_decomposition,
    polyhedron_vertices,
    rho_sum,
    simple_module_weights,
    standard_parabolic_subset,
)
from hwface.rootsystem import Weight, highest_root, system
from hwface.weyl import orbit

from helpers import W, nodes


def adjoint_of(name):
    rs = system(name)
    return preset("finiteDimensional", rs, highest_root(rs, rs.nodes))


def full(spec):
    return module_weights_truncated(spec)


def test_simple_module_weights_examples():
    rs = system("A2")
    lam = W(2, Fraction(1, 3))
    assert simple_module_weights(rs, frozenset(), lam).weight_set() == {lam}
    adj = simple_module_weights(rs, rs.nodes, W(1, 1))
    assert len(adj) == 7
    assert W(0, 0) in adj
    a1 = simple_module_weights(system("A1"), nodes(1), W(3))
    assert a1.weight_set() == {W(3), W(1), W(-1), W(-3)}


@pytest.mark.parametrize("name,lam,size", [
    ("A2", (1, 0), 3), ("A2", (2, 0), 6), ("A2", (1, 1), 7), ("B2", (1, 0), 5),
    ("B2", (0, 1), 4), ("G2", (1, 0), 7), ("G2", (0, 1), 13), ("A3", (0, 1, 0), 6),
    ("B3", (0, 0, 1), 8), ("C3", (1, 0, 0), 6),
])
def test_weight_set_sizes(name, lam, size):
    # sizes of the weight sets of small simple modules, counted by hand
    rs = system(name)
    assert len(simple_module_weights(rs, rs.nodes, Weight(lam))) == size


def test_simple_module_weights_needs_integral():
    with pytest.raises(InputError):
        simple_module_weights(system("A2"), nodes(1), W(Fraction(1, 2), 0))


def test_truncated_examples():
    rs = system("A2")
    fin = preset("finiteDimensional", rs, [1, 1])
    assert module_weights_truncated(fin, 1).depth is None
    spec = make_spec(rs, [0, 5], nodes(1))
    WS = module_weights_truncated(spec, 3)
    lam, a1, a2 = spec.weight, rs.alpha(0), rs.alpha(1)
    assert lam - a2 in WS and lam - a1 - a2 in WS
    assert lam - a1 not in WS and lam - a1 * 2 not in WS
    verma = preset("verma", rs, [Fraction(1, 2), 3])
    assert len(module_weights_truncated(verma, 2)) == 6


def test_truncated_rejects_negative_depth():
    with pytest.raises(InputError):
        module_weights_truncated(preset("verma", system("A2"), [1, 1]), -1)


@pytest.mark.parametrize("spec", [
    make_spec(system("A2"), [0, 5], nodes(1)),
    preset("verma", system("B2"), [1, Fraction(-1, 2)]),
    preset("parabolicVerma", system("G2"), [1, 0], nodes(2)),
])
def test_truncation_is_a_slice(spec):
    for d in range(0, 7):
        a, b = module_weights_truncated(spec, d), module_weights_truncated(spec, d + 1)
        assert a.offsets <= b.offsets
        assert {nu for nu in b.offsets if sum(nu) <= d} == a.offsets


def test_standard_parabolic_subset():
    spec = adjoint_of("A2")
    WS = full(spec)
    assert standard_parabolic_subset(WS, spec.nodes).offsets == WS.offsets
    assert standard_parabolic_subset(WS, frozenset()).weight_set() == {spec.weight}
    rs = spec.system
    assert standard_parabolic_subset(WS, nodes(1)).weight_set() == {W(1, 1), W(1, 1) - rs.alpha(0)}


def test_maximizer_subset():
    spec = adjoint_of("A2")
    WS = full(spec)
    rs = spec.system
    assert maximizer_subset(WS, W(0, 0)).offsets == WS.offsets
    assert maximizer_subset(WS, rs.omega(1)).offsets == standard_parabolic_subset(WS, nodes(1)).offsets
    assert maximizer_subset(WS, W(1, 1)).weight_set() == {spec.weight}


def test_rho_sum():
    spec = adjoint_of("A2")
    WS = full(spec)
    rs = spec.system
    assert rho_sum(standard_parabolic_subset(WS, frozenset())) == spec.weight
    assert rho_sum(WS) == W(0, 0)
    assert rho_sum(standard_parabolic_subset(WS, nodes(1))) == W(1, 1) + rs.alpha(1)
    with pytest.raises(InputError):
        rho_sum(module_weights_truncated(preset("verma", rs, [1, 1]), 2))


def test_brute_stabilizer_examples():
    rho = preset("finiteDimensional", system("A2"), [1, 1])
    assert list(brute_stabilizer(rho, frozenset()).values()) == [()]
    adj = adjoint_of("A2")
    assert len(brute_stabilizer(adj, nodes(1))) == 2
    assert len(brute_stabilizer(adj, adj.nodes)) == 6


def test_brute_stabilizer_needs_finite_face():
    spec = make_spec(system("A2"), [0, 5], nodes(1))
    with pytest.raises(InputError):
        brute_stabilizer(spec, nodes(2))


def test_face_hull_root_polytopes():
    assert face_hull(full(adjoint_of("A2"))).f_vector == (6, 6, 1)
    assert face_hull(full(adjoint_of("A3"))).f_vector == (12, 24, 14, 1)
    assert face_hull(full(adjoint_of("B3"))).f_vector[0] == 12


def test_polyhedron_vertices_infinite_face():
    spec = make_spec(system("A2"), [0, 5], nodes(1))
    assert polyhedron_vertices(spec, spec.nodes) == {spec.weight}
    assert polyhedron_vertices(spec, nodes(2)) == {spec.weight}


def test_orthogonal_decomposition():
    rs = system("A1xA1")
    parts = orthogonal_decomposition(rs, [rs.alpha(0), -rs.alpha(0), rs.alpha(1)])
    assert sorted(map(len, parts)) == [1, 2]
    a2 = system("A2")
    assert len(orthogonal_decomposition(a2, orbit(a2, a2.nodes, W(1, 1)).elements)) == 1


def test_default_depth():
    spec = make_spec(system("A2"), [0, 5], nodes(1))
    assert default_depth(spec) == 4
    assert default_depth(preset("finiteDimensional", system("A2"), [1, 1])) == 2 * 4 + 4


def test_cross_validate_sl3_parabolic_verma():
    rep = cross_validate(make_spec(system("A2"), [0, 5], nodes(1)), 6)
    assert rep.ok
    assert len([p for p in rep.pairs if p["relation"] == "equal"]) == 16


def test_cross_validate_adjoint_exact():
    rep = cross_validate(adjoint_of("A2"))
    assert rep.exact and rep.ok
    assert rep.summary()["agree-up-to-depth"] == 0


def test_cross_validate_rank_one_verma():
    rep = cross_validate(preset("verma", system("A1"), [Fraction(1, 3)]), 5)
    assert rep.ok


def test_cross_validate_refuses_without_hull():
    with pytest.raises(UnsupportedAssumptionError):
        cross_validate(make_spec(system("A3"), [0, 1, 0], nodes(2)))


FINITE = [("A1", (2,)), ("A2", (1, 0)), ("A2", (0, 2)), ("A2", (1, 1)), ("B2", (1, 0)), ("B2", (0, 1)),
          ("G2", (1, 0)), ("G2", (0, 1)), ("A3", (1, 0, 1)), ("B3", (0, 1, 0)), ("C3", (1, 0, 0)),
          ("A2xA1", (1, 0, 1))]


@pytest.mark.parametrize("name,lam", FINITE)
def test_maximizers_are_standard_parabolic_sets(name, lam):
    rs = system(name)
    spec = preset("finiteDimensional", rs, list(lam))
    WS = full(spec)
    for J in fc.all_subsets(rs.nodes):
        phi = Weight([0 if i in J else 1 for i in range(rs.rank)])
        assert maximizer_subset(WS, phi).offsets == standard_parabolic_subset(WS, J).offsets


@pytest.mark.parametrize("name,lam", FINITE)
def test_rho_sum_equivalences(name, lam):
    rs = system(name)
    spec = preset("finiteDimensional", rs, list(lam))
    WS = full(spec)
    subs = fc.all_subsets(rs.nodes)
    sets = {J: standard_parabolic_subset(WS, J) for J in subs}
    for J, Jp in itertools.product(subs, repeat=2):
        same = sets[J].offsets == sets[Jp].offsets
        assert same == (rho_sum(sets[J]) == rho_sum(sets[Jp]))
        assert same == (orbit(rs, J, spec.weight).elements == orbit(rs, Jp, spec.weight).elements)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_simple_root_below_lambda(name):
    rs = system(name)
    for lam in itertools.product([0, 1, Fraction(-1, 2)], repeat=rs.rank):
        spec = preset("simple", rs, list(lam))
        WS = module_weights_truncated(spec, 2)
        for j in rs.nodes:
            assert (spec.weight - rs.alpha(j) in WS) == (j in spec.support)


def test_difference_rank():
    assert difference_rank(full(adjoint_of("A2"))) == 2
    spec = make_spec(system("A2"), [0, 5], nodes(1))
    assert difference_rank(standard_parabolic_subset(module_weights_truncated(spec), nodes(2))) == 1

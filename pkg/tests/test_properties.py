"""Randomized structural properties of the face calculus."""
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hwface import facecalc as fc
from hwface.dynkin import is_orthogonal
from hwface.modulespec import make_spec
from hwface.oracle import difference_rank, face_hull, module_weights_truncated, standard_parabolic_subset
from hwface.rootsystem import system
from hwface.weyl import orbit

DIAGRAMS = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1", "A2xA1", "A4", "B4", "C4", "D4", "F4",
            "A2xA2", "B2xG2", "D5", "A1xA1xA1xA1"]
VALUES = [0, 0, 1, 2, 3, Fraction(-1, 2), Fraction(1, 3), -2]


@st.composite
def specs(draw, diagrams=DIAGRAMS, hull_only=False):
    rs = system(draw(st.sampled_from(diagrams)))
    lam = [draw(st.sampled_from(VALUES)) for _ in range(rs.rank)]
    probe = make_spec(rs, lam, [])
    JV = frozenset(i for i in sorted(probe.j_lambda) if draw(st.booleans()))
    spec = make_spec(rs, lam, JV)
    assume(spec.polyhedral_hull or not hull_only)
    return spec


@st.composite
def specs_with_subset(draw, **kw):
    spec = draw(specs(**kw))
    J = frozenset(i for i in range(spec.rank) if draw(st.booleans()))
    return spec, J


@st.composite
def finite_specs(draw, diagrams=("A1", "A2", "B2", "G2", "A3", "B3", "C3", "A2xA1", "A1xA1xA1")):
    rs = system(draw(st.sampled_from(diagrams)))
    lam = [draw(st.sampled_from([0, 0, 1, 2])) for _ in range(rs.rank)]
    return make_spec(rs, lam, rs.nodes)


PROP = settings(max_examples=150, deadline=None)


@PROP
@given(specs_with_subset())
def test_partition_is_a_partition(sj):
    spec, J = sj
    blocks = fc.partition(spec, J).blocks()
    assert sum(map(len, blocks)) == spec.rank
    assert frozenset().union(*blocks) == spec.nodes
    p = fc.partition(spec, J)
    assert p.J2 | p.J3 | p.J4 | p.J5 == J
    assert p.J3 | p.J4 | p.J5 | p.J6 == spec.integrable


@PROP
@given(specs_with_subset())
def test_fiber_is_an_interval(sj):
    spec, J = sj
    lo, hi = fc.fiber_interval(spec, J)
    assert lo <= J <= hi
    assert fc.fiber_interval(spec, lo) == (lo, hi)
    assert fc.fiber_interval(spec, hi) == (lo, hi)
    for K in fc.all_subsets(spec.nodes):
        assert fc.faces_equal(spec, J, K) == (lo <= K <= hi)


@PROP
@given(specs_with_subset())
def test_extremes_are_idempotent(sj):
    spec, J = sj
    J2 = J - spec.integrable
    lo, hi = fc.j_min(spec, J), fc.j_max(spec, J)
    assert fc.j_min(spec, lo | J2) == lo
    assert fc.j_max(spec, hi | J2) == hi
    assert fc.j_min(spec, hi | J2) == lo
    assert fc.j_max(spec, lo | J2) == hi


@settings(max_examples=60, deadline=None)
@given(specs(diagrams=["A1", "A2", "B2", "G2", "A3", "B3", "A2xA1", "A1xA1xA1"]))
def test_inclusion_is_a_preorder(spec):
    subs = fc.all_subsets(spec.nodes)
    inc = {(J, K): fc.face_includes(spec, J, K) for J in subs for K in subs}
    for J in subs:
        assert inc[J, J]
        for K in subs:
            assert (inc[J, K] and inc[K, J]) == fc.faces_equal(spec, J, K)
            if inc[J, K]:
                assert all(inc[J, L] for L in subs if inc[K, L])


@PROP
@given(specs())
def test_fibers_are_singletons_iff_integrable_nodes_are_supported(spec):
    injective = all(
        fc.fiber_interval(spec, J)[0] == fc.fiber_interval(spec, J)[1] for J in fc.all_subsets(spec.nodes)
    )
    assert injective == (spec.integrable <= spec.support)


@PROP
@given(specs_with_subset())
def test_free_part_is_orthogonal(sj):
    spec, J = sj
    rs = spec.system
    lo, hi = fc.j_min(spec, J), fc.j_max(spec, J)
    free = hi - lo
    assert free <= spec.lam_perp
    assert is_orthogonal(rs, free, lo)
    assert is_orthogonal(rs, free, J - spec.integrable)


@PROP
@given(specs(hull_only=True))
def test_f_polynomial_shape(spec):
    f = fc.f_polynomial(spec)
    dim, _ = fc.dimension_and_hull(spec, spec.nodes)
    assert f.degree == dim
    assert f.coeffs[-1] == 1
    assert fc.vertex_count(spec, frozenset()) == 1
    assert f.coeffs[0] == fc.vertex_count(spec, spec.nodes)
    assert all(u <= c for u, c in zip(f.unbounded, f.coeffs))
    if spec.is_finite_dimensional:
        # Euler relation for polytopes
        assert sum((-1) ** d * c for d, c in enumerate(f.coeffs)) == 1
        assert not any(f.unbounded)


@settings(max_examples=40, deadline=None)
@given(finite_specs())
def test_f_polynomial_matches_hull(spec):
    WS = module_weights_truncated(spec)
    hull = face_hull(WS)
    assert fc.f_polynomial(spec).coeffs == hull.f_vector
    for J in fc.all_subsets(spec.nodes):
        assert fc.dimension_and_hull(spec, J)[0] == difference_rank(standard_parabolic_subset(WS, J))


@PROP
@given(specs(hull_only=True))
def test_facet_iff_codimension_one(spec):
    dim, _ = fc.dimension_and_hull(spec, spec.nodes)
    assert dim == len(fc.facet_admissible(spec))
    for i in spec.nodes:
        d_i, _ = fc.dimension_and_hull(spec, spec.nodes - {i})
        assert fc.is_facet(spec, i) == (d_i == dim - 1)


@PROP
@given(specs_with_subset())
def test_dictionary_brackets_subset(sj):
    spec, J = sj
    boundary, closure = fc.cm_dictionary(spec, J, affine=False)
    I, JV = spec.nodes, spec.integrable
    rest = I - J
    # complements of the two sets are the ends of the fiber of I \ J, up to the non-integrable part
    assert fc.fiber_interval(spec, rest) == ((I - closure) | (rest - JV), (I - boundary) | (rest - JV))
    if JV == I:
        assert boundary <= J <= closure


@PROP
@given(specs(hull_only=True))
def test_halfspaces_contain_vertices(spec):
    rs = spec.system
    lam = spec.require_weight()
    hs = fc.halfspace_representation(spec)
    for mu in orbit(rs, spec.integrable, lam).elements:
        assert all(h.contains(rs, lam, mu) for h in hs)
    minimal = fc.halfspace_representation(spec, minimal=True)
    assert {(h.node, h.normal) for h in minimal} <= {(h.node, h.normal) for h in hs}

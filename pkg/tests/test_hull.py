import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwface.errors import InputError
from hwface.hull import affine_rank, hull_face_lattice, is_vertex

HEXAGON = [(1, 1), (-1, 2), (2, -1), (-1, -1), (1, -2), (-2, 1)]


def test_hexagon():
    lat = hull_face_lattice(HEXAGON)
    assert lat.f_vector == (6, 6, 1)
    assert lat.dimension == 2


def test_triangle_and_segment():
    assert hull_face_lattice([(0, 0), (1, 0), (0, 1)]).f_vector == (3, 3, 1)
    assert hull_face_lattice([(0, 0), (Fraction(1, 2), 0)]).f_vector == (2, 1)
    assert hull_face_lattice([(3, 3)]).f_vector == (1,)


def test_collinear_and_interior_points_dropped():
    pts = [(0, 0), (2, 0), (1, 0), (0, 2), (2, 2), (1, 1), (0, 1)]
    lat = hull_face_lattice(pts)
    assert lat.f_vector == (4, 4, 1)
    assert sorted(pts[v] for v in lat.vertices) == [(0, 0), (0, 2), (2, 0), (2, 2)]


def test_planar_set_in_space():
    pts = [(x, y, x + y) for x, y in itertools.product(range(3), repeat=2)]
    assert hull_face_lattice(pts).f_vector == (4, 4, 1)


def test_cube():
    cube = list(itertools.product((0, 1), repeat=3)) + [(Fraction(1, 2),) * 3, (0, Fraction(1, 2), 0)]
    lat = hull_face_lattice(cube)
    assert lat.f_vector == (8, 12, 6, 1)
    assert all(len(f) == 4 for f in lat.facets)


def test_octahedron_and_cuboctahedron():
    octa = [tuple(s * (i == k) for k in range(3)) for i in range(3) for s in (1, -1)]
    assert hull_face_lattice(octa).f_vector == (6, 12, 8, 1)
    cubo = {p for p in itertools.product((-1, 0, 1), repeat=3) if sum(map(abs, p)) == 2}
    assert hull_face_lattice(sorted(cubo)).f_vector == (12, 24, 14, 1)


def test_dimension_four_refused():
    pts = [tuple(int(i == k) for k in range(4)) for i in range(4)] + [(0, 0, 0, 0)]
    with pytest.raises(InputError):
        hull_face_lattice(pts)


def test_is_vertex():
    pts = [(0, 0), (2, 0), (0, 2), (1, 1)]
    assert is_vertex(pts, 0)
    assert not is_vertex(pts, 3)


def test_affine_rank():
    assert affine_rank([(1, 1, 1)]) == 0
    assert affine_rank([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) == 1
    assert affine_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3


points3 = st.lists(st.tuples(*[st.integers(-4, 4)] * 3), min_size=5, max_size=25, unique=True)


@settings(max_examples=80, deadline=None)
@given(points3)
def test_random_hulls_are_consistent(pts):
    if affine_rank(pts) < 3:
        return
    lat = hull_face_lattice(pts)
    v, e, f, _ = lat.f_vector
    assert v - e + f == 2
    # every input point lies inside; every non-vertex is a convex combination
    # shown indirectly: adding it back changes nothing
    verts = [pts[i] for i in lat.vertices]
    again = hull_face_lattice(verts)
    assert again.f_vector == lat.f_vector

"""Exact convex hulls of rational point sets of affine dimension at most 3."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import InputError, InvariantViolation

__all__ = ["HullFaceLattice", "hull_face_lattice", "affine_rank", "is_vertex"]


def _reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine span of ``points``."""
    pts = [[Fraction(x) for x in p] for p in points]
    if len(pts) <= 1:
        return 0
    base = pts[0]
    dim = len(base)
    # incremental echelon basis: pivot column -> row with a 1 there
    basis: dict[int, list[Fraction]] = {}
    for p in pts[1:]:
        v = [a - b for a, b in zip(p, base)]
        for c, row in basis.items():
            if v[c]:
                f = v[c]
                v = [x - f * y for x, y in zip(v, row)]
        c = next((k for k, x in enumerate(v) if x), None)
        if c is None:
            continue
        v = [x / v[c] for x in v]
        for k, row in basis.items():
            if row[c]:
                f = row[c]
                basis[k] = [x - f * y for x, y in zip(row, v)]
        basis[c] = v
        if len(basis) == dim:
            break
    return len(basis)


def _coordinatize(points) -> tuple[int, list[tuple[int, ...]]]:
    """Integer coordinates of ``points`` in their own affine span."""
    pts = [[Fraction(x) for x in p] for p in points]
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts]
    _, piv = _reduce([d for d in diffs if any(d)] or [[Fraction(0)] * len(base)])
    # in reduced echelon form the pivot coordinates determine a vector of the span
    proj = [[d[c] for c in piv] for d in diffs]
    den = 1
    for v in proj:
        for x in v:
            den = lcm(den, x.denominator)
    return len(piv), [tuple(int(x * den) for x in v) for v in proj]


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull2(idx: list[int], P) -> list[int]:
    """Strict convex hull (no collinear points) in counter-clockwise order."""
    idx = sorted(set(idx), key=lambda i: P[i])
    uniq = []
    for i in idx:
        if not uniq or P[uniq[-1]] != P[i]:
            uniq.append(i)
    if len(uniq) <= 2:
        return uniq
    lower, upper = [], []
    for i in uniq:
        while len(lower) >= 2 and _cross2(P[lower[-2]], P[lower[-1]], P[i]) <= 0:
            lower.pop()
        lower.append(i)
    for i in reversed(uniq):
        while len(upper) >= 2 and _cross2(P[upper[-2]], P[upper[-1]], P[i]) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def _orient(P, a, b, c, d):
    """Positive when ``d`` lies on the outer side of the oriented triangle ``abc``."""
    return _dot(_cross3(_sub(P[b], P[a]), _sub(P[c], P[a])), _sub(P[d], P[a]))


def _hull3_triangles(P) -> list[tuple[int, int, int]]:
    n = len(P)
    a = 0
    b = next(i for i in range(n) if P[i] != P[a])
    c = next(i for i in range(n) if any(_cross3(_sub(P[b], P[a]), _sub(P[i], P[a]))))
    d = next(i for i in range(n) if _orient(P, a, b, c, i) != 0)
    if _orient(P, a, b, c, d) > 0:
        b, c = c, b
    faces = {(a, b, c), (a, d, b), (b, d, c), (c, d, a)}
    for p in range(n):
        if p in (a, b, c, d):
            continue
        visible = [f for f in faces if _orient(P, *f, p) > 0]
        if not visible:
            continue
        vis_edges = set()
        for f in visible:
            vis_edges |= {(f[0], f[1]), (f[1], f[2]), (f[2], f[0])}
        horizon = [(u, v) for (u, v) in vis_edges if (v, u) not in vis_edges]
        faces.difference_update(visible)
        faces.update((u, v, p) for (u, v) in horizon)
    return sorted(faces)


@dataclass(frozen=True)
class HullFaceLattice:
    """Face data of a convex hull.

    Vertices, edges and facets refer to indices of the input point list.
    ``f_vector[k]`` counts ``k``-dimensional faces, ending with the polytope
    itself.
    """

    dimension: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    facets: tuple[tuple[int, ...], ...]
    f_vector: tuple[int, ...]


def hull_face_lattice(points: Sequence[Sequence]) -> HullFaceLattice:
    """Exact hull of a nonempty finite point set of affine dimension <= 3."""
    points = list(points)
    if not points:
        raise InputError("hull of an empty point set")
    dim, P = _coordinatize(points)
    n = len(P)
    if dim > 3:
        raise InputError(f"hull oracle handles affine dimension <= 3, got {dim}")
    if dim == 0:
        return HullFaceLattice(0, (0,), (), ((0,),), (1,))
    if dim == 1:
        lo = min(range(n), key=lambda i: P[i])
        hi = max(range(n), key=lambda i: P[i])
        return HullFaceLattice(1, (lo, hi), ((lo, hi),), ((lo,), (hi,)), (2, 1))
    if dim == 2:
        poly = _hull2(list(range(n)), P)
        edges = tuple(tuple(sorted((poly[k], poly[(k + 1) % len(poly)]))) for k in range(len(poly)))
        return HullFaceLattice(2, tuple(sorted(poly)), tuple(sorted(edges)), tuple(sorted(edges)), (len(poly), len(poly), 1))

    tris = _hull3_triangles(P)
    planes = {}
    for t in tris:
        nrm = _cross3(_sub(P[t[1]], P[t[0]]), _sub(P[t[2]], P[t[0]]))
        g = gcd(*nrm)
        nrm = tuple(x // g for x in nrm)
        planes[(nrm, _dot(nrm, P[t[0]]))] = nrm
    facets, edges = [], {}
    for (nrm, off), _ in sorted(planes.items()):
        vals = [_dot(nrm, p) for p in P]
        if max(vals) != off:
            raise InvariantViolation("hull facet plane is not supporting")
        on = [i for i in range(n) if vals[i] == off]
        drop = max(range(3), key=lambda k: abs(nrm[k]))
        Q = {i: tuple(P[i][k] for k in range(3) if k != drop) for i in on}
        poly = _hull2(on, Q)
        if len(poly) < 3:
            raise InvariantViolation("degenerate hull facet")
        facets.append(tuple(sorted(poly)))
        for k in range(len(poly)):
            e = tuple(sorted((poly[k], poly[(k + 1) % len(poly)])))
            edges[e] = edges.get(e, 0) + 1
    if any(c != 2 for c in edges.values()):
        raise InvariantViolation("hull edge not shared by exactly two facets")
    verts = sorted({v for f in facets for v in f})
    fv = (len(verts), len(edges), len(facets), 1)
    if fv[0] - fv[1] + fv[2] != 2:
        raise InvariantViolation(f"Euler relation fails for f-vector {fv}")
    return HullFaceLattice(3, tuple(verts), tuple(sorted(edges)), tuple(sorted(facets)), fv)


def is_vertex(points: Sequence[Sequence], k: int) -> bool:
    """Whether ``points[k]`` is a vertex of the hull of ``points``."""
    lat = hull_face_lattice(points)
    target = tuple(Fraction(x) for x in points[k])
    return any(tuple(Fraction(x) for x in points[v]) == target for v in lat.vertices)

"""Closed-form calculus of standard parabolic faces.

For a highest weight module described by a :class:`~hwface.modulespec.ModuleSpec`
and a node set ``J``, the weights reachable from ``lambda`` through simple roots
in ``J`` span a face of the weight hull.  Everything here is computed from the
Dynkin diagram, the support of ``lambda`` and the integrable set ``J(V)``.
Every formula with two known closed forms evaluates both and raises
:class:`~hwface.errors.InvariantViolation` if they differ.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .dynkin import ExtendedDiagram, components, extended_component_containing, is_orthogonal, nodeset
from .errors import InputError, InvariantViolation, ResourceError, UnsupportedAssumptionError
from .modulespec import ModuleSpec, validate
from .rootsystem import RootSystem, Weight, highest_root, support
from .weyl import (
    WeylWord,
    apply_word,
    coset_representatives,
    longest_image,
    orbit,
    parabolic_index,
)

#: largest rank accepted by the exhaustive subset sweep
SWEEP_CAP = 20

__all__ = [
    "SixPartition",
    "FaceReport",
    "HalfSpace",
    "FPolynomial",
    "partition",
    "j_min",
    "j_max",
    "faces_equal",
    "fiber_interval",
    "face_includes",
    "conjugate_faces_equal",
    "dimension_and_hull",
    "stabilizer",
    "vertex_count",
    "f_polynomial",
    "coordinate_face_max",
    "is_facet",
    "facet_admissible",
    "halfspace_representation",
    "barycenter_data",
    "longest_weights",
    "i_lambda_set",
    "j3_by_witness",
    "cm_dictionary",
    "lcl_overline",
    "lcl_f_polynomial",
    "same_formulas_across_support",
    "face_report",
    "all_subsets",
]


def all_subsets(nodes: Iterable[int]) -> list[frozenset[int]]:
    nodes = sorted(nodes)
    return [frozenset(c) for k in range(len(nodes) + 1) for c in combinations(nodes, k)]


def _nodes_perp(rs: RootSystem, X: Iterable[int]) -> frozenset[int]:
    """``X^perp`` for a node set: nodes orthogonal to every ``alpha_x``."""
    X = list(X)
    return frozenset(i for i in rs.nodes if all(rs.cartan[i][x] == 0 for x in X))


def _J(spec: ModuleSpec, J) -> frozenset[int]:
    return nodeset(spec.system, J)


@dataclass(frozen=True)
class SixPartition:
    J1: frozenset[int]
    J2: frozenset[int]
    J3: frozenset[int]
    J4: frozenset[int]
    J5: frozenset[int]
    J6: frozenset[int]

    def blocks(self) -> tuple[frozenset[int], ...]:
        return (self.J1, self.J2, self.J3, self.J4, self.J5, self.J6)


def partition(spec: ModuleSpec, J) -> SixPartition:
    """Split ``I`` into six blocks relative to ``J`` and ``J(V)``.

    ``J3`` collects the components of ``J & J(V)`` meeting ``supp(lambda)``;
    ``J4`` those missing it but linked to ``J \\ J(V)``.
    """
    rs = spec.system
    J = _J(spec, J)
    JV, I = spec.integrable, spec.nodes
    J2 = J - JV
    J3, J4 = set(), set()
    for C in components(rs, J & JV):
        if C & spec.support:
            J3 |= C
        elif not is_orthogonal(rs, C, J2):
            J4 |= C
    J3, J4 = frozenset(J3), frozenset(J4)
    p = SixPartition(I - (J | JV), J2, J3, J4, (J & JV) - J3 - J4, JV - J)
    blocks = p.blocks()
    if sum(map(len, blocks)) != len(I) or frozenset().union(*blocks) != I:
        raise InvariantViolation("six-block partition is not a partition of the nodes")
    return p


def _j_min_by_shift(spec: ModuleSpec, J: frozenset[int]) -> frozenset[int]:
    """Components ``C`` of ``J & J(V)`` with ``pi_C(lambda - mu) != 0`` for some
    ``mu`` in ``{0} | {alpha_j : j in J \\ J(V)}``."""
    rs = spec.system
    JV = spec.integrable
    J2 = J - JV
    out = set()
    for C in components(rs, J & JV):
        hit = bool(C & spec.support)
        if not hit:
            # on i in J(V), lambda(h_i) >= 0 and -a_ij >= 0, so
            # (lambda - alpha_j)(h_i) vanishes iff both terms do
            hit = any(rs.cartan[i][j] != 0 for j in J2 for i in C)
        if hit:
            out |= C
    return frozenset(out)


def j_min(spec: ModuleSpec, J) -> frozenset[int]:
    """Smallest node set giving the same face as ``J`` (its ``J(V)``-part)."""
    J = _J(spec, J)
    p = partition(spec, J)
    a = p.J3 | p.J4
    b = _j_min_by_shift(spec, J)
    if a != b:
        raise InvariantViolation(f"J_min closed forms disagree for J={sorted(J)}: {sorted(a)} vs {sorted(b)}")
    return a


def j_max(spec: ModuleSpec, J) -> frozenset[int]:
    """Largest node set giving the same face as ``J`` (its ``J(V)``-part)."""
    rs = spec.system
    J = _J(spec, J)
    JV = spec.integrable
    p = partition(spec, J)
    jmin = j_min(spec, J)
    free = spec.lam_perp & _nodes_perp(rs, jmin) & _nodes_perp(rs, p.J2)
    a = (J & JV) | (p.J6 & free)
    b = jmin | (JV & free)
    if a != b:
        raise InvariantViolation(f"J_max closed forms disagree for J={sorted(J)}: {sorted(a)} vs {sorted(b)}")
    return a


def faces_equal(spec: ModuleSpec, J, Jp) -> bool:
    J, Jp = _J(spec, J), _J(spec, Jp)
    JV = spec.integrable
    if J - JV != Jp - JV:
        return False
    return j_min(spec, J) <= (Jp & JV) <= j_max(spec, J)


def fiber_interval(spec: ModuleSpec, J) -> tuple[frozenset[int], frozenset[int]]:
    """``(lo, hi)`` such that the node sets giving the same face as ``J`` are
    exactly those between ``lo`` and ``hi``."""
    J = _J(spec, J)
    J2 = J - spec.integrable
    return j_min(spec, J) | J2, j_max(spec, J) | J2


def face_includes(spec: ModuleSpec, J, Jp) -> bool:
    """Whether the face of ``J`` is contained in the face of ``Jp``."""
    J, Jp = _J(spec, J), _J(spec, Jp)
    JV = spec.integrable
    return (J - JV) <= (Jp - JV) and j_min(spec, J) <= j_min(spec, Jp)


def _check_word(spec: ModuleSpec, w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    bad = [i for i in w if not (isinstance(i, int) and i in spec.integrable)]
    if bad:
        raise InputError(f"word letters must be integrable nodes, got {[b + 1 if isinstance(b, int) else b for b in bad]}")
    return w


def conjugate_faces_equal(spec: ModuleSpec, w: Sequence[int], J, wp: Sequence[int], Jp) -> bool:
    """Whether ``w`` applied to the face of ``J`` equals ``wp`` applied to that of ``Jp``.

    The element ``w^-1 wp`` is tested for membership in ``W_{J_max}`` by
    checking that it fixes ``omega_i`` for every ``i`` in ``J(V) \\ J_max``.
    """
    w, wp = _check_word(spec, w), _check_word(spec, wp)
    if not faces_equal(spec, J, Jp):
        return False
    rs = spec.system
    u = tuple(reversed(w)) + wp
    for i in spec.integrable - j_max(spec, J):
        om = rs.omega(i)
        if apply_word(rs, u, om) != om:
            return False
    return True


def dimension_and_hull(spec: ModuleSpec, J) -> tuple[int, frozenset[int]]:
    """Dimension of the face and the simple roots spanning its affine hull."""
    J = _J(spec, J)
    basis = j_min(spec, J) | (J - spec.integrable)
    return len(basis), basis


def stabilizer(spec: ModuleSpec, J) -> tuple[frozenset[int], frozenset[int]]:
    """``(J_min, J_max \\ J_min)``: the stabilizer ``W_{J_max}`` splits as a
    product, the second factor fixing the face pointwise."""
    lo, hi = j_min(spec, J), j_max(spec, J)
    return lo, hi - lo


def _require_hull(spec: ModuleSpec):
    if not spec.polyhedral_hull:
        raise UnsupportedAssumptionError(
            "this operation needs the polyhedral-hull assumption; set polyhedralHull or use a preset"
        )


def vertex_count(spec: ModuleSpec, J) -> int:
    _require_hull(spec)
    J = _J(spec, J)
    K = J & spec.integrable
    return parabolic_index(spec.system, K, K & spec.lam_perp)


@dataclass(frozen=True)
class FPolynomial:
    """Face-count polynomial; ``coeffs[d]`` counts faces of dimension ``d``.

    ``unbounded[d]`` is the part of ``coeffs[d]`` coming from faces that
    contain a recession direction.
    """

    coeffs: tuple[int, ...]
    unbounded: tuple[int, ...] = ()

    @classmethod
    def from_dict(cls, counts: dict[int, int], unbounded: dict[int, int] | None = None) -> "FPolynomial":
        deg = max((d for d, c in counts.items() if c), default=0)
        coeffs = tuple(counts.get(d, 0) for d in range(deg + 1))
        ub = unbounded or {}
        return cls(coeffs, tuple(ub.get(d, 0) for d in range(deg + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, FPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
                continue
            mono = "t" if d == 1 else f"t^{d}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"


def f_polynomial(spec: ModuleSpec, *, with_groups: bool = False):
    """Face-count polynomial of the weight hull.

    Sweeps every ``J`` and counts each distinct face once, keyed by
    ``(J_max, J \\ J(V))``.  The grouping by ``(J_min, J \\ J(V))`` is
    evaluated too and must produce the same polynomial.
    """
    _require_hull(spec)
    rs = spec.system
    if rs.rank > SWEEP_CAP:
        raise ResourceError(f"subset sweep limited to rank {SWEEP_CAP}, got {rs.rank}")
    JV = spec.integrable
    by_max: dict = {}
    by_min: dict = {}
    for J in all_subsets(rs.nodes):
        lo, hi = j_min(spec, J), j_max(spec, J)
        J2 = J - JV
        dim = len(lo) + len(J2)
        idx = parabolic_index(rs, JV, hi)
        by_max.setdefault((hi, J2), (dim, idx))
        by_min.setdefault((lo, J2), (dim, idx))
    if len(by_max) != len(by_min):
        raise InvariantViolation("J_min and J_max groupings count different numbers of faces")

    def collect(groups):
        counts, unb = defaultdict(int), defaultdict(int)
        for (_, J2), (dim, idx) in groups.items():
            counts[dim] += idx
            if J2:
                unb[dim] += idx
        return FPolynomial.from_dict(counts, unb)

    fa, fb = collect(by_max), collect(by_min)
    if fa != fb or fa.unbounded != fb.unbounded:
        raise InvariantViolation(f"f-polynomial groupings disagree: {fa} vs {fb}")
    if with_groups:
        return fa, by_max
    return fa


def facet_admissible(spec: ModuleSpec) -> frozenset[int]:
    """``I_min | (I \\ J(V))``."""
    return j_min(spec, spec.nodes) | (spec.nodes - spec.integrable)


def coordinate_face_max(spec: ModuleSpec, i: int) -> frozenset[int]:
    """``J_max`` of the coordinate face ``I \\ {i}``."""
    (i,) = _J(spec, [i])
    JV = spec.integrable
    out = JV - {i} if i in facet_admissible(spec) else JV
    other = j_max(spec, spec.nodes - {i})
    if out != other:
        raise InvariantViolation(f"coordinate face maximum for node {i + 1}: {sorted(out)} vs {sorted(other)}")
    return out


def is_facet(spec: ModuleSpec, i: int) -> bool:
    """Whether the coordinate face ``I \\ {i}`` is a facet."""
    (i,) = _J(spec, [i])
    if i not in facet_admissible(spec):
        return False
    return j_min(spec, spec.nodes - {i}) == j_min(spec, spec.nodes) - {i}


@dataclass(frozen=True)
class HalfSpace:
    """The image under ``w`` of ``{mu : (lambda - mu, omega_node) >= 0}``.

    Written out, ``{mu : (mu, normal) <= (lambda, omega_node)}`` with
    ``normal = w(omega_node)``; the bound does not depend on ``w`` because
    the form is ``W``-invariant.
    """

    node: int
    word: WeylWord
    normal: Weight

    def rhs(self, rs: RootSystem, lam: Weight) -> Fraction:
        return rs.inner(lam, rs.omega(self.node))

    def slack(self, rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
        return self.rhs(rs, lam) - rs.inner(mu, self.normal)

    def contains(self, rs: RootSystem, lam: Weight, mu: Weight) -> bool:
        return self.slack(rs, lam, mu) >= 0


def halfspace_representation(spec: ModuleSpec, minimal: bool = False) -> list[HalfSpace]:
    """Half-spaces cutting out the weight hull.

    With ``minimal`` only facet nodes contribute and the list is irredundant.
    The normals do not depend on ``lambda``; see :class:`HalfSpace` for the
    bound.
    """
    _require_hull(spec)
    rs = spec.system
    nodes = sorted(spec.nodes)
    if minimal:
        nodes = [i for i in nodes if is_facet(spec, i)]
    out = []
    for i in nodes:
        K = coordinate_face_max(spec, i)
        for w in coset_representatives(rs, spec.integrable, K):
            out.append(HalfSpace(i, w, apply_word(rs, w, rs.omega(i))))
    return out


def barycenter_data(spec: ModuleSpec, J) -> tuple[Weight | None, frozenset[int]]:
    """Barycenter of the vertices of the finite part of the face, and the
    nodes along which it is strictly positive among ``J_lambda``."""
    J = _J(spec, J)
    K = J & spec.integrable
    cone = spec.j_lambda - j_max(spec, K)
    if spec.weight is None:
        return None, cone
    orb = orbit(spec.system, K, spec.weight)
    total = Weight.zero(spec.rank)
    for mu in orb.elements:
        total = total + mu
    return total / len(orb), cone


def longest_weights(spec: ModuleSpec, J):
    """``(W_J(lambda), w_0^J(lambda))`` when ``J`` lies in ``J(V)``, else ``None``."""
    lam = spec.require_weight()
    J = _J(spec, J)
    if not J <= spec.integrable:
        return None
    rs = spec.system
    return orbit(rs, J, lam).elements, longest_image(rs, J, lam)


def i_lambda_set(spec: ModuleSpec, mu: Weight) -> frozenset[int]:
    """``{i : (lambda - mu, omega_i) = 0}``."""
    lam = spec.require_weight()
    diff = spec.system.to_root(lam - mu)
    return frozenset(i for i in spec.nodes if diff[i] == 0)


def j3_by_witness(spec: ModuleSpec, J) -> Weight | None:
    """A weight ``mu`` of the top ``wt_{J(V)}`` with ``J = J(V) \\ I_lambda(mu)``,
    or ``None`` if there is none.

    ``w_0^J(lambda)`` is tried first; otherwise the whole top is searched.
    The outcome is checked against the closed-form criterion that every
    component of ``J`` meets ``supp(lambda)``.
    """
    from .oracle import simple_module_weights

    lam = spec.require_weight()
    J = _J(spec, J)
    JV = spec.integrable
    if not J <= JV:
        raise InputError("witness search needs J inside the integrable set")
    expected = partition(spec, J).J3 == J
    rs = spec.system
    quick = longest_image(rs, J, lam)
    if JV - i_lambda_set(spec, quick) == J:
        found = quick
    else:
        top = simple_module_weights(rs, JV, lam)
        found = next((mu for mu in top.weights() if JV - i_lambda_set(spec, mu) == J), None)
    if (found is not None) != expected:
        raise InvariantViolation(f"witness search for J={sorted(J)} disagrees with the component criterion")
    return found


def _is_simple_diagram(rs: RootSystem) -> bool:
    return len(rs.component_nodes) == 1


def _affine_route_ok(spec: ModuleSpec) -> bool:
    rs = spec.system
    if not (_is_simple_diagram(rs) and spec.is_finite_dimensional):
        return False
    return spec.support == support(highest_root(rs, rs.nodes))


def cm_dictionary(spec: ModuleSpec, J, affine: bool | None = None) -> tuple[frozenset[int], frozenset[int]]:
    """``(boundary(J), closure(J))`` with ``boundary = I \\ (I \\ J)_max`` and
    ``closure = I \\ (I \\ J)_min``.

    On a finite-dimensional spec over a simple diagram whose weight has the
    support of the highest root, both sets are also read off the affine
    diagram and compared.  ``affine=True`` demands that second route,
    ``affine=False`` skips it.
    """
    J = _J(spec, J)
    I = spec.nodes
    boundary = I - j_max(spec, I - J)
    closure = I - j_min(spec, I - J)
    ok = _affine_route_ok(spec)
    if affine and not ok:
        raise InputError("the affine route needs a finite-dimensional spec on a simple diagram with the support of the highest root")
    if affine is None:
        affine = ok
    if affine:
        rs = spec.system
        E = ExtendedDiagram.affine(rs)
        part, _ = extended_component_containing(E, J)
        far = frozenset(j for j in J if j not in E.attach and all(rs.cartan[j][p] == 0 for p in part))
        b2, c2 = J - far, I - part
        if (b2, c2) != (boundary, closure):
            raise InvariantViolation(
                f"affine dictionary disagrees for J={sorted(J)}: {sorted(b2)},{sorted(c2)} vs {sorted(boundary)},{sorted(closure)}"
            )
    return boundary, closure


def _require_lcl(spec: ModuleSpec):
    if not (_is_simple_diagram(spec.system) and spec.is_finite_dimensional):
        raise InputError("needs a finite-dimensional spec over a simple diagram")


def _minus_lambda(spec: ModuleSpec) -> ExtendedDiagram:
    # on a finite-dimensional spec every supported node has a positive coordinate
    return ExtendedDiagram.minus_lambda(spec.system, spec.support)


def lcl_overline(spec: ModuleSpec, J) -> frozenset[int]:
    """``I`` minus the base part of the ``-lambda`` component of the extended
    diagram with ``J`` removed."""
    _require_lcl(spec)
    J = _J(spec, J)
    I = spec.nodes
    part, _ = extended_component_containing(_minus_lambda(spec), J)
    out = I - part
    other = I - j_min(spec, I - J)
    if out != other:
        raise InvariantViolation(f"extended-diagram closure disagrees for J={sorted(J)}: {sorted(out)} vs {sorted(other)}")
    return out


def lcl_f_polynomial(spec: ModuleSpec) -> FPolynomial:
    """Face-count polynomial read off the ``-lambda`` extended diagram.

    Each ``J`` whose complement stays connected to ``-lambda`` contributes
    ``[W : W_K] t^{|I \\ J|}`` with ``K`` the union of ``I \\ J`` and the nodes
    orthogonal to ``lambda`` and to ``I \\ J``.
    """
    _require_lcl(spec)
    rs = spec.system
    if rs.rank > SWEEP_CAP:
        raise ResourceError(f"subset sweep limited to rank {SWEEP_CAP}, got {rs.rank}")
    E = _minus_lambda(spec)
    I = spec.nodes
    counts = defaultdict(int)
    for J in all_subsets(I):
        rest = I - J
        part, _ = extended_component_containing(E, J)
        if part != rest:
            continue
        perp = spec.lam_perp & _nodes_perp(rs, rest)
        counts[len(rest)] += parabolic_index(rs, I, rest | perp)
    out = FPolynomial.from_dict(counts)
    other = f_polynomial(spec)
    if out != other:
        raise InvariantViolation(f"extended-diagram f-polynomial {out} differs from {other}")
    return out


def same_formulas_across_support(spec1: ModuleSpec, spec2: ModuleSpec) -> bool:
    """Whether two finite-dimensional specs with equal support share every
    ``J_min`` and ``J_max``."""
    _require_lcl(spec1)
    _require_lcl(spec2)
    if spec1.system != spec2.system:
        raise InputError("specs live over different diagrams")
    if spec1.support != spec2.support:
        raise InputError("specs have different supports")
    return all(
        j_min(spec1, J) == j_min(spec2, J) and j_max(spec1, J) == j_max(spec2, J)
        for J in all_subsets(spec1.nodes)
    )


@dataclass(frozen=True)
class FaceReport:
    J: frozenset[int]
    partition: SixPartition
    jmin: frozenset[int]
    jmax: frozenset[int]
    fiber: tuple[frozenset[int], frozenset[int]]
    dimension: int
    affine_hull_basis: frozenset[int]
    stabilizer: tuple[frozenset[int], frozenset[int]]
    vertex_count: int | None
    is_finite_face: bool
    cone_support: frozenset[int]
    barycenter: Weight | None


def face_report(spec: ModuleSpec, J) -> FaceReport:
    validate(spec)
    J = _J(spec, J)
    dim, basis = dimension_and_hull(spec, J)
    bary, cone = barycenter_data(spec, J)
    return FaceReport(
        J=J,
        partition=partition(spec, J),
        jmin=j_min(spec, J),
        jmax=j_max(spec, J),
        fiber=fiber_interval(spec, J),
        dimension=dim,
        affine_hull_basis=basis,
        stabilizer=stabilizer(spec, J),
        vertex_count=vertex_count(spec, J) if spec.polyhedral_hull else None,
        is_finite_face=J <= spec.integrable,
        cone_support=cone,
        barycenter=bary,
    )

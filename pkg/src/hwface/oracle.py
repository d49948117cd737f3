"""Brute-force weight enumeration used to check the closed-form calculus.

The module ``V`` is modelled by the parabolic Verma module ``M(lambda, J(V))``:
its weights are those of the finite-dimensional ``L_{J(V)}(lambda)`` (the
*top*) shifted down by nonnegative integer combinations of the positive roots
outside ``Phi_{J(V)}``.  Weights are stored as offsets ``nu`` with
``weight = lambda - nu``; ``nu`` is an integer vector in simple-root
coordinates.  A truncated set keeps exactly the offsets of height ``<= depth``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .dynkin import nodeset
from .errors import InputError, ResourceError, UnsupportedAssumptionError
from .hull import HullFaceLattice, affine_rank, hull_face_lattice, is_vertex
from .modulespec import ModuleSpec
from .rootsystem import RootSystem, RootVector, Weight
from .weyl import longest_image, orbit_cap, orbit_with_words

__all__ = [
    "WeightSet",
    "simple_module_weights",
    "module_weights_truncated",
    "standard_parabolic_subset",
    "maximizer_subset",
    "rho_sum",
    "default_depth",
    "hull_face_lattice",
    "face_hull",
    "polyhedron_vertices",
    "difference_rank",
    "brute_stabilizer",
    "pointwise_fixers",
    "orthogonal_decomposition",
    "cross_validate",
    "CrossReport",
]

Offset = tuple


@dataclass(frozen=True)
class WeightSet:
    """Weights ``lambda - nu`` for ``nu`` in ``offsets``.

    ``depth`` is ``None`` for an exact finite set, otherwise the height bound
    of a truncated slice.
    """

    system: RootSystem
    base: Weight
    offsets: frozenset
    depth: int | None = None

    @property
    def truncated(self) -> bool:
        return self.depth is not None

    def __len__(self):
        return len(self.offsets)

    def weight(self, nu: Offset) -> Weight:
        return self.base - self.system.to_weight(RootVector(nu))

    def weights(self) -> list[Weight]:
        return [self.weight(nu) for nu in sorted(self.offsets)]

    def weight_set(self) -> frozenset[Weight]:
        return frozenset(self.weight(nu) for nu in self.offsets)

    def __contains__(self, mu: Weight) -> bool:
        nu = self.system.to_root(self.base - mu)
        if any(x.denominator != 1 for x in nu):
            return False
        return tuple(int(x) for x in nu) in self.offsets


def _int_coords(lam: Weight, K: Iterable[int]) -> dict[int, int]:
    out = {}
    for k in K:
        v = lam[k]
        if v.denominator != 1 or v < 0:
            raise InputError(f"lambda(h_{k + 1}) = {v} is not a nonnegative integer")
        out[k] = int(v)
    return out


def _pairing(rs: RootSystem, lamK: dict[int, int], nu: Offset, k: int) -> int:
    """``(lambda - nu)(h_k)`` for integral ``lambda(h_k)``."""
    row = rs.cartan[k]
    return lamK[k] - sum(row[j] * nu[j] for j in range(len(nu)) if nu[j])


def _reflect_offset(rs, lamK, nu, k):
    c = _pairing(rs, lamK, nu, k)
    if c == 0:
        return nu
    out = list(nu)
    out[k] += c
    return tuple(out)


def _height(nu) -> int:
    return sum(nu)


def simple_module_weights(rs: RootSystem, K: Iterable[int], lam: Weight) -> WeightSet:
    """Weights of the finite-dimensional simple module ``L_K(lambda)`` of the
    Levi factor on ``K``.

    The ``K``-dominant weights ``mu <= lambda`` are found in the box
    ``0 <= lambda - mu <= lambda - w_0^K(lambda)`` and then saturated by
    ``W_K``-orbits.
    """
    K = sorted(nodeset(rs, K))
    lamK = _int_coords(lam, K)
    n = rs.rank
    zero = (0,) * n
    if not K:
        return WeightSet(rs, lam, frozenset([zero]))
    low = rs.to_root(lam - longest_image(rs, K, lam))
    bounds = [int(low[k]) for k in K]
    cap = orbit_cap()
    if math.prod(b + 1 for b in bounds) > cap:
        raise ResourceError(f"dominant-weight box exceeds the enumeration cap of {cap}")
    found: set = set()
    for box in product(*(range(b + 1) for b in bounds)):
        nu = [0] * n
        for k, x in zip(K, box):
            nu[k] = x
        nu = tuple(nu)
        if nu in found or any(_pairing(rs, lamK, nu, k) < 0 for k in K):
            continue
        stack = [nu]
        found.add(nu)
        while stack:
            v = stack.pop()
            for k in K:
                u = _reflect_offset(rs, lamK, v, k)
                if u not in found:
                    found.add(u)
                    if len(found) > cap:
                        raise ResourceError(f"weight set exceeds the enumeration cap of {cap}")
                    stack.append(u)
    return WeightSet(rs, lam, frozenset(found))


def _outside_roots(rs: RootSystem, JV: frozenset[int]) -> list[Offset]:
    return [r for r in rs.positive_roots if any(r[i] for i in range(rs.rank) if i not in JV)]


def default_depth(spec: ModuleSpec) -> int:
    """``2 * height(lambda - w_0^{J(V)} lambda) + 4``."""
    lam = spec.require_weight()
    rs = spec.system
    low = rs.to_root(lam - longest_image(rs, spec.integrable, lam))
    return 2 * int(sum(low)) + 4


def module_weights_truncated(spec: ModuleSpec, depth: int | None = None) -> WeightSet:
    """Weights of ``M(lambda, J(V))`` with offsets of height at most ``depth``.

    When ``J(V) = I`` the set is finite and returned exactly.
    """
    lam = spec.require_weight()
    rs = spec.system
    top = simple_module_weights(rs, spec.integrable, lam)
    R = _outside_roots(rs, spec.integrable)
    if not R:
        return top
    if depth is None:
        depth = default_depth(spec)
    if depth < 0:
        raise InputError("depth must be nonnegative")
    found = {nu for nu in top.offsets if _height(nu) <= depth}
    stack = list(found)
    cap = orbit_cap()
    while stack:
        v = stack.pop()
        hv = _height(v)
        for r in R:
            if hv + _height(r) > depth:
                continue
            u = tuple(a + b for a, b in zip(v, r))
            if u not in found:
                found.add(u)
                if len(found) > cap:
                    raise ResourceError(f"truncated weight set exceeds the enumeration cap of {cap}")
                stack.append(u)
    return WeightSet(rs, lam, frozenset(found), depth)


def standard_parabolic_subset(WS: WeightSet, J: Iterable[int]) -> WeightSet:
    """Elements whose offset is supported on ``J``."""
    J = nodeset(WS.system, J)
    out = frozenset(nu for nu in WS.offsets if all(nu[i] == 0 for i in range(len(nu)) if i not in J))
    return WeightSet(WS.system, WS.base, out, WS.depth)


def maximizer_subset(WS: WeightSet, phi: Weight) -> WeightSet:
    """Elements maximizing ``(phi, -)``; on a truncated set this is the
    maximizer within the slice."""
    rs = WS.system
    # (phi, lambda - nu) is largest where (phi, nu) is smallest
    vals = {nu: rs.inner(phi, RootVector(nu)) for nu in WS.offsets}
    best = min(vals.values())
    return WeightSet(rs, WS.base, frozenset(nu for nu, v in vals.items() if v == best), WS.depth)


def rho_sum(WS: WeightSet) -> Weight:
    if WS.truncated:
        raise InputError("the sum of a truncated weight set is undefined")
    total = Weight.zero(WS.system.rank)
    for mu in WS.weights():
        total = total + mu
    return total


def face_hull(WS: WeightSet) -> HullFaceLattice:
    """Hull of a finite weight set (coordinates are the offsets, negated)."""
    return hull_face_lattice([tuple(-x for x in nu) for nu in sorted(WS.offsets)])


def difference_rank(WS: WeightSet) -> int:
    """Dimension of the span of all differences of elements."""
    return affine_rank(sorted(WS.offsets))


def polyhedron_vertices(spec: ModuleSpec, J: Iterable[int]) -> frozenset[Weight]:
    """Vertices of the hull of ``wt_J M(lambda, J(V))``.

    That hull is ``conv(A) - cone(R)`` with ``A`` the finite part on
    ``J & J(V)`` and ``R`` the positive roots supported on ``J`` but not on
    ``J(V)``.  A point ``p`` of ``A`` is a vertex iff ``0`` is outside the hull
    of ``{p - a} | R`` (Gordan), i.e. iff ``p`` is a vertex of
    ``conv(A | {p - r})``.
    """
    lam = spec.require_weight()
    rs = spec.system
    J = nodeset(rs, J)
    K = J & spec.integrable
    A = sorted(standard_parabolic_subset(simple_module_weights(rs, spec.integrable, lam), K).offsets)
    R = [r for r in _outside_roots(rs, spec.integrable) if all(r[i] == 0 for i in range(rs.rank) if i not in J)]
    top = WeightSet(rs, lam, frozenset(A))
    # a vertex of the polyhedron is in particular a vertex of conv(A)
    hull_pts = [tuple(-x for x in a) for a in A]
    corners = [A[k] for k in hull_face_lattice(hull_pts).vertices]
    if not R:
        return frozenset(top.weight(p) for p in corners)
    out = set()
    base = [tuple(-x for x in a) for a in corners]
    for k, p in enumerate(corners):
        pts = base + [tuple(-(x + y) for x, y in zip(p, r)) for r in R]
        if is_vertex(pts, k):
            out.add(top.weight(p))
    return frozenset(out)


@lru_cache(maxsize=256)
def _group_table(rs: RootSystem, JV: frozenset[int], cap: int) -> tuple:
    seed = Weight([1] * rs.rank)
    return tuple(orbit_with_words(rs, JV, seed, cap).items())


def _group_elements(rs: RootSystem, JV: frozenset[int]) -> dict[Weight, tuple]:
    """Elements of ``W_{J(V)}`` keyed by the image of the regular weight ``rho``."""
    return dict(_group_table(rs, JV, orbit_cap()))


def _word_on_offsets(rs, lamK, word, nu):
    for k in reversed(word):
        nu = _reflect_offset(rs, lamK, nu, k)
    return nu


def brute_stabilizer(spec: ModuleSpec, J: Iterable[int]) -> dict[Weight, tuple]:
    """Elements of ``W_{J(V)}`` mapping ``wt_J`` onto itself.

    Keys are images of ``rho`` (one per group element), values are words.
    """
    lam = spec.require_weight()
    rs = spec.system
    J = nodeset(rs, J)
    JV = spec.integrable
    if not J <= JV:
        raise InputError("brute-force stabilizer needs a finite face (J inside J(V))")
    S = standard_parabolic_subset(simple_module_weights(rs, JV, lam), J).offsets
    lamK = _int_coords(lam, JV)
    out = {}
    for img, word in _group_elements(rs, JV).items():
        if all(_word_on_offsets(rs, lamK, word, nu) in S for nu in S):
            out[img] = word
    return out


def pointwise_fixers(spec: ModuleSpec, J: Iterable[int]) -> dict[Weight, tuple]:
    """Elements of ``W_{J(V)}`` fixing every weight of ``wt_J``."""
    lam = spec.require_weight()
    rs = spec.system
    J = nodeset(rs, J)
    S = standard_parabolic_subset(simple_module_weights(rs, spec.integrable, lam), J).offsets
    lamK = _int_coords(lam, spec.integrable)
    return {
        img: word
        for img, word in _group_elements(rs, spec.integrable).items()
        if all(_word_on_offsets(rs, lamK, word, nu) == nu for nu in S)
    }


def orthogonal_decomposition(rs: RootSystem, weights: Iterable[Weight]) -> list[frozenset[Weight]]:
    """Split ``weights`` into the connected pieces of the graph joining
    non-orthogonal pairs."""
    ws = sorted(set(weights))
    seen: set = set()
    parts = []
    for w in ws:
        if w in seen:
            continue
        comp, stack = {w}, [w]
        seen.add(w)
        while stack:
            v = stack.pop()
            for u in ws:
                if u not in seen and rs.inner(u, v) != 0:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        parts.append(frozenset(comp))
    return parts


@dataclass
class CrossReport:
    """Outcome of comparing the closed forms with enumeration."""

    depth: int | None
    exact: bool
    pairs: list = field(default_factory=list)

    def count(self, verdict: str) -> int:
        return sum(1 for p in self.pairs if p["verdict"] == verdict)

    @property
    def disagreements(self) -> int:
        return self.count("disagree")

    @property
    def unresolved(self) -> int:
        return self.count("unresolved")

    @property
    def ok(self) -> bool:
        return self.disagreements == 0 and self.unresolved == 0

    def summary(self) -> dict:
        return {
            verdict: self.count(verdict)
            for verdict in ("agree", "agree-up-to-depth", "unresolved", "disagree")
        }


def _verdict(claim: bool, oracle_holds_in_slice: bool, certain: bool) -> tuple[str, bool]:
    """Compare a formula claim with the slice relation.

    A failure seen inside the slice is certain; a relation holding inside a
    truncated slice is only consistent up to the depth.
    """
    if not oracle_holds_in_slice:
        return ("agree" if not claim else "disagree"), True
    if certain:
        return ("agree" if claim else "disagree"), True
    return ("agree-up-to-depth" if claim else "unresolved"), False


def cross_validate(spec: ModuleSpec, depth: int | None = None, *, inclusion: bool = True, sets: dict | None = None) -> CrossReport:
    """Check ``faces_equal`` (and ``face_includes``) on every pair of subsets.

    ``sets`` may carry precomputed ``J -> offsets`` slices.
    """
    from .facecalc import all_subsets, face_includes, faces_equal

    if not spec.polyhedral_hull:
        raise UnsupportedAssumptionError("enumeration only models specs under the polyhedral-hull assumption")
    rs = spec.system
    subsets = all_subsets(rs.nodes)
    if sets is None:
        WS = module_weights_truncated(spec, depth)
        sets = {J: standard_parabolic_subset(WS, J).offsets for J in subsets}
        depth = WS.depth
    exact_all = depth is None
    JV = spec.integrable
    report = CrossReport(depth, exact_all)
    for J in subsets:
        for Jp in subsets:
            # finite faces sit inside the finite top, which the slice contains whole
            certain = exact_all or (J <= JV and Jp <= JV)
            A, B = sets[J], sets[Jp]
            verdict, _ = _verdict(faces_equal(spec, J, Jp), A == B, certain)
            entry = {"J": sorted(J), "Jprime": sorted(Jp), "relation": "equal", "verdict": verdict}
            if A != B:
                w = min((A - B) | (B - A))
                entry["witness"] = list(w)
            report.pairs.append(entry)
            if inclusion:
                # a set of a finite face is certain; inclusion into an infinite one needs care
                cert = exact_all or J <= JV
                verdict, _ = _verdict(face_includes(spec, J, Jp), A <= B, cert)
                entry = {"J": sorted(J), "Jprime": sorted(Jp), "relation": "included", "verdict": verdict}
                if not A <= B:
                    entry["witness"] = list(min(A - B))
                report.pairs.append(entry)
    return report

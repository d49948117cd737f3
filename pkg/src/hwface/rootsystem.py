"""Exact root-system data for semisimple Lie algebras.

Conventions
-----------
* Nodes are 0-based.  Each simple component uses Bourbaki numbering and the
  components are concatenated in input order.
* ``cartan[i][j] = alpha_j(h_i) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``,
  so column ``j`` of the Cartan matrix is ``alpha_j`` in the basis of
  fundamental weights.
* Long roots of every component have squared length 2.  Short roots of
  B/C/F have length 1 and the short root of G2 has length 2/3.
* All arithmetic is exact (:class:`fractions.Fraction` and ``int``).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, InvariantViolation

__all__ = [
    "DynkinType",
    "RootSystem",
    "Weight",
    "RootVector",
    "parse_type",
    "build",
    "from_cartan",
    "system",
    "to_fraction",
    "project",
    "support",
    "perp_set",
    "highest_root",
]


def to_fraction(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: every decision path in the package is exact.
    """
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational number: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational number: {x!r}") from None
    raise InputError(f"not an exact rational: {x!r} ({type(x).__name__})")


class _Vec:
    """Immutable exact coordinate vector; subclasses fix the basis."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __lt__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords < other.coords

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if len(other) != len(self):
            raise InputError("vectors live over root systems of different rank")

    def __add__(self, other):
        self._check(other)
        return type(self)(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return type(self)(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return type(self)(-a for a in self.coords)

    def __mul__(self, k):
        k = to_fraction(k)
        return type(self)(k * a for a in self.coords)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = to_fraction(k)
        return type(self)(a / k for a in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        inner = ", ".join(str(c) for c in self.coords)
        return f"{type(self).__name__}({inner})"


class Weight(_Vec):
    """A weight in fundamental-weight coordinates: ``coords[i] = mu(h_i)``."""

    __slots__ = ()

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls([0] * rank)


class RootVector(_Vec):
    """A vector in simple-root coordinates."""

    __slots__ = ()

    @property
    def height(self) -> Fraction:
        return sum(self.coords, Fraction(0))


_FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class DynkinType:
    """A simple Lie type such as ``B3``."""

    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f in "BC" and len(f) == 1 and n >= 2)
            or (f == "D" and n >= 3)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "G" and n == 2)
        )
        if not ok:
            raise InputError(f"invalid Dynkin type {f}{n}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    def canonical(self) -> "DynkinType":
        """Identify the small-rank coincidences D3 = A3 and C2 = B2."""
        if self.family == "D" and self.rank == 3:
            return DynkinType("A", 3)
        if self.family == "C" and self.rank == 2:
            return DynkinType("B", 2)
        return self

    @property
    def weyl_order(self) -> int:
        n = self.rank
        return {
            "A": math.factorial(n + 1),
            "B": 2**n * math.factorial(n),
            "C": 2**n * math.factorial(n),
            "D": 2 ** (n - 1) * math.factorial(n),
            "E": {6: 51840, 7: 2903040, 8: 696729600}.get(n),
            "F": 1152,
            "G": 12,
        }[self.family]

    @property
    def num_positive_roots(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 1) // 2,
            "B": n * n,
            "C": n * n,
            "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n),
            "F": 24,
            "G": 6,
        }[self.family]


def parse_type(text: str) -> list[DynkinType]:
    """Parse strings like ``"A2"``, ``"B3xG2"`` or ``"A1xA1xA1"``."""
    parts = [p for p in re.split(r"\s*[x×*+]\s*", text.strip()) if p]
    if not parts:
        raise InputError(f"empty Dynkin type string {text!r}")
    out = []
    for p in parts:
        m = re.fullmatch(r"([A-Ga-g])_?(\d+)", p)
        if not m:
            raise InputError(f"cannot parse Dynkin type {p!r}")
        out.append(DynkinType(m.group(1).upper(), int(m.group(2))))
    return out


def _gram(t: DynkinType) -> list[list[Fraction]]:
    """Gram matrix of the simple roots of one simple type, Bourbaki order."""
    n = t.rank
    F = Fraction
    g = [[F(0)] * n for _ in range(n)]

    def bond(i, j, v):
        g[i][j] = g[j][i] = F(v)

    f = t.family
    if f == "A":
        lengths = [2] * n
        for i in range(n - 1):
            bond(i, i + 1, -1)
    elif f == "B":
        lengths = [2] * (n - 1) + [1]
        for i in range(n - 1):
            bond(i, i + 1, -1)
    elif f == "C":
        lengths = [1] * (n - 1) + [2]
        for i in range(n - 2):
            bond(i, i + 1, F(-1, 2))
        bond(n - 2, n - 1, -1)
    elif f == "D":
        lengths = [2] * n
        for i in range(n - 2):
            bond(i, i + 1, -1)
        bond(n - 3, n - 1, -1)
    elif f == "E":
        lengths = [2] * n
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]:
            bond(i, j, -1)
    elif f == "F":
        lengths = [2, 2, 1, 1]
        bond(0, 1, -1)
        bond(1, 2, -1)
        bond(2, 3, F(-1, 2))
    else:  # G2, node 0 short
        lengths = [F(2, 3), 2]
        bond(0, 1, -1)
    for i in range(n):
        g[i][i] = F(lengths[i])
    return g


def _det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(map(Fraction, row)) for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def _inverse(m: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def _graph_components(cartan, nodes: Iterable[int]) -> list[tuple[int, ...]]:
    nodes = sorted(set(nodes))
    allowed = set(nodes)
    seen: set[int] = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in allowed:
                if w not in seen and w != v and cartan[v][w] != 0:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def classify_component(cartan, symmetrizer, nodes: Sequence[int]) -> DynkinType:
    """Identify a connected sub-diagram with a simple type.

    Works from graph invariants (bond multiplicities, branch arms, the
    short/long side of a double bond), so it is independent of node labels.
    The B2/C2 and A3/D3 coincidences come back in canonical form.
    """
    nodes = list(nodes)
    n = len(nodes)
    if n == 1:
        return DynkinType("A", 1)
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    mult = {}
    for a in nodes:
        for b in nodes:
            if a < b and cartan[a][b] != 0:
                m = cartan[a][b] * cartan[b][a]
                if m not in (1, 2, 3):
                    raise InvariantViolation(f"bond multiplicity {m} between nodes {a} and {b}")
                adj[a].append(b)
                adj[b].append(a)
                mult[frozenset((a, b))] = m
    if len(mult) != n - 1:
        raise InvariantViolation("sub-diagram is not a tree")
    degs = {v: len(adj[v]) for v in nodes}
    ms = sorted(mult.values())
    if 3 in ms:
        if n == 2:
            return DynkinType("G", 2)
        raise InvariantViolation("triple bond outside G2")
    if ms.count(2) > 1 or (2 in ms and max(degs.values()) > 2):
        raise InvariantViolation("unclassifiable multiply-laced diagram")
    if max(degs.values()) <= 2:
        end = next(v for v in nodes if degs[v] == 1)
        path = [end]
        while len(path) < n:
            nxt = [w for w in adj[path[-1]] if w not in path]
            path.append(nxt[0])
        if 2 not in ms:
            return DynkinType("A", n)
        k = next(i for i in range(n - 1) if mult[frozenset((path[i], path[i + 1]))] == 2)
        if n == 2:
            return DynkinType("B", 2)
        if n == 4 and k == 1:
            return DynkinType("F", 4)
        if k == 0:
            path.reverse()
            k = n - 2
        if k != n - 2:
            raise InvariantViolation("double bond in the middle of a long path")
        e, f = path[-1], path[-2]
        return DynkinType("B" if symmetrizer[e] < symmetrizer[f] else "C", n)
    branch = [v for v in nodes if degs[v] == 3]
    if len(branch) != 1 or max(degs.values()) > 3:
        raise InvariantViolation("unclassifiable branched diagram")
    b = branch[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while degs[cur] == 2:
            prev, cur = cur, next(w for w in adj[cur] if w != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinType("D", n).canonical()
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return DynkinType("E", n)
    raise InvariantViolation(f"unclassifiable branched diagram with arms {arms}")


@dataclass(frozen=True)
class RootSystem:
    """Cartan data of a semisimple Lie algebra.

    Build instances with :func:`build`, :func:`from_cartan` or :func:`system`.
    """

    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    types: tuple[DynkinType, ...] = field(compare=False)
    component_nodes: tuple[tuple[int, ...], ...] = field(compare=False)
    label: str = field(default="", compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(range(self.rank))

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """``(alpha_i, alpha_j) = d_i a_ij``."""
        return tuple(
            tuple(self.symmetrizer[i] * self.cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    @cached_property
    def _cartan_inverse(self):
        return _inverse(self.cartan)

    @cached_property
    def _simple_weights(self) -> tuple[Weight, ...]:
        return tuple(Weight(self.cartan[k][i] for k in range(self.rank)) for i in range(self.rank))

    def alpha(self, i: int) -> Weight:
        """Simple root ``alpha_i`` in fundamental-weight coordinates."""
        return self._simple_weights[i]

    def omega(self, i: int) -> Weight:
        return Weight(int(k == i) for k in range(self.rank))

    def simple_root(self, i: int) -> RootVector:
        return RootVector(int(k == i) for k in range(self.rank))

    def to_weight(self, v: RootVector) -> Weight:
        if len(v) != self.rank:
            raise InputError("vector rank does not match the root system")
        return Weight(
            sum((self.cartan[k][j] * v[j] for j in range(self.rank)), Fraction(0))
            for k in range(self.rank)
        )

    def to_root(self, w: Weight) -> RootVector:
        if len(w) != self.rank:
            raise InputError("vector rank does not match the root system")
        inv = self._cartan_inverse
        return RootVector(
            sum((inv[j][k] * w[k] for k in range(self.rank)), Fraction(0))
            for j in range(self.rank)
        )

    def inner(self, x, y) -> Fraction:
        """Invariant form ``(x, y)`` for weights and/or root vectors."""
        for v in (x, y):
            if not isinstance(v, (Weight, RootVector)):
                raise InputError(f"expected Weight or RootVector, got {type(v).__name__}")
            if len(v) != self.rank:
                raise InputError("vector rank does not match the root system")
        if isinstance(x, Weight) and isinstance(y, Weight):
            y = self.to_root(y)
        if isinstance(x, RootVector) and isinstance(y, RootVector):
            g = self.gram
            return sum(
                (x[i] * g[i][j] * y[j] for i in range(self.rank) if x[i] for j in range(self.rank)),
                Fraction(0),
            )
        w, r = (x, y) if isinstance(x, Weight) else (y, x)
        # (omega_i, alpha_j) = delta_ij d_j
        return sum((w[i] * self.symmetrizer[i] * r[i] for i in range(self.rank)), Fraction(0))

    def pairing(self, mu: Weight, i: int) -> Fraction:
        """``mu(h_i)``."""
        return mu[i]

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, by root-string closure."""
        n = self.rank
        simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
        roots = set(simple)
        level = list(simple)
        while level:
            nxt = []
            for beta in level:
                for i in range(n):
                    p = 0
                    v = list(beta)
                    v[i] -= 1
                    while tuple(v) in roots:
                        p += 1
                        v[i] -= 1
                    beta_hi = sum(self.cartan[i][j] * beta[j] for j in range(n))
                    if p - beta_hi > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in roots:
                            roots.add(up)
                            nxt.append(up)
            level = nxt
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    def component_of(self, i: int) -> tuple[int, ...]:
        return next(c for c in self.component_nodes if i in c)

    def __str__(self):
        return self.label or "x".join(str(t) for t in self.types)


def build(components: Sequence[DynkinType | str]) -> RootSystem:
    """Block-diagonal root system of the given simple types."""
    types = []
    for c in components:
        if isinstance(c, str):
            types.extend(parse_type(c))
        else:
            types.append(c)
    if not types:
        raise InputError("a root system needs at least one component")
    types = [t.canonical() if (t.family == "D" and t.rank == 3) else t for t in types]
    n = sum(t.rank for t in types)
    cartan = [[0] * n for _ in range(n)]
    sym = []
    comps = []
    off = 0
    for t in types:
        g = _gram(t)
        for i in range(t.rank):
            for j in range(t.rank):
                a = 2 * g[i][j] / g[i][i]
                assert a.denominator == 1
                cartan[off + i][off + j] = int(a)
            sym.append(g[i][i] / 2)
        comps.append(tuple(range(off, off + t.rank)))
        off += t.rank
    label = "x".join(str(t) for t in types)
    return RootSystem(tuple(map(tuple, cartan)), tuple(sym), tuple(types), tuple(comps), label)


def from_cartan(matrix: Sequence[Sequence[int]]) -> RootSystem:
    """Validate a raw Cartan matrix and build its root system.

    Node numbering follows the rows of ``matrix``.  Raises :class:`InputError`
    unless the matrix is a finite-type (positive definite, symmetrizable)
    generalized Cartan matrix.
    """
    try:
        a = [[int(x) if not isinstance(x, bool) and int(x) == x else None for x in row] for row in matrix]
    except (TypeError, ValueError):
        raise InputError("Cartan matrix entries must be integers") from None
    n = len(a)
    if n == 0 or any(len(r) != n for r in a) or any(x is None for r in a for x in r):
        raise InputError("Cartan matrix must be a nonempty square integer matrix")
    for i in range(n):
        if a[i][i] != 2:
            raise InputError(f"diagonal entry a[{i + 1}][{i + 1}] must be 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    raise InputError(f"off-diagonal entry a[{i + 1}][{j + 1}] must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise InputError(f"a[{i + 1}][{j + 1}] and a[{j + 1}][{i + 1}] must vanish together")
    comps = _graph_components(a, range(n))
    d: list[Fraction | None] = [None] * n
    for comp in comps:
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j != i and a[i][j] != 0:
                    # d_i a_ij = d_j a_ji
                    val = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        raise InputError("Cartan matrix is not symmetrizable")
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / top
    gram = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _det([row[:k] for row in gram[:k]]) <= 0:
            raise InputError("Cartan matrix is not of finite type (form not positive definite)")
    cartan = tuple(tuple(r) for r in a)
    sym = tuple(d)
    types = tuple(classify_component(cartan, sym, c) for c in comps)
    return RootSystem(cartan, sym, types, tuple(comps), "")


def system(spec) -> RootSystem:
    """Accept a type string, a list of types, or a raw Cartan matrix."""
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, str):
        return build(parse_type(spec))
    if isinstance(spec, DynkinType):
        return build([spec])
    spec = list(spec)
    if spec and all(isinstance(s, (str, DynkinType)) for s in spec):
        return build(spec)
    return from_cartan(spec)


# -- free-function forms of the basic operations ---------------------------

def project(J: Iterable[int], lam: Weight) -> Weight:
    """Keep the coordinates of ``lam`` on ``J`` and zero the rest."""
    J = frozenset(J)
    return Weight(c if i in J else 0 for i, c in enumerate(lam))


def support(lam: Weight) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(lam) if c != 0)


def perp_set(rs: RootSystem, X: Iterable, within: Iterable[int] | None = None) -> frozenset[int]:
    """Nodes ``i`` (inside ``within``) with ``(alpha_i, x) = 0`` for all ``x``."""
    X = list(X)
    nodes = rs.nodes if within is None else frozenset(within)
    out = set()
    for i in nodes:
        ai = rs.simple_root(i)
        if all(rs.inner(ai, x) == 0 for x in X):
            out.add(i)
    return frozenset(out)


def highest_root(rs: RootSystem, component: Iterable[int]) -> Weight:
    """Highest root of one connected component, in weight coordinates."""
    comp = frozenset(component)
    if not comp:
        raise InputError("highest root of an empty node set")
    if len(_graph_components(rs.cartan, comp)) != 1:
        raise InputError("highest root needs a single connected component")
    best = None
    for r in rs.positive_roots:
        if all(r[i] == 0 for i in range(rs.rank) if i not in comp):
            if best is None or sum(r) > sum(best):
                best = r
    return rs.to_weight(RootVector(best))

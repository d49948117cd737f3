"""Highest weight module descriptions consumed by the face calculus.

A :class:`ModuleSpec` records the root system, one :class:`CoordClass` per
node describing ``lambda(h_i)``, the integrable set ``J(V)`` and a flag
asserting that the hull of the weights agrees with that of the parabolic
Verma module with the same highest weight and integrable set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .dynkin import nodeset
from .errors import InputError, ValidationError
from .rootsystem import RootSystem, Weight, to_fraction

ZERO = "zero"
POSINT = "posint"
NONINTEGRAL = "nonintegral"
KINDS = (ZERO, POSINT, NONINTEGRAL)

PRESETS = ("verma", "simple", "parabolicVerma", "finiteDimensional")

__all__ = [
    "CoordClass",
    "ModuleSpec",
    "ZERO",
    "POSINT",
    "NONINTEGRAL",
    "coord",
    "classify_value",
    "diagnose",
    "validate",
    "preset",
    "make_spec",
    "j_lambda",
]


def _is_dominant_integer(v: Fraction) -> bool:
    return v.denominator == 1 and v >= 0


@dataclass(frozen=True)
class CoordClass:
    """Integrality class of one coordinate ``lambda(h_i)``.

    ``zero``
        ``lambda(h_i) = 0``.
    ``posint``
        a positive integer, optionally with known ``value``.
    ``nonintegral``
        nonzero and outside the nonnegative integers (negative integers
        included), optionally with known ``value``.
    """

    kind: str
    value: Fraction | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown coordinate class {self.kind!r}")
        if self.value is None:
            return
        v = to_fraction(self.value)
        object.__setattr__(self, "value", v)
        if self.kind == ZERO and v != 0:
            raise InputError(f"class 'zero' with value {v}")
        if self.kind == POSINT and not (_is_dominant_integer(v) and v > 0):
            raise InputError(f"class 'posint' needs a positive integer, got {v}")
        if self.kind == NONINTEGRAL and (v == 0 or _is_dominant_integer(v)):
            raise InputError(f"class 'nonintegral' needs a value outside Z_+, got {v}")

    @property
    def known(self) -> bool:
        return self.kind == ZERO or self.value is not None

    @property
    def numeric(self) -> Fraction | None:
        return Fraction(0) if self.kind == ZERO else self.value

    @property
    def in_j_lambda(self) -> bool:
        return self.kind != NONINTEGRAL

    @property
    def nonzero(self) -> bool:
        return self.kind != ZERO

    def to_json(self):
        out = {"class": self.kind}
        if self.value is not None:
            out["value"] = str(self.value)
        return out


def classify_value(v) -> CoordClass:
    """Class of a known numeric coordinate."""
    v = to_fraction(v)
    if v == 0:
        return CoordClass(ZERO)
    if _is_dominant_integer(v):
        return CoordClass(POSINT, v)
    return CoordClass(NONINTEGRAL, v)


def coord(kind: str, value=None) -> CoordClass:
    """Forgiving constructor: a dominant class with value 0 becomes ``zero``."""
    if kind in (POSINT, "dominant") and value is not None and to_fraction(value) == 0:
        return CoordClass(ZERO)
    if kind == "dominant":
        kind = POSINT
    return CoordClass(kind, None if value is None else to_fraction(value))


def _coords_from(rs: RootSystem, lam) -> tuple[CoordClass, ...]:
    if isinstance(lam, Weight):
        items = list(lam.coords)
    else:
        items = list(lam)
    if len(items) != rs.rank:
        raise InputError(f"lambda has {len(items)} coordinates, the diagram has {rs.rank} nodes")
    return tuple(c if isinstance(c, CoordClass) else classify_value(c) for c in items)


@dataclass(frozen=True)
class ModuleSpec:
    system: RootSystem
    coords: tuple[CoordClass, ...]
    integrable: frozenset[int]
    polyhedral_hull: bool = False
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def rank(self) -> int:
        return self.system.rank

    @property
    def nodes(self) -> frozenset[int]:
        return self.system.nodes

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c.nonzero)

    @cached_property
    def j_lambda(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c.in_j_lambda)

    @cached_property
    def lam_perp(self) -> frozenset[int]:
        """``{lambda}^perp``: ``(lambda, alpha_i) = lambda(h_i) d_i`` vanishes iff class is zero."""
        return self.nodes - self.support

    @property
    def is_numeric(self) -> bool:
        return all(c.known for c in self.coords)

    @cached_property
    def weight(self) -> Weight | None:
        """The numeric highest weight, or ``None`` in symbolic mode."""
        if not self.is_numeric:
            return None
        return Weight(c.numeric for c in self.coords)

    def require_weight(self) -> Weight:
        if self.weight is None:
            unknown = [i + 1 for i, c in enumerate(self.coords) if not c.known]
            raise InputError(f"numeric lambda required; nodes {unknown} have no value")
        return self.weight

    @property
    def is_finite_dimensional(self) -> bool:
        return self.integrable == self.nodes

    def with_classes_only(self) -> "ModuleSpec":
        """The same spec with every numeric value forgotten."""
        return ModuleSpec(
            self.system,
            tuple(CoordClass(c.kind) for c in self.coords),
            self.integrable,
            self.polyhedral_hull,
        )


def j_lambda(spec: ModuleSpec) -> frozenset[int]:
    return spec.j_lambda


def diagnose(spec: ModuleSpec) -> list[tuple[int | None, str]]:
    """All consistency problems of ``spec`` as ``(node, message)`` pairs."""
    out: list[tuple[int | None, str]] = []
    if len(spec.coords) != spec.rank:
        out.append((None, f"lambda has {len(spec.coords)} coordinates, expected {spec.rank}"))
        return out
    for i in sorted(spec.integrable):
        if not (isinstance(i, int) and 0 <= i < spec.rank):
            out.append((None, f"integrable node {i} is out of range"))
        elif not spec.coords[i].in_j_lambda:
            out.append((i, "integrable node must have lambda(h_i) in Z_+"))
    return out


def validate(spec: ModuleSpec) -> ModuleSpec:
    """Return ``spec`` unchanged or raise :class:`ValidationError`."""
    problems = diagnose(spec)
    if problems:
        raise ValidationError(problems)
    return spec


def _hull_auto(coords, integrable, jl) -> bool:
    # all coordinates nonzero, or at most one integral direction left free
    return all(c.nonzero for c in coords) or len(jl - integrable) <= 1


def make_spec(rs: RootSystem, lam, integrable: Iterable[int], polyhedral_hull: bool | None = None) -> ModuleSpec:
    """Build and validate a spec with an explicit integrable set.

    When ``polyhedral_hull`` is ``None`` the flag is switched on exactly when
    the spec falls under a case where the hull property is known to hold:
    every coordinate nonzero, or ``|J_lambda \\ J(V)| <= 1``.
    """
    coords = _coords_from(rs, lam)
    J = frozenset(integrable)
    if polyhedral_hull is None:
        jl = frozenset(i for i, c in enumerate(coords) if c.in_j_lambda)
        polyhedral_hull = _hull_auto(coords, J, jl)
    return validate(ModuleSpec(rs, coords, J, bool(polyhedral_hull)))


def preset(kind: str, rs: RootSystem, lam, J: Iterable[int] | None = None) -> ModuleSpec:
    """Standard module families.

    ``verma``
        ``J(V)`` empty.
    ``simple``
        ``J(V) = J_lambda``.
    ``parabolicVerma``
        ``J(V) = J`` for a given ``J`` inside ``J_lambda``.
    ``finiteDimensional``
        ``J(V) = I``; needs dominant integral ``lambda``.
    """
    coords = _coords_from(rs, lam)
    jl = frozenset(i for i, c in enumerate(coords) if c.in_j_lambda)
    if kind == "verma":
        integ = frozenset()
    elif kind == "simple":
        integ = jl
    elif kind == "parabolicVerma":
        if J is None:
            raise InputError("parabolicVerma needs an integrable set")
        integ = nodeset(rs, J)
        if not integ <= jl:
            raise InputError(f"parabolicVerma set must lie in J_lambda; offending nodes {sorted(i + 1 for i in integ - jl)}")
    elif kind in ("finiteDimensional", "finite"):
        if jl != rs.nodes:
            raise InputError(f"finite-dimensional preset needs dominant integral lambda; offending nodes {sorted(i + 1 for i in rs.nodes - jl)}")
        integ = rs.nodes
    else:
        raise InputError(f"unknown preset {kind!r}; expected one of {', '.join(PRESETS)}")
    return validate(ModuleSpec(rs, coords, integ, True))

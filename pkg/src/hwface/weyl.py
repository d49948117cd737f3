"""Weyl group actions: reflections, orbits, parabolic orders and cosets.

Group elements are represented by words, i.e. tuples of node indices.  A word
``(i1, i2, ..., ik)`` acts as ``s_i1 s_i2 ... s_ik``, so the last letter is
applied first.
"""
from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .dynkin import classify, nodeset
from .errors import InputError, ResourceError
from .rootsystem import RootSystem, Weight

WeylWord = tuple

DEFAULT_ORBIT_CAP = 10**6

__all__ = [
    "WeylWord",
    "OrbitSet",
    "orbit_cap",
    "reflect",
    "apply_word",
    "orbit",
    "orbit_with_words",
    "parabolic_order",
    "parabolic_index",
    "longest_image",
    "coset_representatives",
]


def orbit_cap() -> int:
    """Enumeration cap, overridable through ``HWFACE_ORBIT_CAP``."""
    raw = os.environ.get("HWFACE_ORBIT_CAP")
    if raw is None:
        return DEFAULT_ORBIT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"HWFACE_ORBIT_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError("HWFACE_ORBIT_CAP must be positive")
    return cap


def reflect(rs: RootSystem, i: int, mu: Weight) -> Weight:
    """``s_i(mu) = mu - mu(h_i) alpha_i``."""
    c = mu[i]
    if c == 0:
        return mu
    return mu - rs.alpha(i) * c


def apply_word(rs: RootSystem, word: Sequence[int], mu: Weight) -> Weight:
    for i in reversed(word):
        if not (0 <= i < rs.rank):
            raise InputError(f"word letter {i} is not a node")
        mu = reflect(rs, i, mu)
    return mu


@dataclass(frozen=True)
class OrbitSet:
    """The orbit of ``seed`` under the parabolic subgroup ``W_generators``."""

    seed: Weight
    generators: frozenset[int]
    elements: frozenset[Weight]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, mu):
        return mu in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))


def orbit_with_words(rs: RootSystem, J: Iterable[int], mu: Weight, cap: int | None = None) -> dict[Weight, WeylWord]:
    """Breadth-first orbit of ``mu`` under ``W_J``, with a shortest word per element.

    ``word`` satisfies ``apply_word(rs, word, mu) == element``.
    """
    J = sorted(nodeset(rs, J))
    cap = orbit_cap() if cap is None else cap
    words = {mu: ()}
    queue = deque([mu])
    while queue:
        v = queue.popleft()
        w = words[v]
        for j in J:
            u = reflect(rs, j, v)
            if u not in words:
                words[u] = (j,) + w
                if len(words) > cap:
                    raise ResourceError(f"orbit exceeds the enumeration cap of {cap}")
                queue.append(u)
    return words


def orbit(rs: RootSystem, J: Iterable[int], mu: Weight, cap: int | None = None) -> OrbitSet:
    J = nodeset(rs, J)
    return OrbitSet(mu, J, frozenset(orbit_with_words(rs, J, mu, cap)))


def parabolic_order(rs: RootSystem, J: Iterable[int]) -> int:
    """``|W_J|`` from the classical order formulas (no enumeration)."""
    return math.prod(t.weyl_order for t in classify(rs, J))


def parabolic_index(rs: RootSystem, J: Iterable[int], K: Iterable[int]) -> int:
    """``[W_J : W_K]`` for ``K`` inside ``J``."""
    J, K = nodeset(rs, J), nodeset(rs, K)
    if not K <= J:
        raise InputError(f"index needs K inside J, got K={sorted(K)} J={sorted(J)}")
    big, small = parabolic_order(rs, J), parabolic_order(rs, K)
    q, r = divmod(big, small)
    assert r == 0
    return q


def longest_image(rs: RootSystem, J: Iterable[int], lam: Weight) -> Weight:
    """``w_0^J(lam)`` for ``J``-dominant ``lam``.

    Greedy descent: reflect in the lowest-index ``j`` with ``mu(h_j) > 0``
    until none is left.  The orbit has a single ``J``-antidominant element,
    so the tie-breaking rule does not affect the result.
    """
    J = sorted(nodeset(rs, J))
    bad = [j for j in J if lam[j] < 0]
    if bad:
        raise InputError(f"weight is not dominant on nodes {[j + 1 for j in bad]}")
    mu = lam
    while True:
        j = next((j for j in J if mu[j] > 0), None)
        if j is None:
            return mu
        mu = reflect(rs, j, mu)


def coset_representatives(rs: RootSystem, J: Iterable[int], K: Iterable[int], cap: int | None = None) -> list[WeylWord]:
    """Minimal-length representatives of ``W_J / W_K``.

    Uses the orbit of ``sum_{j in J \\ K} omega_j``, whose stabilizer in
    ``W_J`` is exactly ``W_K``.
    """
    J, K = nodeset(rs, J), nodeset(rs, K)
    if not K <= J:
        raise InputError(f"cosets need K inside J, got K={sorted(K)} J={sorted(J)}")
    seed = Weight.zero(rs.rank)
    for j in J - K:
        seed = seed + rs.omega(j)
    words = orbit_with_words(rs, J, seed, cap)
    return sorted(words.values(), key=lambda w: (len(w), w))

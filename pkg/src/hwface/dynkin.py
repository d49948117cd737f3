"""Graph combinatorics on Dynkin diagrams.

Node sets are plain ``frozenset[int]`` of 0-based node indices; iterate them
through ``sorted`` when order matters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .rootsystem import (
    DynkinType,
    RootSystem,
    Weight,
    _graph_components,
    classify_component,
    highest_root,
)

NodeSet = frozenset

#: label of the extra node in an :class:`ExtendedDiagram`
EXTRA = -1

__all__ = [
    "NodeSet",
    "EXTRA",
    "nodeset",
    "components",
    "is_orthogonal",
    "classify",
    "ExtendedDiagram",
    "extended_component_containing",
]


def nodeset(rs: RootSystem, nodes: Iterable[int]) -> frozenset[int]:
    """Validate node indices against ``rs`` and freeze them."""
    out = frozenset(nodes)
    bad = [i for i in out if not (isinstance(i, int) and 0 <= i < rs.rank)]
    if bad:
        raise InputError(f"node index out of range: {sorted(bad)}")
    return out


def components(rs: RootSystem, J: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the subdiagram induced on ``J``.

    Components are listed by smallest node.
    """
    J = nodeset(rs, J)
    return [frozenset(c) for c in _graph_components(rs.cartan, J)]


def is_orthogonal(rs: RootSystem, J: Iterable[int], K: Iterable[int]) -> bool:
    """True iff ``(alpha_j, alpha_k) = 0`` for all ``j`` in J, ``k`` in K."""
    K = list(K)
    return all(rs.cartan[j][k] == 0 for j in J for k in K)


def classify(rs: RootSystem, J: Iterable[int]) -> list[DynkinType]:
    """Simple types of the components of ``J``, in component order.

    B2 and C2 both come back as B2, and a D3 subdiagram comes back as A3.
    """
    return [classify_component(rs.cartan, rs.symmetrizer, sorted(c)) for c in components(rs, J)]


@dataclass(frozen=True)
class ExtendedDiagram:
    """A Dynkin diagram with one extra node glued on.

    ``kind`` is ``"affine"`` (extra node is the lowest root) or
    ``"minus_lambda"`` (extra node is ``-lambda``).  ``attach`` lists the base
    nodes joined to the extra node by a single edge.
    """

    base: RootSystem
    kind: str
    attach: frozenset[int]

    @classmethod
    def affine(cls, rs: RootSystem) -> "ExtendedDiagram":
        if len(rs.component_nodes) != 1:
            raise InputError("the affine diagram is only built for a simple (connected) diagram")
        theta = highest_root(rs, rs.nodes)
        attach = frozenset(i for i in rs.nodes if rs.inner(theta, rs.simple_root(i)) != 0)
        return cls(rs, "affine", attach)

    @classmethod
    def minus_lambda(cls, rs: RootSystem, lam: Weight | Iterable[int]) -> "ExtendedDiagram":
        """Attach ``-lambda`` to the nodes ``i`` with ``(lambda, alpha_i) > 0``.

        ``lam`` may be a numeric weight or directly the set of such nodes.
        """
        if isinstance(lam, Weight):
            if len(lam) != rs.rank:
                raise InputError("weight rank does not match the diagram")
            attach = frozenset(i for i in rs.nodes if lam[i] > 0)
        else:
            attach = nodeset(rs, lam)
        return cls(rs, "minus_lambda", attach)

    @property
    def nodes(self) -> frozenset[int]:
        return self.base.nodes | {EXTRA}

    def edges(self) -> frozenset[frozenset[int]]:
        """Undirected edges, ignoring multiplicities."""
        rs = self.base
        es = {frozenset((i, j)) for i in rs.nodes for j in rs.nodes if i < j and rs.cartan[i][j] != 0}
        es |= {frozenset((EXTRA, i)) for i in self.attach}
        return frozenset(es)

    def neighbours(self, v: int) -> frozenset[int]:
        if v == EXTRA:
            return self.attach
        rs = self.base
        out = {j for j in rs.nodes if j != v and rs.cartan[v][j] != 0}
        if v in self.attach:
            out.add(EXTRA)
        return frozenset(out)


def extended_component_containing(E: ExtendedDiagram, J: Iterable[int]) -> tuple[frozenset[int], bool]:
    """Component of the extra node in the extended diagram with ``J`` removed.

    Returns the base-node part of that component and a flag that is always
    true (the extra node is never removed).
    """
    J = nodeset(E.base, J)
    seen = {EXTRA}
    stack = [EXTRA]
    while stack:
        v = stack.pop()
        for w in E.neighbours(v):
            if w not in seen and w not in J:
                seen.add(w)
                stack.append(w)
    return frozenset(seen - {EXTRA}), True

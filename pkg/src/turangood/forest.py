"""Linear forests: vertex-disjoint unions of paths.

A linear forest is fully described by the multiset of its component
orders (P_k is the path on k vertices, so a component of order k has
k - 1 edges).  Forests are stored canonically with component orders
sorted in non-increasing order; two forests are equal exactly when
their canonical order tuples are equal.

The empty forest (no components) is a legal internal value and counts
as having exactly one copy in every host graph.  Text input must be
nonempty.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True, slots=True)
class LinearForest:
    """Multiset of path orders, canonicalized to non-increasing order."""

    components: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        comps = tuple(sorted((int(c) for c in self.components), reverse=True))
        for c in comps:
            if c < 1:
                raise ValueError(f"component order must be >= 1, got {c}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, text: str) -> "LinearForest":
        """Parse a comma-separated list of component orders, e.g. "5,3,1".

        Whitespace is ignored.  The input must name at least one component.
        """
        items = [tok.strip() for tok in text.split(",") if tok.strip()]
        if not items:
            raise ValueError("forest must have at least one component")
        try:
            orders = [int(tok) for tok in items]
        except ValueError:
            raise ValueError(f"invalid forest spec {text!r}") from None
        return cls(tuple(orders))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.components)

    @property
    def total_vertices(self) -> int:
        return sum(self.components)

    @property
    def total_edges(self) -> int:
        return sum(c - 1 for c in self.components)

    @property
    def is_empty(self) -> bool:
        return not self.components

    def multiplicity(self, order: int) -> int:
        """Number of components with the given order."""
        return sum(1 for c in self.components if c == order)

    def path_edges(self) -> list[tuple[int, int]]:
        """Edge list of an explicit drawing on vertices 0..total_vertices-1.

        Components occupy consecutive vertex blocks in canonical order.
        """
        edges = []
        offset = 0
        for c in self.components:
            edges.extend((offset + t, offset + t + 1) for t in range(c - 1))
            offset += c
        return edges


def aut_order(forest: LinearForest) -> int:
    """Order of the automorphism group of the forest.

    Every component of order >= 2 can be reversed independently, and
    components of equal order can be permuted among each other:
    2^(#components of order >= 2) * prod over distinct orders of mult!.
    """
    out = 1 << sum(1 for c in forest.components if c >= 2)
    for mult in Counter(forest.components).values():
        out *= factorial(mult)
    return out


def delete_odd_endpoint(forest: LinearForest, order: int) -> LinearForest:
    """Remove one endpoint from a component of the given odd order (>= 3).

    The chosen component shrinks by one vertex.
    """
    if order % 2 == 0:
        raise ValueError(f"order {order} is even; expected an odd component order")
    if order < 3:
        raise ValueError("order must be >= 3 (use delete_isolated for P1 components)")
    return _replace_component(forest, order, order - 1)


def delete_even_end_pair(forest: LinearForest, order: int) -> LinearForest:
    """Remove the last two vertices from a component of the given even order.

    A component of order >= 4 shrinks by two vertices; a component of
    order 2 is removed entirely.
    """
    if order % 2 == 1:
        raise ValueError(f"order {order} is odd; expected an even component order")
    return _replace_component(forest, order, order - 2)


def delete_isolated(forest: LinearForest) -> LinearForest:
    """Remove one single-vertex component."""
    return _replace_component(forest, 1, 0)


def _replace_component(forest: LinearForest, order: int, new_order: int) -> LinearForest:
    comps = list(forest.components)
    try:
        comps.remove(order)
    except ValueError:
        raise ValueError(f"forest {forest} has no component of order {order}") from None
    if new_order > 0:
        comps.append(new_order)
    return LinearForest(tuple(comps))

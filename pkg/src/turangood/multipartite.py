"""Exact copy counts of linear forests in complete multipartite graphs.

A complete multipartite host is described by its part sizes.  Counting
never materializes the host: injective homomorphisms are counted by a
dynamic program that lays the forest down one path vertex at a time.
Placing a vertex into part p contributes a factor (size_p - used_p),
and consecutive vertices of the same path may not share a part (that
pair must be a host edge).  Copy counts divide out the forest's
automorphisms; the division is always exact.

All arithmetic uses Python's unbounded integers, so counts are exact at
any magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .forest import LinearForest, aut_order


@dataclass(frozen=True, slots=True)
class PartSizes:
    """Part cardinalities of a complete multipartite graph.

    Sizes are kept in the order given (positions matter for the
    balancing moves); zeros are legal and denote empty parts.  The
    canonical form, non-increasing with zeros stripped, identifies the
    underlying graph: counts only depend on it.
    """

    sizes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        for s in sizes:
            if s < 0:
                raise ValueError(f"part size must be >= 0, got {s}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> "PartSizes":
        items = [tok.strip() for tok in text.split(",") if tok.strip()]
        if not items:
            raise ValueError("part sizes must name at least one part")
        try:
            sizes = [int(tok) for tok in items]
        except ValueError:
            raise ValueError(f"invalid part sizes {text!r}") from None
        return cls(tuple(sizes))

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.canonical)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def canonical(self) -> tuple[int, ...]:
        return tuple(s for s in sorted(self.sizes, reverse=True) if s > 0)


PartsLike = Union[PartSizes, Iterable[int]]


def _canonical_sizes(parts: PartsLike) -> tuple[int, ...]:
    if isinstance(parts, PartSizes):
        return parts.canonical
    return PartSizes(tuple(parts)).canonical


def turan_parts(n: int, k: int) -> PartSizes:
    """Part sizes of the Turan graph T(n, k): as equal as possible.

    n mod k parts get ceil(n/k) vertices and the rest get floor(n/k).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    q, r = divmod(n, k)
    return PartSizes((q + 1,) * r + (q,) * (k - r))


@lru_cache(maxsize=None)
def _inj_homs(comps: tuple[int, ...], sizes: tuple[int, ...]) -> int:
    if sum(comps) > sum(sizes):
        return 0
    k = len(sizes)
    # one flag per forest vertex: does it need an edge back to the
    # previously placed vertex (i.e. is it a non-initial path vertex)?
    flags: list[bool] = []
    for c in comps:
        flags.append(False)
        flags.extend([True] * (c - 1))
    total = len(flags)
    memo: dict = {}

    def rec(pos: int, forbidden: int, used: tuple[int, ...]) -> int:
        if pos == total:
            return 1
        key = (pos, forbidden, used)
        hit = memo.get(key)
        if hit is not None:
            return hit
        next_bound = pos + 1 < total and flags[pos + 1]
        acc = 0
        for p in range(k):
            if p == forbidden:
                continue
            avail = sizes[p] - used[p]
            if avail <= 0:
                continue
            nxt = used[:p] + (used[p] + 1,) + used[p + 1:]
            acc += avail * rec(pos + 1, p if next_bound else -1, nxt)
        memo[key] = acc
        return acc

    return rec(0, -1, (0,) * k)


def count_injective_homs(forest: LinearForest, parts: PartsLike) -> int:
    """Number of injective maps of the forest into the host that carry
    every forest edge to a host edge (endpoints in distinct parts)."""
    return _inj_homs(forest.components, _canonical_sizes(parts))


def count_copies(forest: LinearForest, parts: PartsLike) -> int:
    """Number of subgraphs of the host isomorphic to the forest."""
    inj = count_injective_homs(forest, parts)
    aut = aut_order(forest)
    copies, rem = divmod(inj, aut)
    assert rem == 0, f"automorphism count {aut} does not divide {inj}"
    return copies


def count_copies_turan(forest: LinearForest, n: int, k: int) -> int:
    """Copy count in the Turan graph T(n, k)."""
    return count_copies(forest, turan_parts(n, k))

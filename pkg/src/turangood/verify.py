"""Machine-checkable verdicts for the extremal counting claims.

Each verifier sweeps a finite parameter space, compares exact counts,
and returns a VerificationReport.  Reports serialize to JSON with the
stable schema

    {claim, params, verdict, maximizers[], counterexample?, ratio?,
     instances_checked}

where counterexample appears only when the verdict is "counterexample"
and ratio only for the extension-identity claims (the observed constant
is an output of the run, never an input).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .forest import (
    LinearForest,
    delete_even_end_pair,
    delete_isolated,
    delete_odd_endpoint,
)
from .multipartite import PartSizes, PartsLike, count_copies, turan_parts
from .oracle import (
    EXHAUSTIVE_CAP_DEFAULT,
    WITNESS_CAP_DEFAULT,
    extremal_search,
)

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    params: dict
    verdict: str
    maximizers: tuple[tuple[int, ...], ...] = ()
    counterexample: dict | None = None
    instances_checked: int = 0
    ratio: str | None = None

    def __post_init__(self) -> None:
        if self.verdict not in (HOLDS, COUNTEREXAMPLE):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == HOLDS and self.counterexample is not None:
            raise ValueError("a holding verdict cannot carry a counterexample")
        if self.instances_checked <= 0:
            raise ValueError("instances_checked must be positive")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "params": self.params,
            "verdict": self.verdict,
            "maximizers": [list(m) for m in self.maximizers],
            "instances_checked": self.instances_checked,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.ratio is not None:
            out["ratio"] = self.ratio
        return out


def partitions_at_most(n: int, k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into at most k positive parts, non-increasing,
    in descending lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    if k == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_at_most(n - first, k - 1, first):
            yield (first,) + rest


def _bipartitions(n: int) -> Iterator[tuple[int, int]]:
    for a in range(1, n // 2 + 1):
        yield (n - a, a)


def _n_values(n_range: Iterable[int]) -> list[int]:
    values = sorted(set(int(n) for n in n_range))
    if not values:
        raise ValueError("n range must be nonempty")
    if values[0] < 0:
        raise ValueError("n must be >= 0")
    return values


def verify_multipartite_max(forest: LinearForest, n: int, k: int) -> VerificationReport:
    """Check that among all complete multipartite graphs on n vertices
    with at most k parts, the Turan partition attains the largest copy
    count.  Ties are legal and all maximizers are reported."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    best = -1
    maximizers: list[tuple[int, ...]] = []
    checked = 0
    for part in partitions_at_most(n, k):
        checked += 1
        cnt = count_copies(forest, part)
        if cnt > best:
            best = cnt
            maximizers = [part]
        elif cnt == best:
            maximizers.append(part)
    target = turan_parts(n, k).canonical
    params = {"forest": str(forest), "n": n, "k": k}
    if target in maximizers:
        return VerificationReport("multipartite-max", params, HOLDS,
                                  maximizers=tuple(maximizers),
                                  instances_checked=checked)
    return VerificationReport(
        "multipartite-max", params, COUNTEREXAMPLE,
        maximizers=tuple(maximizers),
        counterexample={
            "turan_parts": list(target),
            "turan_count": count_copies(forest, target),
            "best_parts": list(maximizers[0]),
            "best_count": best,
        },
        instances_checked=checked,
    )


def balancing_move(parts: PartSizes, i: int, j: int) -> PartSizes:
    """Move floor((sizes[j] - sizes[i]) / 2) vertices from part j to
    part i.  Requires sizes[i] < sizes[j] - 1; afterwards the two parts
    differ by at most one vertex."""
    sizes = list(parts.sizes)
    if not (0 <= i < len(sizes)) or not (0 <= j < len(sizes)) or i == j:
        raise ValueError(f"bad part indices ({i}, {j}) for {len(sizes)} parts")
    if sizes[i] >= sizes[j] - 1:
        raise ValueError(
            f"parts {i} and {j} already balanced within one ({sizes[i]} vs {sizes[j]})")
    moved = (sizes[j] - sizes[i]) // 2
    sizes[i] += moved
    sizes[j] -= moved
    return PartSizes(tuple(sizes))


def balance_trajectory(parts: PartSizes, max_steps: int | None = None) -> list[PartSizes]:
    """Repeatedly balance the currently smallest part against the
    currently largest until all parts are within one vertex, returning
    the intermediate partitions (input excluded)."""
    if parts.k == 0:
        return []
    if max_steps is None:
        max_steps = max(parts.n, 1) + 1
    cur = parts
    out: list[PartSizes] = []
    while True:
        sizes = cur.sizes
        i = sizes.index(min(sizes))
        j = sizes.index(max(sizes))
        if sizes[j] - sizes[i] <= 1:
            return out
        if len(out) >= max_steps:
            raise RuntimeError(f"balancing failed to converge from {parts.sizes}")
        cur = balancing_move(cur, i, j)
        out.append(cur)


def verify_balancing_monotone(forest: LinearForest, parts: PartsLike) -> VerificationReport:
    """Check that no single balancing move decreases the copy count and
    that iterated moves reach the Turan partition."""
    parts = parts if isinstance(parts, PartSizes) else PartSizes(tuple(parts))
    params = {"forest": str(forest), "parts": list(parts.sizes)}
    base = count_copies(forest, parts)
    checked = 0

    def fail(payload: dict) -> VerificationReport:
        return VerificationReport("balance", params, COUNTEREXAMPLE,
                                  counterexample=payload,
                                  instances_checked=max(checked, 1))

    sizes = parts.sizes
    for i in range(len(sizes)):
        for j in range(len(sizes)):
            if i == j or sizes[i] >= sizes[j] - 1:
                continue
            moved = balancing_move(parts, i, j)
            checked += 1
            after = count_copies(forest, moved)
            if after < base:
                return fail({"move": [i, j], "parts_after": list(moved.sizes),
                             "count_before": base, "count_after": after})

    trajectory = balance_trajectory(parts)
    prev_parts, prev = parts, base
    for step in trajectory:
        checked += 1
        cur = count_copies(forest, step)
        if cur < prev:
            return fail({"move_from": list(prev_parts.sizes),
                         "parts_after": list(step.sizes),
                         "count_before": prev, "count_after": cur})
        prev_parts, prev = step, cur

    final = trajectory[-1] if trajectory else parts
    target = turan_parts(parts.n, parts.k)
    checked += 1
    if final.canonical != target.canonical or len(trajectory) > max(parts.n, 1):
        return fail({"reached": list(final.sizes), "target": list(target.sizes),
                     "steps": len(trajectory)})
    return VerificationReport("balance", params, HOLDS,
                              maximizers=(target.canonical,),
                              instances_checked=checked)


def _ratio_report(claim: str, params: dict, samples: list, checked: int) -> VerificationReport:
    """Common tail of the extension-identity verifiers: all sampled
    ratios must agree on one constant."""
    ratios = sorted(set(r for _, r in samples))
    if len(ratios) <= 1:
        ratio = str(ratios[0]) if ratios else None
        return VerificationReport(claim, params, HOLDS,
                                  instances_checked=max(checked, 1), ratio=ratio)
    first = next(s for s in samples if s[1] == ratios[0])
    other = next(s for s in samples if s[1] == ratios[-1])
    return VerificationReport(
        claim, params, COUNTEREXAMPLE,
        counterexample={
            "host_a": first[0], "ratio_a": str(first[1]),
            "host_b": other[0], "ratio_b": str(other[1]),
        },
        instances_checked=max(checked, 1),
    )


def verify_odd_extension_identity(forest: LinearForest, order: int,
                                  n_range: Iterable[int]) -> VerificationReport:
    """Deleting an endpoint of an odd component leaves a forest whose
    copies extend back to the original in x * (n - |V|) ways, x the
    number of even components of the shrunken order.  The ratio of the
    two sides must be one constant over all complete bipartite hosts
    and all n in the range."""
    shrunk = delete_odd_endpoint(forest, order)
    x = shrunk.multiplicity(order - 1)
    values = _n_values(n_range)
    params = {"forest": str(forest), "order": order, "n_range": values}
    samples = []
    checked = 0
    for n in values:
        for a, b in _bipartitions(n):
            checked += 1
            denom = count_copies(forest, (a, b))
            if denom == 0:
                continue
            numer = count_copies(shrunk, (a, b)) * x * (n - shrunk.total_vertices)
            samples.append(({"n": n, "parts": [a, b],
                             "numerator": numer, "denominator": denom},
                            Fraction(numer, denom)))
    return _ratio_report("odd-identity", params, samples, checked)


def verify_even_extension_identity(forest: LinearForest, order: int,
                                   n_range: Iterable[int]) -> VerificationReport:
    """Deleting the last two vertices of an even component leaves a
    forest; copies of the original are rebuilt from an edge uv plus a
    copy of the shrunken forest on the remaining vertices.  Each edge of
    K_{a,b} leaves K_{a-1,b-1}, a component of the shrunken order can be
    extended at two ends, and when the component vanishes (order 2) the
    edge itself becomes the new component with a single orientation."""
    shrunk = delete_even_end_pair(forest, order)
    if order >= 4:
        y = shrunk.multiplicity(order - 2)
        factor = 2
    else:
        y = 1
        factor = 1
    values = _n_values(n_range)
    params = {"forest": str(forest), "order": order, "n_range": values}
    samples = []
    checked = 0
    for n in values:
        for a, b in _bipartitions(n):
            checked += 1
            denom = count_copies(forest, (a, b))
            if denom == 0:
                continue
            rebuilt = a * b * factor * y * count_copies(shrunk, (a - 1, b - 1))
            samples.append(({"n": n, "parts": [a, b],
                             "numerator": rebuilt, "denominator": denom},
                            Fraction(rebuilt, denom)))
    return _ratio_report("even-identity", params, samples, checked)


def verify_isolated_identity(forest: LinearForest,
                             n_range: Iterable[int]) -> VerificationReport:
    """Removing a single-vertex component is an exact bijection:
    N(H, G) * (#P1 components) = N(H - P1, G) * (n - |V(H)| + 1) on
    every complete bipartite host."""
    shrunk = delete_isolated(forest)
    isolated = forest.multiplicity(1)
    values = _n_values(n_range)
    params = {"forest": str(forest), "n_range": values}
    checked = 0
    for n in values:
        for a, b in _bipartitions(n):
            checked += 1
            lhs = count_copies(forest, (a, b)) * isolated
            rhs = count_copies(shrunk, (a, b)) * (n - forest.total_vertices + 1)
            if lhs != rhs:
                return VerificationReport(
                    "isolated-identity", params, COUNTEREXAMPLE,
                    counterexample={"n": n, "parts": [a, b],
                                    "lhs": lhs, "rhs": rhs},
                    instances_checked=checked,
                )
    return VerificationReport("isolated-identity", params, HOLDS,
                              instances_checked=max(checked, 1))


def verify_conjecture(forest: LinearForest, n: int, k: int, *,
                      cap: int = EXHAUSTIVE_CAP_DEFAULT,
                      witness_cap: int = WITNESS_CAP_DEFAULT,
                      workers: int | None = None) -> VerificationReport:
    """Exhaustively check that no K_{k+1}-free graph on n labeled
    vertices holds more copies of the forest than the Turan graph."""
    result = extremal_search(forest, n, k, cap=cap,
                             witness_cap=witness_cap, workers=workers)
    params = {"forest": str(forest), "n": n, "k": k}
    if result.max_count == result.turan_count:
        return VerificationReport("conjecture", params, HOLDS,
                                  instances_checked=result.graphs_scanned)
    return VerificationReport(
        "conjecture", params, COUNTEREXAMPLE,
        counterexample={
            "max_count": result.max_count,
            "turan_count": result.turan_count,
            "witnesses": [w.to_json_dict() for w in result.witnesses],
        },
        instances_checked=result.graphs_scanned,
    )

"""Exact minimum step counts by exhaustive search, plus counting bounds.

The search is iterative deepening on the step count, starting from an
arithmetic lower bound (total work divided by the best possible step).
Within a step, candidate exchanges are branched in canonical pair order
and the globally smallest uncovered pair is forced into the current step,
which breaks step-permutation symmetry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidSizeError, SearchTooLargeError
from .protocols import sbep_formula
from .schedule import PairExchange, SbepStep, Schedule
from .topology import TopologyKind, build_topology

EXHAUSTIVE_CEILING = 8
LCH_CEILING = 6


@dataclass(frozen=True)
class OracleResult:
    n: int
    constraint_model: TopologyKind
    min_steps: int
    witness: Schedule


def chromatic_index_lower_bound(n: int) -> int:
    """Minimum matchings covering all pairs of n hosts under capacity 1:
    n-1 for even n, n for odd n."""
    if n < 2:
        raise InvalidSizeError(f"need at least 2 hosts, got {n}")
    return n - 1 if n % 2 == 0 else n


def _compatible_matching(step: list[tuple[int, int]], cand: tuple[int, int]) -> bool:
    a, b = cand
    return all(a != x and a != y and b != x and b != y for x, y in step)


def _compatible_interval(step: list[tuple[int, int]], cand: tuple[int, int]) -> bool:
    lo, hi = cand
    return all(hi <= x or lo >= y for x, y in step)


def _search_min_cover(n, pairs, compatible, step_weight, capacity_per_step):
    """Smallest number of steps covering ``pairs``; returns (count, steps).

    ``step_weight(pair)`` and ``capacity_per_step`` give the counting bound
    used both for the starting depth and for pruning.
    """
    total = sum(step_weight(p) for p in pairs)
    lower = max(1, math.ceil(total / capacity_per_step))

    def extend(step, cand, remaining, steps_left, acc):
        if not cand:
            rest = [p for p in remaining if p not in step]
            return cover(rest, steps_left - 1, acc + [sorted(step)])
        head, tail = cand[0], cand[1:]
        if compatible(step, head):
            step.append(head)
            found = extend(step, tail, remaining, steps_left, acc)
            step.pop()
            if found is not None:
                return found
        return extend(step, tail, remaining, steps_left, acc)

    def cover(remaining, steps_left, acc):
        if not remaining:
            return acc
        if steps_left == 0:
            return None
        if sum(step_weight(p) for p in remaining) > steps_left * capacity_per_step:
            return None
        # WLOG the smallest remaining pair opens the current step.
        first, rest = remaining[0], remaining[1:]
        return extend([first], tuple(rest), remaining, steps_left, acc)

    depth = lower
    while True:
        found = cover(list(pairs), depth, [])
        if found is not None:
            return depth, found
        depth += 1


def min_steps_bruteforce(kind: TopologyKind, n: int) -> OracleResult:
    """Exact minimum SBEP count for ``kind`` with a witness schedule.

    Exhaustive up to n=8 (n=6 for the chain model); larger sizes raise
    SearchTooLargeError and should use the bound operations instead.
    """
    if n < 2:
        raise InvalidSizeError(f"need at least 2 hosts, got {n}")
    ceiling = LCH_CEILING if kind is TopologyKind.LCH else EXHAUSTIVE_CEILING
    if n > ceiling:
        raise SearchTooLargeError(
            f"exhaustive search capped at n={ceiling} for {kind.value}; "
            "use chromatic_index_lower_bound / overhead_table instead"
        )
    topo = build_topology(kind, n)
    pairs = sorted(combinations(range(1, n + 1), 2))

    if kind is TopologyKind.FCN_FULL:
        count, steps = 1, [pairs]
    elif kind is TopologyKind.LCH:
        count, steps = _search_min_cover(
            n,
            pairs,
            _compatible_interval,
            step_weight=lambda p: p[1] - p[0],
            capacity_per_step=n - 1,
        )
    else:
        count, steps = _search_min_cover(
            n,
            pairs,
            _compatible_matching,
            step_weight=lambda p: 1,
            capacity_per_step=n // 2,
        )

    witness = Schedule(
        topo,
        tuple(
            SbepStep(i + 1, tuple(PairExchange(a, b) for a, b in step))
            for i, step in enumerate(steps)
        ),
    )
    return OracleResult(n=n, constraint_model=kind, min_steps=count, witness=witness)


def overhead_table(n_range) -> list[tuple[int, int, int, int]]:
    """(n, protocol steps, matching lower bound, overhead) per n in range."""
    rows = []
    for n in n_range:
        if not 2 <= n <= 50:
            raise InvalidSizeError(f"overhead table covers n in [2, 50], got {n}")
        steps = sbep_formula(n)
        bound = chromatic_index_lower_bound(n)
        rows.append((n, steps, bound, steps - bound))
    return rows

"""Exact brute-force solvers for checking the approximations at desk scale.

Subsets are enumerated by increasing size, each size in lexicographic
order, so the returned witness is always the lexicographically least
minimum. Not meant for production-sized instances.
"""

from __future__ import annotations

import os
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import combinations

from lawsmith.errors import BudgetExceeded, NotGapFree, NotUseful
from lawsmith.game import Game, Law, as_law, is_gap_free_direct, is_useful_direct
from lawsmith.hypergraph import Hypergraph, is_vertex_cover

BUDGET_ENV = "LAWSMITH_BUDGET_MS"
DEFAULT_MAX_MILLIS = 10_000


def _env_millis() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_MAX_MILLIS


@dataclass(frozen=True)
class SearchBudget:
    max_universe: int = 20
    max_millis: int = field(default_factory=_env_millis)


def _smallest(
    universe: Iterable[str], accept: Callable[[frozenset[str]], bool], budget: SearchBudget
) -> frozenset[str]:
    items = sorted(universe)
    if len(items) > budget.max_universe:
        raise BudgetExceeded(
            f"ground set has {len(items)} elements, budget allows {budget.max_universe}"
        )
    deadline = time.monotonic() + budget.max_millis / 1000
    for size in range(len(items) + 1):
        for combo in combinations(items, size):
            candidate = frozenset(combo)
            if accept(candidate):
                return candidate
            if time.monotonic() > deadline:
                raise BudgetExceeded(f"search exceeded {budget.max_millis} ms")
    # Callers guarantee the full set is accepted.
    raise AssertionError("no accepted subset")


def exact_min_vertex_cover(h: Hypergraph, budget: SearchBudget | None = None) -> frozenset[str]:
    budget = budget or SearchBudget()
    return _smallest(h.vertices, lambda c: is_vertex_cover(h, c), budget)


def exact_min_useful_reduction(
    g: Game, law: Law | Iterable[str], budget: SearchBudget | None = None
) -> Law:
    law = as_law(law)
    if not is_useful_direct(g, law):
        raise NotUseful("the input law is not useful")
    budget = budget or SearchBudget()
    return Law(_smallest(law.banned, lambda c: is_useful_direct(g, c), budget))


def exact_min_gap_free_reduction(
    g: Game, law: Law | Iterable[str], budget: SearchBudget | None = None
) -> Law:
    law = as_law(law)
    if not is_gap_free_direct(g, law):
        raise NotGapFree("the input law is not gap-free")
    budget = budget or SearchBudget()
    return Law(_smallest(law.banned, lambda c: is_gap_free_direct(g, c), budget))

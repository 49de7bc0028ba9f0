"""Verification and approximate minimization of useful and gap-free laws.

Every routine here works through vertex covers: usefulness is a cover of
the game's support graph, and a safe action ``d`` for agent ``a`` under a
law is a cover of the graph returned by :func:`safe_action_graph`.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from lawsmith.errors import LawOutOfUniverse, NotGapFree, NotUseful
from lawsmith.game import Game, Law, as_law, is_safable
from lawsmith.hypergraph import (
    Hypergraph,
    approx_min_vertex_cover,
    induced_subgraph,
    is_minimal_vertex_cover,
    is_vertex_cover,
)
from lawsmith.reductions import game_to_graph, safe_action_graph


@dataclass(frozen=True)
class Witness:
    """How a reduced law keeps its property.

    ``case`` is ``useful-cover``, ``kept-safe-action`` (the safe action was
    already lawful) or ``new-safe-action`` (the action is unbanned by the
    reduction).
    """

    case: str
    agent: str | None = None
    action: str | None = None

    def __str__(self) -> str:
        if self.agent is None:
            return self.case
        return f"{self.case}({self.agent},{self.action})"


@dataclass(frozen=True)
class ReductionResult:
    law: Law
    witness: Witness | None = None


def _checked(g: Game, law) -> Law:
    law = as_law(law)
    if not law.banned <= g.universe:
        raise LawOutOfUniverse(
            f"law bans actions outside the game: {sorted(law.banned - g.universe)}"
        )
    return law


def _safable_pairs(g: Game) -> Iterator[tuple[str, str, Hypergraph]]:
    """Yield ``(agent, action, H)`` for every safable action in scan order."""
    for a in g.agents:
        for d in sorted(g.actions[a]):
            if is_safable(g, d):
                yield a, d, safe_action_graph(g, a, d)


def is_useful_law(g: Game, law: Law | Iterable[str]) -> bool:
    law = _checked(g, law)
    return is_vertex_cover(game_to_graph(g), law.banned)


def is_minimal_useful_law(g: Game, law: Law | Iterable[str]) -> bool:
    law = _checked(g, law)
    return is_minimal_vertex_cover(game_to_graph(g), law.banned)


def approx_min_useful_reduction(g: Game, law: Law | Iterable[str]) -> ReductionResult:
    """A useful subset of ``law`` within a factor ``|A|`` of the smallest one."""
    law = _checked(g, law)
    graph = game_to_graph(g)
    if not is_vertex_cover(graph, law.banned):
        raise NotUseful("the input law is not useful")
    cover = approx_min_vertex_cover(induced_subgraph(graph, law.banned), prune=True)
    return ReductionResult(Law(cover), Witness("useful-cover"))


def is_gap_free_law(g: Game, law: Law | Iterable[str]) -> bool:
    law = _checked(g, law)
    if is_vertex_cover(game_to_graph(g), law.banned):
        return True
    for _, d, h in _safable_pairs(g):
        if d not in law.banned and is_vertex_cover(h, law.banned):
            return True
    return False


def is_minimal_gap_free_law(g: Game, law: Law | Iterable[str]) -> bool:
    law = _checked(g, law)
    if not is_gap_free_law(g, law):
        return False
    banned = law.banned
    graph = game_to_graph(g)
    if is_vertex_cover(graph, banned) and not is_minimal_vertex_cover(graph, banned):
        return False
    for _, d, h in _safable_pairs(g):
        if d not in banned:
            if is_vertex_cover(h, banned) and not is_minimal_vertex_cover(h, banned):
                return False
        elif is_vertex_cover(h, banned - {d}):
            return False
    return True


def approx_min_gap_free_reduction(g: Game, law: Law | Iterable[str]) -> ReductionResult:
    """A gap-free subset of ``law`` within a factor ``|A|`` of the smallest one.

    Tries every way a reduction can stay gap-free (stay useful, keep a
    lawful safe action, or unban an action to make it safe), approximates
    a minimum cover for each, and keeps the smallest. Ties go to the
    earlier candidate; the input law itself is the first incumbent, and
    its witness is ``None``.
    """
    law = _checked(g, law)
    if not is_gap_free_law(g, law):
        raise NotGapFree("the input law is not gap-free")
    banned = law.banned
    best, witness = banned, None

    def consider(graph: Hypergraph, base: frozenset[str], tag: Witness):
        nonlocal best, witness
        candidate = approx_min_vertex_cover(induced_subgraph(graph, base), prune=True)
        if len(candidate) < len(best):
            best, witness = candidate, tag

    graph = game_to_graph(g)
    if is_vertex_cover(graph, banned):
        consider(graph, banned, Witness("useful-cover"))
    for a, d, h in _safable_pairs(g):
        if d not in banned:
            if is_vertex_cover(h, banned):
                consider(h, banned, Witness("kept-safe-action", a, d))
        elif is_vertex_cover(h, banned - {d}):
            consider(h, banned - {d}, Witness("new-safe-action", a, d))
    return ReductionResult(Law(best), witness)

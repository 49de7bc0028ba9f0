"""Translations between games and hypergraphs.

``game_to_graph`` and ``safe_action_graph`` drive the law algorithms;
``graph_to_game`` and ``useful_to_gapfree_game`` are the hardness gadgets,
used here as instance generators and round-trip test subjects.
"""

from __future__ import annotations

from dataclasses import dataclass

from lawsmith.errors import ActionNotAvailable, NamesNotFresh, NotSafable
from lawsmith.game import Game, Profile, is_safable, support_set
from lawsmith.hypergraph import Hypergraph


@dataclass(frozen=True)
class FreshNames:
    """Identifiers for the extra agent and its two actions in the gap-free gadget."""

    gamma_agent: str = "__gamma"
    action_p: str = "__p"
    action_n: str = "__n"


def game_to_graph(g: Game) -> Hypergraph:
    """The ``|A|``-graph over all actions whose edges are prohibited supports."""
    return Hypergraph(g.universe, (support_set(p) for p in g.prohibition), len(g.agents))


def graph_to_game(h: Hypergraph) -> Game:
    k = h.rank
    agents = [str(i) for i in range(1, k + 1)]
    prohibition = []
    for e in h.edges:
        order = sorted(e)
        # the ((i mod |e|) + 1)-th item, 1-based
        prohibition.append(Profile({str(i): order[i % len(order)] for i in range(1, k + 1)}))
    return Game(agents, {a: h.vertices for a in agents}, prohibition)


def useful_to_gapfree_game(g: Game, names: FreshNames = FreshNames()) -> Game:
    """Extend ``g`` so that its gap-free laws over the old actions are exactly
    the useful laws of ``g``."""
    gamma, p, n = names.gamma_agent, names.action_p, names.action_n
    clashes = []
    if gamma in g.agents:
        clashes.append(f"agent {gamma!r} already exists")
    if p == n:
        clashes.append(f"p and n must differ, both are {p!r}")
    clashes += [f"action {x!r} already exists" for x in (p, n) if x in g.universe]
    if clashes:
        raise NamesNotFresh("; ".join(clashes))

    agents = [*g.agents, gamma]
    actions = {a: g.actions[a] | {n} for a in g.agents}
    actions[gamma] = frozenset((p, n))
    extended = [Profile({**q, gamma: p}) for q in g.prohibition]
    single = [
        Profile({**{b: n for b in agents}, a: d})
        for a in g.agents for d in sorted(g.actions[a])
    ]
    all_n = [Profile({b: n for b in agents})]
    return Game(agents, actions, extended + single + all_n)


def safe_action_graph(g: Game, agent: str, action: str) -> Hypergraph:
    """Graph whose covers are the laws making ``action`` safe for ``agent``."""
    if action not in g.actions_of(agent):
        raise ActionNotAvailable(f"{action!r} is not an action of agent {agent!r}")
    if not is_safable(g, action):
        raise NotSafable(f"{action!r} is not safable")
    edges = (support_set(q) - {action} for q in g.prohibition if q[agent] == action)
    return Hypergraph(g.universe - {action}, edges, len(g.agents))

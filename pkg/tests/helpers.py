"""Shared fixtures data, independent brute-force oracles, and instance suites."""

from __future__ import annotations

from itertools import chain, combinations, product

from hypothesis import strategies as st

from lawsmith import Game, Profile, law_imposed, is_safe_action, support_set
from lawsmith.documents import bundled, game_from_document
from lawsmith.generators import SplitMix64, random_game, random_graph

FACTORY_LAWS = {
    "L0": {"d_a^1", "d_a^2", "d_b^2", "d_b^3", "d_c^1", "d_c^3"},
    "L1": {"d_a^1", "d_b^2", "d_c^3"},
    "L2": {"d_a^1", "d_b^2"},
    "L3": {"d_a^1"},
    "L4": set(),
}


def factory() -> Game:
    return game_from_document(bundled("factory.json"))


def pennies() -> Game:
    return game_from_document(bundled("pennies.json"))


def day(i: int) -> Profile:
    return Profile({x: f"d_{x}^{i}" for x in "abc"})


# brute-force oracles, written without the library's cover machinery

def powerset(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def proper_subsets(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items)))


def useful_by_intersection(g: Game, law) -> bool:
    law = set(law)
    return all(law & support_set(p) for p in g.prohibition)


def brute_min(universe, accept):
    """Minimum accepted subset, lexicographically least among ties."""
    best = None
    for bits in product((0, 1), repeat=len(universe)):
        chosen = tuple(v for v, b in zip(sorted(universe), bits) if b)
        if accept(set(chosen)):
            key = (len(chosen), chosen)
            if best is None or key < best:
                best = key
    return set(best[1]) if best else None


def safable_by_definition(g: Game, action: str) -> bool:
    """Some law and some agent make ``action`` safe (exhaustive over laws)."""
    for law in powerset(g.universe):
        imposed = law_imposed(g, law)
        if any(is_safe_action(imposed, a, action) for a in g.agents):
            return True
    return False


def minimal_by_brute_force(prop, g: Game, law) -> bool:
    return prop(g, law) and not any(prop(g, set(s)) for s in proper_subsets(law))


# hypothesis strategies

@st.composite
def games(draw, max_agents=3, pool_size=5, max_prohibited=12, allow_empty=True):
    n = draw(st.integers(1, max_agents))
    agents = [f"g{i}" for i in range(n)]
    pool = [f"x{j}" for j in range(pool_size)]
    min_size = 0 if allow_empty else 1
    actions = {a: draw(st.sets(st.sampled_from(pool), min_size=min_size, max_size=pool_size)) for a in agents}
    space = list(product(*(sorted(actions[a]) for a in agents)))
    if space:
        chosen = draw(st.lists(st.sampled_from(space), max_size=max_prohibited, unique=True))
    else:
        chosen = []
    return Game(agents, actions, [dict(zip(agents, c)) for c in chosen])


@st.composite
def games_with_law(draw, **kwargs):
    g = draw(games(**kwargs))
    law = draw(st.sets(st.sampled_from(sorted(g.universe)))) if g.universe else set()
    return g, law


# seeded suites for the acceptance criteria

def seeded_games(count, seed, max_agents=3, max_actions=3, max_prohibited=15, shared=True):
    """Deterministic mix of disjoint and overlapping random games."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        agents = 1 + rng.below(max_agents)
        actions = 1 + rng.below(max_actions)
        prohibitions = rng.below(max_prohibited + 1)
        pool = 0
        if shared and rng.below(2):
            pool = actions + rng.below(actions * (agents - 1) + 1)
        out.append(random_game(rng, agents, actions, prohibitions, pool))
    return out


def seeded_graphs(count, seed, max_rank=4, max_vertices=12, max_edges=20):
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        rank = 1 + rng.below(max_rank)
        vertices = 1 + rng.below(max_vertices)
        edges = rng.below(max_edges + 1)
        out.append(random_graph(rng, vertices, edges, rank))
    return out, rng

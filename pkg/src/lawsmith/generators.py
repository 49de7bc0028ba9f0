"""Seeded instance generators.

Randomness comes from SplitMix64 (Steele, Lea and Flood, 2014) with
rejection sampling for bounded integers, implemented here so that a seed
reproduces the same document on every Python version. Changing the
generator or the way draws are consumed is a breaking change.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod

from lawsmith.documents import (
    bundled,
    game_from_document,
    game_to_document,
    graph_from_document,
    graph_to_document,
)
from lawsmith.errors import CapExceeded
from lawsmith.game import Game, Profile
from lawsmith.hypergraph import Hypergraph
from lawsmith.reductions import graph_to_game, useful_to_gapfree_game

MASK64 = (1 << 64) - 1

CAPS = {
    "agents": 6,
    "actions": 8,
    "prohibitions": 64,
    "pool": 24,
    "vertices": 24,
    "edges": 64,
    "rank": 6,
}

KINDS = ("random-game", "random-graph", "factory", "matching-pennies", "graph-gadget", "gapfree-gadget")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def sample_indices(self, n: int, m: int) -> list[int]:
        """``m`` distinct integers from ``[0, n)``, sorted (Floyd's algorithm)."""
        chosen: set[int] = set()
        for j in range(n - m, n):
            t = self.below(j + 1)
            chosen.add(j if t in chosen else t)
        return sorted(chosen)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for :func:`generate`.

    ``pool`` > 0 makes random-game agents draw their actions from a shared
    pool of that many actions, so action sets overlap; 0 keeps them
    disjoint. ``exact_rank`` makes every random edge have exactly ``rank``
    vertices. ``source`` is an optional input document for the gadget
    kinds; without it a random instance is drawn first.
    """

    kind: str
    seed: int = 0
    agents: int = 3
    actions: int = 3
    prohibitions: int = 8
    pool: int = 0
    vertices: int = 8
    edges: int = 10
    rank: int = 3
    exact_rank: bool = False
    source: dict | None = None


def _check_caps(spec: GeneratorSpec) -> None:
    if spec.kind not in KINDS:
        raise ValueError(f"unknown generator kind {spec.kind!r}; expected one of {KINDS}")
    over = [
        f"{name}={getattr(spec, name)} exceeds cap {cap}"
        for name, cap in CAPS.items()
        if getattr(spec, name) > cap
    ]
    if spec.agents < 1 or spec.rank < 1:
        over.append("agents and rank must be at least 1")
    if min(spec.actions, spec.prohibitions, spec.pool, spec.vertices, spec.edges) < 0:
        over.append("size parameters must be nonnegative")
    if spec.pool and spec.actions > spec.pool:
        over.append(f"actions={spec.actions} cannot be drawn from pool={spec.pool}")
    if over:
        raise CapExceeded("; ".join(over))


def random_game(
    rng: SplitMix64, agents: int, actions: int, prohibitions: int, pool: int = 0
) -> Game:
    """Prohibited profiles are drawn uniformly without replacement from the
    product of the action sets (capped at its size)."""
    names = [f"a{i}" for i in range(1, agents + 1)]
    if pool:
        shared = [f"d{j:02d}" for j in range(pool)]
        sets = {a: [shared[j] for j in rng.sample_indices(pool, actions)] for a in names}
    else:
        sets = {a: [f"d_{a}^{i}" for i in range(1, actions + 1)] for a in names}
    radices = [len(sets[a]) for a in names]
    space = prod(radices)
    profiles = []
    for index in rng.sample_indices(space, min(prohibitions, space)):
        choice = {}
        for a, r in zip(reversed(names), reversed(radices)):
            index, digit = divmod(index, r)
            choice[a] = sets[a][digit]
        profiles.append(Profile(choice))
    return Game(names, sets, profiles)


def _unrank_combination(n: int, size: int, index: int) -> list[int]:
    """The ``index``-th ``size``-subset of ``range(n)`` in lexicographic order."""
    out = []
    start = 0
    for remaining in range(size, 0, -1):
        for x in range(start, n):
            block = comb(n - x - 1, remaining - 1)
            if index < block:
                out.append(x)
                start = x + 1
                break
            index -= block
    return out


def random_graph(
    rng: SplitMix64, vertices: int, edges: int, rank: int, exact_rank: bool = False
) -> Hypergraph:
    """Edges are distinct, drawn uniformly from the nonempty subsets of size
    at most ``rank`` (or exactly ``rank``)."""
    names = [f"v{i:02d}" for i in range(1, vertices + 1)]
    sizes = [rank] if exact_rank else list(range(1, rank + 1))
    blocks = [(s, comb(vertices, s)) for s in sizes if s <= vertices]
    total = sum(c for _, c in blocks)
    chosen = []
    for index in rng.sample_indices(total, min(edges, total)):
        for s, c in blocks:
            if index < c:
                chosen.append([names[i] for i in _unrank_combination(vertices, s, index)])
                break
            index -= c
    return Hypergraph(names, chosen, rank)


def generate(spec: GeneratorSpec) -> dict:
    """Build the requested instance as a game or graph document."""
    _check_caps(spec)
    rng = SplitMix64(spec.seed)
    if spec.kind == "factory":
        return bundled("factory.json")
    if spec.kind == "matching-pennies":
        return bundled("pennies.json")
    if spec.kind == "random-game":
        return game_to_document(random_game(rng, spec.agents, spec.actions, spec.prohibitions, spec.pool))
    if spec.kind == "random-graph":
        return graph_to_document(random_graph(rng, spec.vertices, spec.edges, spec.rank, spec.exact_rank))
    if spec.kind == "graph-gadget":
        if spec.source is not None:
            h = graph_from_document(spec.source)
        else:
            h = random_graph(rng, spec.vertices, spec.edges, spec.rank, spec.exact_rank)
        return game_to_document(graph_to_game(h))
    # gapfree-gadget
    if spec.source is not None:
        g = game_from_document(spec.source)
    else:
        g = random_game(rng, spec.agents, spec.actions, spec.prohibitions, spec.pool)
    return game_to_document(useful_to_gapfree_game(g))

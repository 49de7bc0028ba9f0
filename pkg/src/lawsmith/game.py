"""Games, laws, and the definitional checks built directly on them.

Everything here follows the plain definitions (law-imposed games, safe
actions, legal and counterfactual responsibility) without going through
hypergraphs, so these functions double as oracles for :mod:`lawsmith.law_design`.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from lawsmith.errors import LawOutOfUniverse, NotProhibited, UnknownAgent


class Profile(Mapping):
    """An immutable, hashable assignment ``agent -> action``."""

    __slots__ = ("_map", "_key")

    def __init__(self, choices: Mapping[str, str] | Iterable[tuple[str, str]] = (), **extra: str):
        mapping = dict(choices, **extra)
        self._key = tuple(sorted(mapping.items()))
        self._map = dict(self._key)

    def __getitem__(self, agent: str) -> str:
        return self._map[agent]

    def __iter__(self) -> Iterator[str]:
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __hash__(self) -> int:
        return hash(self._key)

    def __eq__(self, other) -> bool:
        if isinstance(other, Profile):
            return self._key == other._key
        if isinstance(other, Mapping):
            return self._map == dict(other)
        return NotImplemented

    def __lt__(self, other: Profile) -> bool:
        return self._key < other._key

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}={d}" for a, d in self._key)
        return f"Profile({inner})"

    def as_dict(self) -> dict[str, str]:
        return dict(self._map)


def _as_profile(p) -> Profile:
    return p if isinstance(p, Profile) else Profile(p)


class Game:
    """A one-shot concurrent game ``(agents, actions, prohibition)``.

    Construction normalizes containers (sorted agent tuple, frozen action
    sets, a frozenset of profiles) but does not reject malformed input;
    call :func:`validate_game` for that.
    """

    __slots__ = ("agents", "actions", "prohibition", "_universe")

    def __init__(
        self,
        agents: Iterable[str],
        actions: Mapping[str, Iterable[str]],
        prohibition: Iterable[Mapping[str, str]] = (),
    ):
        self.agents: tuple[str, ...] = tuple(sorted(set(agents)))
        self.actions: Mapping[str, frozenset[str]] = MappingProxyType(
            {a: frozenset(ds) for a, ds in sorted(actions.items())}
        )
        self.prohibition: frozenset[Profile] = frozenset(_as_profile(p) for p in prohibition)
        universe: set[str] = set()
        for ds in self.actions.values():
            universe |= ds
        self._universe = frozenset(universe)

    @property
    def universe(self) -> frozenset[str]:
        """All actions of all agents."""
        return self._universe

    def actions_of(self, agent: str) -> frozenset[str]:
        if agent not in self.agents:
            raise UnknownAgent(f"unknown agent {agent!r}")
        return self.actions.get(agent, frozenset())

    def sorted_prohibition(self) -> list[Profile]:
        return sorted(self.prohibition)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Game):
            return NotImplemented
        return (
            self.agents == other.agents
            and dict(self.actions) == dict(other.actions)
            and self.prohibition == other.prohibition
        )

    def __hash__(self) -> int:
        return hash((self.agents, tuple(self.actions.items()), self.prohibition))

    def __repr__(self) -> str:
        return (
            f"Game(agents={list(self.agents)}, "
            f"actions={ {a: sorted(ds) for a, ds in self.actions.items()} }, "
            f"prohibited={len(self.prohibition)})"
        )


@dataclass(frozen=True)
class Law:
    """A set of banned actions. Laws are agent-independent."""

    banned: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "banned", frozenset(self.banned))

    def __len__(self) -> int:
        return len(self.banned)

    def __iter__(self):
        return iter(sorted(self.banned))

    def __contains__(self, action) -> bool:
        return action in self.banned

    def __le__(self, other: Law) -> bool:
        return self.banned <= other.banned

    def __lt__(self, other: Law) -> bool:
        return self.banned < other.banned


def as_law(law: Law | Iterable[str]) -> Law:
    return law if isinstance(law, Law) else Law(frozenset(law))


class Verdict(str, enum.Enum):
    LEGAL = "legal"
    COUNTERFACTUAL = "counterfactual"
    NONE = "none"


@dataclass(frozen=True)
class ResponsibilityVerdict:
    profile: Profile
    per_agent: Mapping[str, Verdict]

    @property
    def responsible(self) -> list[str]:
        return [a for a, v in self.per_agent.items() if v is not Verdict.NONE]

    def __str__(self) -> str:
        return ", ".join(f"{a}: {v.value}" for a, v in self.per_agent.items())


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_game(g: Game) -> ValidationReport:
    report = ValidationReport()
    if not g.agents:
        report.violations.append("agents nonempty: the game has no agents")
    for a in g.agents:
        if not isinstance(a, str) or not a:
            report.violations.append(f"agent identifiers must be nonempty strings, got {a!r}")
        if a not in g.actions:
            report.violations.append(f"agent {a!r} has no action set")
    for a, ds in g.actions.items():
        if a not in g.agents:
            report.violations.append(f"action set given for unknown agent {a!r}")
        for d in sorted(ds, key=repr):
            if not isinstance(d, str) or not d:
                report.violations.append(
                    f"action identifiers must be nonempty strings, got {d!r} for agent {a!r}"
                )
    agents = set(g.agents)
    for p in g.sorted_prohibition():
        if set(p) != agents:
            report.violations.append(f"prohibited profile {p!r} is not total over the agents")
            continue
        for a, d in p.items():
            if d not in g.actions.get(a, ()):
                report.violations.append(
                    f"P subset of prod(Delta): profile {p!r} assigns {d!r} to {a!r}, "
                    f"which is not among its actions"
                )
    return report


def validate_law(g: Game, law: Law | Iterable[str]) -> ValidationReport:
    """Check ``law`` against ``g``; banning all of an agent's actions is a warning."""
    law = as_law(law)
    report = ValidationReport()
    outside = sorted(law.banned - g.universe)
    if outside:
        report.violations.append(f"law bans actions outside the game: {outside}")
    for a in g.agents:
        ds = g.actions.get(a, frozenset())
        if ds and ds <= law.banned:
            report.warnings.append(f"law bans every action of agent {a!r}")
    return report


def _checked(g: Game, law) -> Law:
    law = as_law(law)
    if not law.banned <= g.universe:
        raise LawOutOfUniverse(
            f"law bans actions outside the game: {sorted(law.banned - g.universe)}"
        )
    return law


def support_set(p: Mapping[str, str]) -> frozenset[str]:
    """The distinct actions played in ``p``."""
    return frozenset(p.values())


def law_imposed(g: Game, law: Law | Iterable[str]) -> Game:
    law = _checked(g, law)
    lawful = {a: ds - law.banned for a, ds in g.actions.items()}
    kept = [p for p in g.prohibition if all(d in lawful[a] for a, d in p.items())]
    return Game(g.agents, lawful, kept)


def is_useful_direct(g: Game, law: Law | Iterable[str]) -> bool:
    """True iff no prohibited profile survives in the law-imposed game."""
    return not law_imposed(g, law).prohibition


def is_safe_action(g: Game, agent: str, action: str) -> bool:
    if action not in g.actions_of(agent):
        return False
    return all(p[agent] != action for p in g.prohibition)


def is_safable(g: Game, action: str) -> bool:
    if action not in g.universe:
        return False
    target = frozenset((action,))
    return all(support_set(p) != target for p in g.prohibition)


def principal_agents(g: Game, law: Law | Iterable[str]) -> list[str]:
    """Agents holding a safe action in the law-imposed game."""
    imposed = law_imposed(g, law)
    return [
        a for a in imposed.agents
        if any(is_safe_action(imposed, a, d) for d in sorted(imposed.actions[a]))
    ]


def _verdict(p: Profile, law: Law, principals: set[str]) -> ResponsibilityVerdict:
    lawful = not (support_set(p) & law.banned)
    per_agent = {}
    for a in sorted(p):
        if p[a] in law.banned:
            per_agent[a] = Verdict.LEGAL
        elif lawful and a in principals:
            per_agent[a] = Verdict.COUNTERFACTUAL
        else:
            per_agent[a] = Verdict.NONE
    return ResponsibilityVerdict(p, MappingProxyType(per_agent))


def attribute_responsibility(g: Game, law: Law | Iterable[str], profile) -> ResponsibilityVerdict:
    law = _checked(g, law)
    profile = _as_profile(profile)
    if profile not in g.prohibition:
        raise NotProhibited(f"{profile!r} is not a prohibited profile")
    return _verdict(profile, law, set(principal_agents(g, law)))


def is_gap_free_direct(g: Game, law: Law | Iterable[str]) -> bool:
    """True iff every prohibited profile has a legally or counterfactually responsible agent."""
    law = _checked(g, law)
    principals = set(principal_agents(g, law))
    return all(_verdict(p, law, principals).responsible for p in g.prohibition)

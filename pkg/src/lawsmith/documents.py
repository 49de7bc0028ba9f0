"""JSON documents for games, graphs, laws and profiles.

Saved documents are canonical: keys sorted, agents, actions and vertices
sorted, prohibited profiles and edges in a fixed order. ``load(save(x))``
reproduces ``x`` and ``save(load(doc))`` reproduces a canonical ``doc``.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from lawsmith.errors import ParseError, ValidationError
from lawsmith.game import Game, Law, Profile, validate_game
from lawsmith.hypergraph import Hypergraph


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str, source: str = "<string>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, where=f"{source}: line {exc.lineno} column {exc.colno}") from None


def read_json(path) -> object:
    path = Path(path)
    text = _bundled_text(path.name) if not path.exists() and _is_bundled(path) else None
    if text is None:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(exc.strerror or str(exc), where=str(path)) from None
    return parse_json(text, str(path))


def _is_bundled(path: Path) -> bool:
    return path.parent == Path(".") and resources.files("lawsmith.data").joinpath(path.name).is_file()


def _bundled_text(name: str) -> str:
    return resources.files("lawsmith.data").joinpath(name).read_text(encoding="utf-8")


def bundled(name: str):
    """Decoded contents of a document shipped in ``lawsmith/data``."""
    return parse_json(_bundled_text(name), name)


# game documents

def game_to_document(g: Game) -> dict:
    return {
        "agents": list(g.agents),
        "actions": {a: sorted(ds) for a, ds in g.actions.items()},
        "prohibited": [p.as_dict() for p in g.sorted_prohibition()],
    }


def _string_list(value, where: str) -> list[str]:
    if not isinstance(value, list):
        raise ParseError("expected a list of strings", where=where)
    for i, item in enumerate(value):
        if not isinstance(item, str):
            raise ParseError(f"expected a string, got {type(item).__name__}", where=f"{where}[{i}]")
    return value


def _require_object(doc, keys: tuple[str, ...], what: str) -> dict:
    if not isinstance(doc, dict):
        raise ParseError(f"{what} document must be a JSON object")
    for key in keys:
        if key not in doc:
            raise ParseError(f"missing field {key!r}", where=what)
    return doc


def profile_from_document(doc, where: str = "profile") -> Profile:
    if isinstance(doc, list):
        raise ParseError("profiles must map agents to actions, not be positional arrays", where=where)
    if not isinstance(doc, dict):
        raise ParseError("expected an object mapping agents to actions", where=where)
    for agent, action in doc.items():
        if not isinstance(action, str):
            raise ParseError(f"expected a string, got {type(action).__name__}", where=f"{where}.{agent}")
    return Profile(doc)


def game_from_document(doc) -> Game:
    doc = _require_object(doc, ("agents", "actions", "prohibited"), "game")
    agents = _string_list(doc["agents"], "agents")
    actions = doc["actions"]
    if not isinstance(actions, dict):
        raise ParseError("expected an object mapping agents to action lists", where="actions")
    parsed = {a: _string_list(ds, f"actions.{a}") for a, ds in actions.items()}
    prohibited = doc["prohibited"]
    if not isinstance(prohibited, list):
        raise ParseError("expected a list of profiles", where="prohibited")
    profiles = [profile_from_document(p, f"prohibited[{i}]") for i, p in enumerate(prohibited)]

    violations = []
    dupes = sorted({a for a in agents if agents.count(a) > 1})
    if dupes:
        violations.append(f"agents must be unique, repeated: {dupes}")
    g = Game(agents, parsed, profiles)
    violations += validate_game(g).violations
    if violations:
        raise ValidationError(violations)
    return g


def load_game(path) -> Game:
    return game_from_document(read_json(path))


def save_game(g: Game, path) -> None:
    Path(path).write_text(dumps(game_to_document(g)), encoding="utf-8")


# graph documents

def graph_to_document(h: Hypergraph) -> dict:
    return {
        "rank": h.rank,
        "vertices": list(h.vertices),
        "edges": [sorted(e) for e in h.edges],
    }


def graph_from_document(doc) -> Hypergraph:
    doc = _require_object(doc, ("rank", "vertices", "edges"), "graph")
    rank = doc["rank"]
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise ParseError("expected an integer", where="rank")
    vertices = _string_list(doc["vertices"], "vertices")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError("expected a list of edges", where="edges")
    parsed = [_string_list(e, f"edges[{i}]") for i, e in enumerate(edges)]
    return Hypergraph(vertices, parsed, rank)


def load_graph(path) -> Hypergraph:
    return graph_from_document(read_json(path))


def save_graph(h: Hypergraph, path) -> None:
    Path(path).write_text(dumps(graph_to_document(h)), encoding="utf-8")


# laws and profiles

def law_to_document(law: Law) -> dict:
    return {"banned": sorted(law.banned)}


def law_from_document(doc) -> Law:
    doc = _require_object(doc, ("banned",), "law")
    return Law(frozenset(_string_list(doc["banned"], "banned")))


def _inline_or_file(value: str):
    if value.lstrip().startswith(("{", "[")):
        return parse_json(value)
    return read_json(value)


def load_law(value: str) -> Law:
    """Read a law from a file path or an inline JSON document."""
    return law_from_document(_inline_or_file(value))


def load_profile(value: str) -> Profile:
    return profile_from_document(_inline_or_file(value))

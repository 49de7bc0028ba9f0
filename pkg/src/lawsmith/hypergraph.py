"""Rank-k hypergraphs and the vertex-cover primitives used by the law algorithms."""

from __future__ import annotations

from collections.abc import Iterable

from lawsmith.errors import NotACover, ValidationError


def edge_key(edge: frozenset[str]) -> tuple[int, tuple[str, ...]]:
    """Canonical edge order: by size, then by the sorted vertex list."""
    return len(edge), tuple(sorted(edge))


class Hypergraph:
    """A finite vertex set plus nonempty edges of size at most ``rank``.

    Duplicate edges are merged. Edges are kept in canonical order.
    """

    __slots__ = ("vertices", "edges", "rank")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]], rank: int):
        self.vertices: tuple[str, ...] = tuple(sorted(set(vertices)))
        merged = {frozenset(e) for e in edges}
        self.edges: tuple[frozenset[str], ...] = tuple(sorted(merged, key=edge_key))
        self.rank = rank
        problems = []
        if not isinstance(rank, int) or rank < 1:
            problems.append(f"rank must be an integer >= 1, got {rank!r}")
        vs = set(self.vertices)
        for e in self.edges:
            shown = sorted(e)
            if not e:
                problems.append("edges must be nonempty")
            elif not e <= vs:
                problems.append(f"edge {shown} uses vertices {sorted(e - vs)} not in the graph")
            if isinstance(rank, int) and len(e) > rank:
                problems.append(f"edge {shown} has {len(e)} vertices, exceeding rank {rank}")
        if problems:
            raise ValidationError(problems)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.vertices, self.edges, self.rank) == (other.vertices, other.edges, other.rank)

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.rank))

    def __repr__(self) -> str:
        es = [sorted(e) for e in self.edges]
        return f"Hypergraph(rank={self.rank}, vertices={list(self.vertices)}, edges={es})"


def is_vertex_cover(h: Hypergraph, cover: Iterable[str]) -> bool:
    cover = frozenset(cover)
    if not cover <= set(h.vertices):
        return False
    return all(cover & e for e in h.edges)


def is_minimal_vertex_cover(h: Hypergraph, cover: Iterable[str]) -> bool:
    # Covers are upward closed, so testing single removals is enough.
    cover = frozenset(cover)
    if not is_vertex_cover(h, cover):
        return False
    return not any(is_vertex_cover(h, cover - {v}) for v in cover)


def approx_min_vertex_cover(h: Hypergraph, prune: bool = False) -> frozenset[str]:
    """k-approximate minimum vertex cover.

    Scans edges in canonical order and takes every vertex of each edge not
    yet covered. The chosen edges are pairwise disjoint and any cover hits
    each of them, so the result is at most ``rank`` times the optimum.

    With ``prune=True`` redundant vertices are then dropped in lexicographic
    order, which yields a minimal cover and never increases the size.
    """
    cover: set[str] = set()
    for e in h.edges:
        if not cover & e:
            cover |= e
    if prune:
        for v in sorted(cover):
            rest = cover - {v}
            if all(rest & e for e in h.edges):
                cover = rest
    return frozenset(cover)


def induced_subgraph(h: Hypergraph, cover: Iterable[str]) -> Hypergraph:
    """The graph ``(C, {C & e})`` induced by a vertex cover ``C``."""
    cover = frozenset(cover)
    if not is_vertex_cover(h, cover):
        raise NotACover(f"{sorted(cover)} is not a vertex cover of {h!r}")
    return Hypergraph(cover, (cover & e for e in h.edges), h.rank)

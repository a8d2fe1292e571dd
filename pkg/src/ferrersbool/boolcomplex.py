"""Brute-force census of the injective-word complex of a graph.

Words use distinct vertices; two words are equivalent when one turns into the
other by repeatedly swapping adjacent letters that are non-adjacent in the
graph.  A class is represented by its lexicographically least member, which
is the least linear extension of the precedence order the word induces on
adjacent-in-the-graph letter pairs.

A word is that least representative exactly when no letter can jump left
over a block of letters it commutes with to land before a larger one, so the
enumeration below walks canonical words directly: the property is closed
under prefixes, which keeps the search tree equal to the census itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import EXHAUSTIVE_VERTEX_CAP, GraphTooLarge, SimpleGraph


@dataclass(frozen=True)
class WordClass:
    """A commutation class, held by its canonical representative."""

    word: tuple[int, ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)


@dataclass(frozen=True)
class RankVector:
    """counts[k] = number of classes of words of length k (counts[0] = 1)."""

    counts: tuple[int, ...]

    def evaluate(self, t: int) -> int:
        return sum(c * t**k for k, c in enumerate(self.counts))


def canonical_form(g: SimpleGraph, word: Sequence[int]) -> tuple[int, ...]:
    """Least equivalent word: greedily emit the smallest letter whose
    graph-adjacent predecessors in the input order are all emitted."""
    letters = tuple(word)
    if len(set(letters)) != len(letters):
        raise ValueError("word letters must be distinct")
    for v in letters:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"letter {v} out of range")
    masks = g.adjacency_masks()
    position = {v: i for i, v in enumerate(letters)}
    remaining = set(letters)
    out = []
    while remaining:
        choice = min(
            v
            for v in remaining
            if not any(
                masks[v] >> w & 1 and position[w] < position[v] for w in remaining if w != v
            )
        )
        out.append(choice)
        remaining.remove(choice)
    return tuple(out)


def _canonical_words(masks: tuple[int, ...], max_len: int) -> Iterator[tuple[int, ...]]:
    n = len(masks)

    def admissible(prefix: list[int], v: int) -> bool:
        # v may extend a canonical prefix unless it could commute backwards
        # past a strictly larger letter.
        for w in reversed(prefix):
            if masks[v] >> w & 1:
                return True
            if v < w:
                return False
        return True

    prefix: list[int] = []
    used = [False] * n

    def walk() -> Iterator[tuple[int, ...]]:
        if len(prefix) == max_len:
            return
        for v in range(n):
            if used[v] or not admissible(prefix, v):
                continue
            used[v] = True
            prefix.append(v)
            yield tuple(prefix)
            yield from walk()
            prefix.pop()
            used[v] = False

    return walk()


def _check_cap(g: SimpleGraph, max_vertices: int) -> None:
    if g.vertex_count > max_vertices:
        raise GraphTooLarge(
            f"{g.vertex_count} vertices exceeds the word-enumeration cap {max_vertices}"
        )


def word_classes(
    g: SimpleGraph, length: int, *, max_vertices: int = EXHAUSTIVE_VERTEX_CAP
) -> frozenset[WordClass]:
    """All classes of injective words of the given length."""
    _check_cap(g, max_vertices)
    if not 0 <= length <= g.vertex_count:
        raise ValueError("length must be between 0 and the vertex count")
    if length == 0:
        return frozenset({WordClass(())})
    return frozenset(
        WordClass(w) for w in _canonical_words(g.adjacency_masks(), length) if len(w) == length
    )


def rank_vector(g: SimpleGraph, *, max_vertices: int = EXHAUSTIVE_VERTEX_CAP) -> RankVector:
    """Class counts by word length, from the empty word up to full support."""
    _check_cap(g, max_vertices)
    counts = [0] * (g.vertex_count + 1)
    counts[0] = 1
    for w in _canonical_words(g.adjacency_masks(), g.vertex_count):
        counts[len(w)] += 1
    return RankVector(tuple(counts))


def beta_via_rank(g: SimpleGraph, *, max_vertices: int = EXHAUSTIVE_VERTEX_CAP) -> int:
    """beta(G) = (-1)**|G| * (rank polynomial at -1)."""
    rv = rank_vector(g, max_vertices=max_vertices)
    return (-1) ** g.vertex_count * rv.evaluate(-1)

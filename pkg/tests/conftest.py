"""Shared fixtures: the unlabeled-graph universes and a word-class oracle."""

from __future__ import annotations

import itertools

import pytest
from networkx.generators.atlas import graph_atlas_g

from ferrersbool import SimpleGraph


def to_simple_graph(nx_graph) -> SimpleGraph:
    return SimpleGraph.from_edges(nx_graph.number_of_nodes(), list(nx_graph.edges()))


@pytest.fixture(scope="session")
def atlas_graphs():
    """All graphs on 1..7 vertices, one per isomorphism class."""
    return [
        to_simple_graph(g)
        for g in graph_atlas_g()
        if 1 <= g.number_of_nodes() <= 7
    ]


def atlas_up_to(graphs, max_vertices):
    return [g for g in graphs if g.vertex_count <= max_vertices]


def classes_by_sweep(g: SimpleGraph, length: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Oracle: bucket every injective word by the breadth-first closure of
    commuting adjacent swaps; map each word to the lex-least of its class."""
    adj = g.adjacency_masks()
    canon: dict[tuple[int, ...], tuple[int, ...]] = {}
    for word in itertools.permutations(range(g.vertex_count), length):
        if word in canon:
            continue
        seen = {word}
        frontier = [word]
        while frontier:
            current = frontier.pop()
            for i in range(length - 1):
                a, b = current[i], current[i + 1]
                if adj[a] >> b & 1:
                    continue
                swapped = current[:i] + (b, a) + current[i + 2 :]
                if swapped not in seen:
                    seen.add(swapped)
                    frontier.append(swapped)
        least = min(seen)
        for member in seen:
            canon[member] = least
    return canon

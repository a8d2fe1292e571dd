"""Graph-level oracles: Ferrers graphs, the four edge operations, the boolean
number edge recursion, and the trivariate edge-elimination polynomial with its
bivariate chromatic specializations.

These paths are intentionally expensive; they exist to cross-check the
triangle engine on desk-scale inputs and are guarded by vertex-count caps.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .shapes import FerrersShape

EDGE_RECURSION_VERTEX_CAP = 12
EXHAUSTIVE_VERTEX_CAP = 8


class EdgeNotPresent(ValueError):
    """The named edge is not in the graph."""


class GraphTooLarge(RuntimeError):
    """The graph exceeds the configured cap for this oracle."""


# ---------------------------------------------------------------------------
# graph values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free graph with at most one edge per vertex pair."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")

    @classmethod
    def from_edges(cls, vertex_count, pairs) -> "SimpleGraph":
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            edges.add((min(u, v), max(u, v)))
        return cls(vertex_count, frozenset(edges))

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)


@dataclass(frozen=True)
class MultiGraph:
    """Graph with edge multiplicities.  Loops appear only as contraction
    artifacts; user-facing constructors reject them."""

    vertex_count: int
    edges: tuple[tuple[tuple[int, int], int], ...]  # ((u, v), multiplicity), u <= v

    @classmethod
    def from_pairs(cls, vertex_count, pairs) -> "MultiGraph":
        counter: Counter = Counter()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"bad edge ({u}, {v})")
            counter[(min(u, v), max(u, v))] += 1
        return cls(vertex_count, tuple(sorted(counter.items())))

    @classmethod
    def _make(cls, vertex_count: int, counter: Counter) -> "MultiGraph":
        return cls(vertex_count, tuple(sorted((e, m) for e, m in counter.items() if m > 0)))

    def edge_counter(self) -> Counter:
        return Counter(dict(self.edges))

    def multiplicity(self, u: int, v: int) -> int:
        return dict(self.edges).get((min(u, v), max(u, v)), 0)

    def has_loops(self) -> bool:
        return any(u == v for (u, v), _ in self.edges)


def to_multigraph(g: SimpleGraph) -> MultiGraph:
    return MultiGraph(g.vertex_count, tuple(((u, v), 1) for u, v in g.edge_list()))


def ferrers_graph(shape: FerrersShape) -> SimpleGraph:
    """Bipartite graph of a shape: row vertices 0..r-1, column vertices
    r..r+L1-1, with row i joined to the first L_{i+1} column vertices."""
    r = shape.row_count
    width = shape.rows[0]
    edges = set()
    for i, length in enumerate(shape.rows):
        for j in range(length):
            edges.add((i, r + j))
    return SimpleGraph(r + width, frozenset(edges))


def parse_edge_list(text: str) -> SimpleGraph:
    """Read the CLI graph format: a "n m" header then m lines "u v" (0-based)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty graph text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("header must be 'n m'")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range")
    return SimpleGraph.from_edges(n, pairs)


# ---------------------------------------------------------------------------
# the four edge operations
# ---------------------------------------------------------------------------

def _norm_edge(e) -> tuple[int, int]:
    u, v = e
    return (min(u, v), max(u, v))


def _compress_counter(n: int, counter: Counter, removed: set[int]) -> MultiGraph:
    keep = [v for v in range(n) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    out: Counter = Counter()
    for (a, b), m in counter.items():
        if a in removed or b in removed:
            continue
        na, nb = index[a], index[b]
        out[(min(na, nb), max(na, nb))] += m
    return MultiGraph._make(len(keep), out)


def delete_edge(g, e):
    """Remove one copy of e; the graph kind is preserved."""
    u, v = _norm_edge(e)
    if isinstance(g, SimpleGraph):
        if (u, v) not in g.edges:
            raise EdgeNotPresent(f"({u}, {v})")
        return SimpleGraph(g.vertex_count, g.edges - {(u, v)})
    counter = g.edge_counter()
    if counter[(u, v)] < 1:
        raise EdgeNotPresent(f"({u}, {v})")
    counter[(u, v)] -= 1
    return MultiGraph._make(g.vertex_count, counter)


def contract_edge(g, e) -> MultiGraph:
    """Merge the endpoints of e keeping multiplicities; extra parallel copies
    of e survive as loops at the merged vertex."""
    u, v = _norm_edge(e)
    counter = g.edge_counter() if isinstance(g, MultiGraph) else Counter(
        {edge: 1 for edge in g.edges}
    )
    if counter[(u, v)] < 1:
        raise EdgeNotPresent(f"({u}, {v})")
    merged: Counter = Counter()
    for (a, b), m in counter.items():
        if (a, b) == (u, v):
            if m > 1:
                merged[(u, u)] += m - 1
            continue
        na = u if a == v else a
        nb = u if b == v else b
        merged[(min(na, nb), max(na, nb))] += m
    return _compress_counter(g.vertex_count, merged, {v})


def simple_contract_edge(g: SimpleGraph, e) -> SimpleGraph:
    """Contract then drop loops and redundant parallel edges."""
    contracted = contract_edge(g, e)
    pairs = [(a, b) for (a, b), _ in contracted.edges if a != b]
    return SimpleGraph.from_edges(contracted.vertex_count, pairs)


def extract_edge(g, e):
    """Remove both endpoints of e and every incident edge; kind preserved."""
    u, v = _norm_edge(e)
    if isinstance(g, SimpleGraph):
        if (u, v) not in g.edges:
            raise EdgeNotPresent(f"({u}, {v})")
        keep = [w for w in range(g.vertex_count) if w not in (u, v)]
        index = {w: i for i, w in enumerate(keep)}
        pairs = [
            (index[a], index[b]) for a, b in g.edges if a not in (u, v) and b not in (u, v)
        ]
        return SimpleGraph.from_edges(len(keep), pairs)
    counter = g.edge_counter()
    if counter[(u, v)] < 1:
        raise EdgeNotPresent(f"({u}, {v})")
    return _compress_counter(g.vertex_count, counter, {u, v})


# ---------------------------------------------------------------------------
# boolean number by edge recursion
# ---------------------------------------------------------------------------

def _compress_masks(masks: tuple[int, ...], removed: tuple[int, ...]) -> tuple[int, ...]:
    keep = [v for v in range(len(masks)) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        m = masks[v]
        nm = 0
        for w in keep:
            if m >> w & 1:
                nm |= 1 << index[w]
        out.append(nm)
    return tuple(out)


def _pivot_min_degree(masks: tuple[int, ...]) -> tuple[int, int]:
    u = min(range(len(masks)), key=lambda v: (masks[v].bit_count(), v))
    v = (masks[u] & -masks[u]).bit_length() - 1
    return u, v


def _pivot_lexicographic(masks: tuple[int, ...]) -> tuple[int, int]:
    u = next(v for v in range(len(masks)) if masks[v])
    v = (masks[u] & -masks[u]).bit_length() - 1
    return u, v


_PIVOTS = {"min-degree": _pivot_min_degree, "lex": _pivot_lexicographic}


def _beta_masks(masks: tuple[int, ...], pivot) -> int:
    if not masks:
        return 1
    if any(m == 0 for m in masks):
        return 0
    u, v = pivot(masks)
    deleted = list(masks)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    total = _beta_masks(tuple(deleted), pivot)

    merged = list(masks)
    merged[u] = (masks[u] | masks[v]) & ~((1 << u) | (1 << v))
    for w in range(len(masks)):
        if w in (u, v):
            continue
        m = masks[w]
        if m >> v & 1:
            m = (m | 1 << u) & ~(1 << v)
        merged[w] = m
    total += _beta_masks(_compress_masks(tuple(merged), (v,)), pivot)

    total += _beta_masks(_compress_masks(masks, (u, v)), pivot)
    return total


def beta_edge_recursion(
    g: SimpleGraph, *, max_vertices: int = EDGE_RECURSION_VERTEX_CAP, pivot: str = "min-degree"
) -> int:
    """beta(G) by the generic three-way edge recursion.

    Exponential by design; refuses graphs above the vertex cap.  The pivot
    edge touches a minimum-degree vertex by default, which drives quickly
    toward the isolated-vertex short circuit.
    """
    if g.vertex_count > max_vertices:
        raise GraphTooLarge(
            f"{g.vertex_count} vertices exceeds the edge-recursion cap {max_vertices}"
        )
    return _beta_masks(g.adjacency_masks(), _PIVOTS[pivot])


# ---------------------------------------------------------------------------
# trivariate edge-elimination polynomial
# ---------------------------------------------------------------------------

class TrivariatePolynomial:
    """Exact integer polynomial in x, y, z keyed by exponent triples."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for key, coef in dict(terms).items():
                if coef:
                    cleaned[tuple(key)] = coef
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "TrivariatePolynomial":
        return cls()

    @classmethod
    def monomial(cls, coef: int, a: int = 0, b: int = 0, c: int = 0) -> "TrivariatePolynomial":
        return cls({(a, b, c): coef})

    def terms(self) -> tuple[tuple[tuple[int, int, int], int], ...]:
        return tuple(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TrivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(self.terms())

    def __add__(self, other) -> "TrivariatePolynomial":
        if isinstance(other, int):
            other = TrivariatePolynomial.monomial(other)
        out = dict(self._terms)
        for key, coef in other._terms.items():
            out[key] = out.get(key, 0) + coef
        return TrivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "TrivariatePolynomial":
        return TrivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "TrivariatePolynomial":
        if isinstance(other, int):
            other = TrivariatePolynomial.monomial(other)
        return self + (-other)

    def __mul__(self, other) -> "TrivariatePolynomial":
        if isinstance(other, int):
            return TrivariatePolynomial({k: c * other for k, c in self._terms.items()})
        out: dict = {}
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + k1 * k2
        return TrivariatePolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, x: int, y: int, z: int) -> int:
        return sum(coef * x**a * y**b * z**c for (a, b, c), coef in self._terms.items())

    def substitute_y(self, value: int) -> "TrivariatePolynomial":
        """Collapse the y variable at an integer value; result lives in x, z."""
        out: dict = {}
        for (a, b, c), coef in self._terms.items():
            key = (a, 0, c)
            out[key] = out.get(key, 0) + coef * value**b
        return TrivariatePolynomial(out)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), coef in self.terms():
            factors = [str(coef)] if coef != 1 or (a, b, c) == (0, 0, 0) else []
            for name, exp in (("x", a), ("y", b), ("z", c)):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            parts.append("*".join(factors))
        return " + ".join(parts)


_X = TrivariatePolynomial.monomial(1, 1, 0, 0)
_Y = TrivariatePolynomial.monomial(1, 0, 1, 0)
_Z = TrivariatePolynomial.monomial(1, 0, 0, 1)
_ONE = TrivariatePolynomial.monomial(1)

# internal state for the recursion: (vertex_count, sorted ((u, v), mult) tuple)
_State = tuple[int, tuple[tuple[tuple[int, int], int], ...]]


def _state_components(state: _State) -> list[_State]:
    n, edges = state
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (u, v), _ in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    comps = []
    for members in sorted(groups.values()):
        index = {v: i for i, v in enumerate(members)}
        sub = tuple(
            sorted(((index[a], index[b]), m) for (a, b), m in edges if a in index)
        )
        comps.append((len(members), sub))
    return comps


def _state_without_vertex(state: _State, gone: int) -> _State:
    n, edges = state
    index = {v: (v if v < gone else v - 1) for v in range(n) if v != gone}
    sub = tuple(
        sorted(
            ((index[a], index[b]), m)
            for (a, b), m in edges
            if a != gone and b != gone
        )
    )
    return (n - 1, sub)


def _xi_state(state: _State, memo: dict) -> TrivariatePolynomial:
    cached = memo.get(state)
    if cached is not None:
        return cached
    n, edges = state
    if not edges:
        poly = TrivariatePolynomial.monomial(1, n, 0, 0)
        memo[state] = poly
        return poly
    comps = _state_components(state)
    if len(comps) > 1:
        poly = _ONE
        for comp in comps:
            poly = poly * _xi_state(comp, memo)
        memo[state] = poly
        return poly

    loops = [(e, m) for e, m in edges if e[0] == e[1]]
    if loops:
        # A loop deletes or contracts to the same graph (weight 1 + y) and
        # extracts to the graph without its vertex.
        (v, _), _m = loops[0]
        counter = Counter(dict(edges))
        counter[(v, v)] -= 1
        rest = (n, tuple(sorted((e, m) for e, m in counter.items() if m > 0)))
        poly = (_ONE + _Y) * _xi_state(rest, memo) + _Z * _xi_state(
            _state_without_vertex(state, v), memo
        )
        memo[state] = poly
        return poly

    max_mult = max(m for _, m in edges)
    (u, v), mult = min((e, m) for e, m in edges if m == max_mult)

    counter = Counter(dict(edges))
    counter[(u, v)] -= 1
    deleted = (n, tuple(sorted((e, m) for e, m in counter.items() if m > 0)))

    merged: Counter = Counter()
    for (a, b), m in edges:
        if (a, b) == (u, v):
            if m > 1:
                merged[(u, u)] += m - 1
            continue
        na = u if a == v else a
        nb = u if b == v else b
        merged[(min(na, nb), max(na, nb))] += m
    index = {w: (w if w < v else w - 1) for w in range(n) if w != v}
    contracted = (
        n - 1,
        tuple(sorted(((index[a], index[b]), m) for (a, b), m in merged.items())),
    )

    extracted = _state_without_vertex(_state_without_vertex(state, v), u)

    poly = (
        _xi_state(deleted, memo)
        + _Y * _xi_state(contracted, memo)
        + _Z * _xi_state(extracted, memo)
    )
    memo[state] = poly
    return poly


def xi_polynomial(g) -> TrivariatePolynomial:
    """The edge-elimination polynomial of a loop-free (multi)graph.

    Recursion: xi(G) = xi(G-e) + y*xi(G contracted at e) + z*xi(G-[e]),
    multiplicative over disjoint unions, with x per isolated vertex.  Loops
    arise only from contracting parallel edges; such a loop deletes or
    contracts to the same loop-free reduction (factor 1 + y) and extracts to
    the graph without its vertex, the standard convention for this recursion.
    Memoized per call on the exact reduced form; no global state.
    """
    if isinstance(g, SimpleGraph):
        mg = to_multigraph(g)
    else:
        mg = g
        if mg.has_loops():
            raise ValueError("input graph must be loop-free")
    state: _State = (mg.vertex_count, tuple(sorted(mg.edges)))
    return _xi_state(state, {})


def beta_via_xi(g: SimpleGraph) -> int:
    """beta(G) = (-1)**|G| * xi(G, 0, -1, 1)."""
    return (-1) ** g.vertex_count * xi_polynomial(g).evaluate(0, -1, 1)


def bichromatic_via_xi(g: SimpleGraph, x: int, y: int) -> int:
    """The proper/improper coloring count as the substitution xi(G, x, -1, x-y)."""
    return xi_polynomial(g).evaluate(x, -1, x - y)


def bivariate_chromatic_count(
    g: SimpleGraph, x: int, y: int, *, max_vertices: int = EXHAUSTIVE_VERTEX_CAP
) -> int:
    """Count colorings with y proper and x-y improper colors by brute force.

    A coloring is a map from vertices to x colors; the first y colors are
    proper and may not repeat across an edge.
    """
    if not 0 <= y <= x:
        raise ValueError("need 0 <= y <= x")
    if g.vertex_count > max_vertices:
        raise GraphTooLarge(
            f"{g.vertex_count} vertices exceeds the exhaustive cap {max_vertices}"
        )
    edges = g.edge_list()
    count = 0
    for coloring in itertools.product(range(x), repeat=g.vertex_count):
        if all(not (coloring[u] == coloring[v] and coloring[u] < y) for u, v in edges):
            count += 1
    return count

"""Bipartite graphs with a fixed left/right split.

A graph lives in a small line-oriented text format:

    L: x1 x2
    R: y1 y2
    E: x1-y1 x1-y2 x2-y2

`parse_graph` reads it, `to_document` writes it back.  Vertex names match
``[A-Za-z0-9_]+`` and `#` starts a comment.

The structural heart of the module is `find_pure_order`: a bipartite graph
without isolated vertices is unmixed (its independence complex is pure)
exactly when some perfect matching x_i~y_i satisfies Villarreal's
transitivity condition, namely that x_iy_j and x_jy_k being edges forces
x_iy_k to be an edge.  `cross_blocks` then splits the matched pairs into the
maximal complete bipartite blocks K_{n,n} given by the cross relation
(i and j cross when both x_iy_j and x_jy_i are edges).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class GraphFormatError(ValueError):
    """A graph document violates the text format."""


class IsolatedVertexError(ValueError):
    """A structural operation got a graph with isolated vertices.

    The matching-based theory assumes every vertex has a neighbor; callers
    that can handle isolated vertices (the homology oracle) never raise this.
    """


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug upstream, not bad input."""


@dataclass(frozen=True)
class BipartiteGraph:
    """Two ordered vertex sides and a set of left-to-right edges."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in self.left + self.right:
            if not NAME_RE.match(name):
                raise ValueError(f"bad vertex name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate vertex {name!r}")
            seen.add(name)
        lset, rset = set(self.left), set(self.right)
        for x, y in self.edges:
            if x not in lset or y not in rset:
                raise ValueError(f"edge ({x},{y}) does not run from left to right")

    @classmethod
    def of(cls, left, right, edges) -> "BipartiteGraph":
        return cls(tuple(left), tuple(right), frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.left + self.right

    def has_edge(self, x: str, y: str) -> bool:
        return (x, y) in self.edges

    def neighbors(self, v: str) -> frozenset[str]:
        return _adjacency(self)[v]

    def degree(self, v: str) -> int:
        return len(_adjacency(self)[v])

    def isolated_vertices(self) -> tuple[str, ...]:
        adj = _adjacency(self)
        return tuple(v for v in self.vertices if not adj[v])


@lru_cache(maxsize=None)
def _adjacency(g: BipartiteGraph) -> dict[str, frozenset[str]]:
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for x, y in g.edges:
        adj[x].add(y)
        adj[y].add(x)
    return {v: frozenset(ns) for v, ns in adj.items()}


@dataclass(frozen=True)
class PureOrder:
    """A perfect matching listed in index order; pairs[i] is (x_{i+1}, y_{i+1})."""

    pairs: tuple[tuple[str, str], ...]

    @property
    def lefts(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def rights(self) -> tuple[str, ...]:
        return tuple(y for _, y in self.pairs)


@dataclass(frozen=True)
class BlockDecomposition:
    """Partition of the 1-based pair indices under the cross relation.

    Blocks are listed by smallest member; `sizes` is aligned with `blocks`.
    """

    blocks: tuple[frozenset[int], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def parse_document(text: str) -> tuple[BipartiteGraph, tuple[int, ...] | None]:
    """Parse a graph document, returning (graph, multiplicities or None).

    The optional `M:` line carries expansion multiplicities; plain graph
    callers should use `parse_graph`, which rejects it.
    """
    left: list[str] | None = None
    right: list[str] | None = None
    edge_tokens: list[tuple[str, str, int]] = []
    mult: tuple[int, ...] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, _, rest = line.partition(":")
        tag = tag.strip()
        tokens = rest.split()
        if tag == "L":
            if left is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'L:' line")
            left = tokens
        elif tag == "R":
            if right is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'R:' line")
            right = tokens
        elif tag == "E":
            for tok in tokens:
                u, sep, v = tok.partition("-")
                if not sep or not u or not v:
                    raise GraphFormatError(f"line {lineno}: malformed edge token {tok!r}")
                edge_tokens.append((u, v, lineno))
        elif tag == "M":
            if mult is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'M:' line")
            try:
                mult = tuple(int(tok) for tok in tokens)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: multiplicities must be integers") from None
        else:
            raise GraphFormatError(f"line {lineno}: expected 'L:', 'R:', 'E:' or 'M:', got {line!r}")
    if left is None:
        raise GraphFormatError("missing 'L:' line")
    if right is None:
        raise GraphFormatError("missing 'R:' line")
    seen: set[str] = set()
    for name in left + right:
        if not NAME_RE.match(name):
            raise GraphFormatError(f"bad vertex name {name!r}")
        if name in seen:
            raise GraphFormatError(f"duplicate vertex {name!r}")
        seen.add(name)
    lset, rset = set(left), set(right)
    edges: set[tuple[str, str]] = set()
    for u, v, lineno in edge_tokens:
        for end in (u, v):
            if end not in lset and end not in rset:
                raise GraphFormatError(f"line {lineno}: unknown vertex {end!r}")
        if u not in lset or v not in rset:
            raise GraphFormatError(f"line {lineno}: edge {u}-{v} has an endpoint on the wrong side")
        if (u, v) in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u}-{v}")
        edges.add((u, v))
    return BipartiteGraph.of(left, right, edges), mult


def parse_graph(text: str) -> BipartiteGraph:
    """Parse a plain graph document (no multiplicity line allowed)."""
    g, mult = parse_document(text)
    if mult is not None:
        raise GraphFormatError("unexpected 'M:' line in a plain graph document")
    return g


def to_document(g: BipartiteGraph) -> str:
    """Serialize a graph back to the text format, eight edges per E line."""
    lines = ["L: " + " ".join(g.left) if g.left else "L:",
             "R: " + " ".join(g.right) if g.right else "R:"]
    tokens = [f"{x}-{y}" for x, y in sorted(g.edges)]
    for i in range(0, len(tokens), 8):
        lines.append("E: " + " ".join(tokens[i:i + 8]))
    return "\n".join(lines) + "\n"


def _matching_transitive(g: BipartiteGraph, match: dict[str, str]) -> bool:
    # Villarreal condition (2): it depends only on the pairing, not on how
    # the pairs are later indexed.
    edges = g.edges
    lefts = list(match)
    for xi, xj, xk in itertools.permutations(lefts, 3):
        if (xi, match[xj]) in edges and (xj, match[xk]) in edges:
            if (xi, match[xk]) not in edges:
                return False
    return True


def find_pure_order(g: BipartiteGraph) -> PureOrder | None:
    """Search every perfect matching for one satisfying the pure-order conditions.

    Returns None when the graph is not unmixed.  Isolated vertices are
    outside the theory's hypotheses and raise `IsolatedVertexError` instead.
    The search is exhaustive over matchings because the transitivity
    condition may hold for one matching and fail for another.
    """
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(f"isolated vertices {', '.join(isolated)}")
    if len(g.left) != len(g.right):
        return None
    if not g.left:
        return PureOrder(())
    adj = _adjacency(g)
    # Low-degree vertices first keeps the backtracking shallow.
    order = sorted(g.left, key=lambda x: len(adj[x]))
    used: set[str] = set()
    match: dict[str, str] = {}

    def extend(i: int) -> PureOrder | None:
        if i == len(order):
            if _matching_transitive(g, match):
                pairs = tuple((x, match[x]) for x in g.left)
                return PureOrder(pairs)
            return None
        x = order[i]
        for y in sorted(adj[x]):
            if y in used:
                continue
            used.add(y)
            match[x] = y
            found = extend(i + 1)
            if found is not None:
                return found
            used.discard(y)
            del match[x]
        return None

    return extend(0)


def is_unmixed(g: BipartiteGraph) -> bool:
    return find_pure_order(g) is not None


def is_pure_order(g: BipartiteGraph, po: PureOrder) -> bool:
    """Re-check both pure-order conditions from scratch."""
    pairs = po.pairs
    if sorted(po.lefts) != sorted(g.left) or sorted(po.rights) != sorted(g.right):
        return False
    if any((x, y) not in g.edges for x, y in pairs):
        return False
    return _matching_transitive(g, dict(pairs))


def cross_blocks(g: BipartiteGraph, po: PureOrder) -> BlockDecomposition:
    """Partition the matched pairs by the cross relation.

    The relation (i crosses j when both x_iy_j and x_jy_i are edges) is an
    equivalence on the indices whenever `po` really is a pure order; each
    class spans a maximal complete bipartite block.  A non-transitive
    relation means the caller handed in a broken order and raises
    `ConsistencyError`.
    """
    if not is_pure_order(g, po):
        raise ValueError("not a pure order of this graph")
    d = len(po.pairs)
    xs, ys = po.lefts, po.rights

    def crossed(i: int, j: int) -> bool:
        return (xs[i], ys[j]) in g.edges and (xs[j], ys[i]) in g.edges

    parent = list(range(d))

    def root(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(d), 2):
        if crossed(i, j):
            parent[root(i)] = root(j)
    classes: dict[int, set[int]] = {}
    for i in range(d):
        classes.setdefault(root(i), set()).add(i)
    blocks = tuple(sorted((frozenset(k + 1 for k in c) for c in classes.values()), key=min))
    for block in blocks:
        for a, b in itertools.combinations(sorted(block), 2):
            if not crossed(a - 1, b - 1):
                raise ConsistencyError(
                    f"cross relation is not transitive on block {sorted(block)}")
    return BlockDecomposition(blocks)


def delete_closed_neighborhood(g: BipartiteGraph, v: str) -> BipartiteGraph:
    """Remove v together with all its neighbors; survivors may end up isolated."""
    if v not in g.left and v not in g.right:
        raise ValueError(f"unknown vertex {v!r}")
    gone = {v} | set(g.neighbors(v))
    return induced_subgraph(g, [u for u in g.vertices if u not in gone])


def induced_subgraph(g: BipartiteGraph, keep) -> BipartiteGraph:
    kept = set(keep)
    return BipartiteGraph.of(
        (v for v in g.left if v in kept),
        (v for v in g.right if v in kept),
        ((x, y) for x, y in g.edges if x in kept and y in kept),
    )


def disjoint_union(a: BipartiteGraph, b: BipartiteGraph) -> BipartiteGraph:
    overlap = set(a.vertices) & set(b.vertices)
    if overlap:
        raise ValueError(f"vertex names shared between operands: {sorted(overlap)}")
    return BipartiteGraph.of(a.left + b.left, a.right + b.right, a.edges | b.edges)


def connected_components(g: BipartiteGraph) -> tuple[frozenset[str], ...]:
    adj = _adjacency(g)
    seen: set[str] = set()
    comps: list[frozenset[str]] = []
    for start in g.vertices:
        if start in seen:
            continue
        stack, comp = [start], {start}
        while stack:
            for u in adj[stack.pop()]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(frozenset(comp))
    return tuple(comps)


def is_connected(g: BipartiteGraph) -> bool:
    return len(connected_components(g)) == 1

"""Expansion of matched edges into complete bipartite blocks, and its inverse.

`expand` replaces the i-th matched edge of a base graph with a block
K_{n_i,n_i} while copying every other adjacency onto the new vertices.
`contract` undoes this: it finds the block decomposition of an unmixed
graph, keeps one representative pair per block, and returns the base graph
together with the block sizes.  The base is always cross-free, so it is
Cohen-Macaulay, and `predicted_codim` reads the expanded graph's sharp
codimension off the multiplicities alone.

An expansion serializes as the base document plus one `M:` line:

    L: x1 x2
    R: y1 y2
    E: x1-y1 x1-y2 x2-y2
    M: 1 3
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bigraph import (
    BipartiteGraph,
    ConsistencyError,
    GraphFormatError,
    PureOrder,
    cross_blocks,
    find_pure_order,
    is_pure_order,
    parse_document,
    to_document,
)


@dataclass(frozen=True)
class Expansion:
    """A base graph plus one multiplicity per matched pair.

    The base's pure order is positional: left[i] is matched with right[i].
    Construction fails if that pairing is not actually a pure order.
    """

    base: BipartiteGraph
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.base.left) != len(self.base.right):
            raise ValueError("base sides differ in size, no positional matching")
        if len(self.multiplicities) != len(self.base.left):
            raise ValueError(
                f"multiplicity length mismatch: {len(self.multiplicities)} values "
                f"for {len(self.base.left)} matched pairs")
        for n in self.multiplicities:
            if n < 1:
                raise ValueError(f"multiplicity must be positive, got {n}")
        if not is_pure_order(self.base, PureOrder(self.pairs)):
            raise ValueError("positional pairing of the base is not a pure order")

    @property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(zip(self.base.left, self.base.right))

    @property
    def d(self) -> int:
        return len(self.multiplicities)


def expand(e: Expansion) -> BipartiteGraph:
    """Blow the i-th matched pair up to K_{n_i,n_i}, keeping all adjacencies.

    New vertices are named `<basename>_<k>` with k counting from 1, so the
    output is deterministic and contract can be checked against it.
    """
    base, mult = e.base, e.multiplicities
    lefts = [tuple(f"{base.left[i]}_{k}" for k in range(1, n + 1))
             for i, n in enumerate(mult)]
    rights = [tuple(f"{base.right[i]}_{k}" for k in range(1, n + 1))
              for i, n in enumerate(mult)]
    edges: set[tuple[str, str]] = set()
    for i in range(e.d):
        for x in lefts[i]:
            for y in rights[i]:
                edges.add((x, y))
    for i, j in itertools.permutations(range(e.d), 2):
        if (base.left[i], base.right[j]) in base.edges:
            for x in lefts[i]:
                for y in rights[j]:
                    edges.add((x, y))
    return BipartiteGraph.of(itertools.chain.from_iterable(lefts),
                             itertools.chain.from_iterable(rights),
                             edges)


def _base_from_representatives(g: BipartiteGraph, po: PureOrder,
                               reps: list[int]) -> BipartiteGraph:
    xs, ys = po.lefts, po.rights
    edges = {(xs[i], ys[j]) for i in reps for j in reps
             if (xs[i], ys[j]) in g.edges}
    return BipartiteGraph.of([xs[i] for i in reps], [ys[i] for i in reps], edges)


def contract(g: BipartiteGraph) -> Expansion:
    """Collapse each complete bipartite block back to a single matched edge.

    Picks the smallest index of every block as its representative, checks
    that adjacency between any two blocks really is uniform (it must be in
    an unmixed graph), and double-checks that choosing the largest indices
    instead produces an isomorphic base.
    """
    po = find_pure_order(g)
    if po is None:
        raise ValueError("graph is not unmixed, nothing to contract")
    decomposition = cross_blocks(g, po)
    blocks = [sorted(i - 1 for i in block) for block in decomposition.blocks]
    xs, ys = po.lefts, po.rights
    for a, b in itertools.permutations(range(len(blocks)), 2):
        linked = {(xs[i], ys[j]) in g.edges for i in blocks[a] for j in blocks[b]}
        if len(linked) > 1:
            raise ConsistencyError(
                f"blocks {a} and {b} are only partially adjacent")
    base = _base_from_representatives(g, po, [blk[0] for blk in blocks])
    expansion = Expansion(base, tuple(len(blk) for blk in blocks))
    base_order = PureOrder(expansion.pairs)
    if any(n >= 2 for n in cross_blocks(base, base_order).sizes):
        raise ConsistencyError("contracted base still contains a cross")
    alt = _base_from_representatives(g, po, [blk[-1] for blk in blocks])
    from .enumeration import canonical_form
    if canonical_form(base) != canonical_form(alt):
        raise ConsistencyError("base depends on the block representatives chosen")
    return expansion


def predicted_codim(e: Expansion) -> int:
    """Sharp codimension of expand(e), computed from the multiplicities.

    With n the total of all multiplicities and n_0 the smallest multiplicity
    above 1, the expansion is exactly CM_{n-n_0+1}; the all-ones expansion
    is the base itself and stays Cohen-Macaulay.
    """
    base_order = PureOrder(e.pairs)
    if any(n >= 2 for n in cross_blocks(e.base, base_order).sizes):
        raise ValueError("base graph is not Cohen-Macaulay (it has a cross)")
    big = [n for n in e.multiplicities if n > 1]
    if not big:
        return 0
    return sum(e.multiplicities) - min(big) + 1


def parse_expansion(text: str) -> Expansion:
    """Read a base document with its mandatory `M:` multiplicity line."""
    g, mult = parse_document(text)
    if mult is None:
        raise GraphFormatError("missing 'M:' line with multiplicities")
    return Expansion(g, mult)


def expansion_document(e: Expansion) -> str:
    return to_document(e.base) + "M: " + " ".join(map(str, e.multiplicities)) + "\n"

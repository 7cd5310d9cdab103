"""Structural classification of unmixed bipartite graphs.

The classifier never touches homology.  It finds a pure order, splits the
matched pairs into complete bipartite blocks, and reads the sharp
codimension straight off the block sizes: with d pairs in total and n_min
the smallest block size that is at least 2, the graph is CM_{d-n_min+1}
and nothing better; a cross-free graph (all blocks singletons) is
Cohen-Macaulay outright.  `verify_against_oracle` replays the same
questions against the homology oracle and reports any disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bigraph import (
    BipartiteGraph,
    BlockDecomposition,
    ConsistencyError,
    PureOrder,
    cross_blocks,
    find_pure_order,
)
from . import simplicial


@dataclass(frozen=True)
class CmtClassification:
    """Verdict for one graph; all fields except `unmixed` are None for mixed input."""

    unmixed: bool
    d: int | None = None
    block_sizes: tuple[int, ...] | None = None
    n_min: int | None = None
    t_sharp: int | None = None
    order: PureOrder | None = None
    blocks: BlockDecomposition | None = None

    @property
    def dimension(self) -> int | None:
        return None if self.d is None else self.d - 1

    @property
    def cohen_macaulay(self) -> bool:
        return self.t_sharp == 0

    @property
    def buchsbaum(self) -> bool:
        return self.t_sharp is not None and self.t_sharp <= 1


def classify(g: BipartiteGraph) -> CmtClassification:
    """Block-size classification; raises IsolatedVertexError outside its domain."""
    order = find_pure_order(g)
    if order is None:
        return CmtClassification(unmixed=False)
    blocks = cross_blocks(g, order)
    sizes = tuple(sorted(blocks.sizes))
    d = len(order.pairs)
    big = [n for n in sizes if n >= 2]
    n_min = min(big) if big else None
    t_sharp = 0 if n_min is None else d - n_min + 1
    return CmtClassification(True, d, sizes, n_min, t_sharp, order, blocks)


@dataclass(frozen=True)
class MacaulayOrder:
    """order[k] is the 1-based pair index that receives new label k+1."""

    order: tuple[int, ...]


def macaulay_order(g: BipartiteGraph, po: PureOrder | None = None) -> MacaulayOrder | None:
    """Topological reindexing with every edge x_iy_j satisfying i <= j.

    Exists exactly for cross-free graphs.  Crossed graphs return None; a
    graph without any pure order is outside the precondition and raises.
    """
    if po is None:
        po = find_pure_order(g)
        if po is None:
            raise ValueError("graph is not unmixed, no pure order exists")
    if any(n >= 2 for n in cross_blocks(g, po).sizes):
        return None
    d = len(po.pairs)
    xs, ys = po.lefts, po.rights
    succ = {i: {j for j in range(d) if j != i and (xs[i], ys[j]) in g.edges}
            for i in range(d)}
    indegree = {i: 0 for i in range(d)}
    for i in range(d):
        for j in succ[i]:
            indegree[j] += 1
    ready = sorted(i for i in range(d) if indegree[i] == 0)
    out: list[int] = []
    while ready:
        i = ready.pop(0)
        out.append(i + 1)
        for j in sorted(succ[i]):
            indegree[j] -= 1
            if indegree[j] == 0:
                ready.append(j)
        ready.sort()
    if len(out) != d:
        raise ConsistencyError("edge relation of a cross-free order has a cycle")
    # Sanity: after relabeling, every edge must point weakly forward.
    rank = {idx: pos for pos, idx in enumerate(out)}
    for i in range(d):
        for j in succ[i]:
            if rank[i + 1] > rank[j + 1]:
                raise ConsistencyError("topological order leaves a backward edge")
    return MacaulayOrder(tuple(out))


def is_buchsbaum(g: BipartiteGraph) -> bool:
    """True when the sharp codimension is at most 1; False for mixed graphs."""
    verdict = classify(g)
    return verdict.unmixed and verdict.t_sharp <= 1


class UnionCodim(NamedTuple):
    value: int
    sharp: bool


def disjoint_union_codim(d: int, r: int, dprime: int, rprime: int) -> UnionCodim:
    """Sharp codimension of a disjoint union from the parts' invariants.

    The parts have d and d' matched pairs and sharp codimensions r and r'.
    When either part is Cohen-Macaulay the answer is exact; when both are
    strictly worse the returned max{d+r', d'+r} is only an upper bound and
    is tagged sharp=False.
    """
    if d < 1 or dprime < 1:
        raise ValueError("each part needs at least one matched pair")
    if r < 0 or rprime < 0:
        raise ValueError("codimensions cannot be negative")
    if r == 0 and rprime == 0:
        return UnionCodim(0, True)
    if r == 0:
        return UnionCodim(d + rprime, True)
    if rprime == 0:
        return UnionCodim(dprime + r, True)
    return UnionCodim(max(d + rprime, dprime + r), False)


@dataclass(frozen=True)
class OracleAgreement:
    agree: bool
    structural: CmtClassification
    oracle_pure: bool
    oracle_dim: int
    oracle_codim: int | None
    mismatches: tuple[str, ...]


def verify_against_oracle(g: BipartiteGraph) -> OracleAgreement:
    """Run the block classifier and the homology oracle side by side.

    Compares unmixedness with purity, then (when unmixed) the dimension and
    the sharp codimension.  Isolated vertices raise IsolatedVertexError
    because the structural half cannot speak for them.
    """
    verdict = classify(g)
    ind = simplicial.independence_complex(g)
    pure = simplicial.is_pure(ind)
    oracle_dim = simplicial.dim(ind)
    oracle_codim = simplicial.cm_codim(ind)
    problems: list[str] = []
    if verdict.unmixed != pure:
        problems.append(f"unmixed={verdict.unmixed} but oracle purity={pure}")
    if verdict.unmixed and pure:
        if verdict.dimension != oracle_dim:
            problems.append(f"dimension {verdict.dimension} != oracle {oracle_dim}")
        if verdict.t_sharp != oracle_codim:
            problems.append(f"t_sharp {verdict.t_sharp} != oracle {oracle_codim}")
    return OracleAgreement(not problems, verdict, pure, oracle_dim,
                           oracle_codim, tuple(problems))


def classification_json(g: BipartiteGraph) -> dict:
    """JSON-ready summary; the macaulay_order key appears only when it exists."""
    verdict = classify(g)
    payload: dict = {
        "unmixed": verdict.unmixed,
        "d": verdict.d,
        "dimension": verdict.dimension,
        "block_sizes": None if verdict.block_sizes is None else list(verdict.block_sizes),
        "n_min": verdict.n_min,
        "t_sharp": verdict.t_sharp,
        "buchsbaum": verdict.buchsbaum if verdict.unmixed else None,
        "cohen_macaulay": verdict.cohen_macaulay if verdict.unmixed else None,
    }
    if verdict.unmixed and verdict.cohen_macaulay:
        mo = macaulay_order(g, verdict.order)
        if mo is None:
            raise ConsistencyError("cross-free graph without a Macaulay order")
        payload["macaulay_order"] = list(mo.order)
    return payload

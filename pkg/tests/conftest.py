"""Shared test helpers: independent oracles the library must agree with.

Everything in here is deliberately written from scratch against the raw
definitions (subset filtering, Fraction Gaussian elimination, brute-force
bijection search) so that agreement with the library is evidence, not
circularity.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from hypothesis import HealthCheck, settings

from cmtgraphs import BipartiteGraph

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


# ---------------------------------------------------------------- graphs

def graph(left, right, edges) -> BipartiteGraph:
    return BipartiteGraph.of(left.split(), right.split(),
                             [tuple(e.split("-")) for e in edges.split()])


def complete(n: int, prefix_x: str = "x", prefix_y: str = "y") -> BipartiteGraph:
    return BipartiteGraph.of(
        [f"{prefix_x}{i}" for i in range(1, n + 1)],
        [f"{prefix_y}{i}" for i in range(1, n + 1)],
        [(f"{prefix_x}{i}", f"{prefix_y}{j}")
         for i in range(1, n + 1) for j in range(1, n + 1)],
    )


def rename(g: BipartiteGraph, suffix: str) -> BipartiteGraph:
    return BipartiteGraph.of(
        [v + suffix for v in g.left],
        [v + suffix for v in g.right],
        [(x + suffix, y + suffix) for x, y in g.edges],
    )


def relabeled_copy(g: BipartiteGraph, rng: random.Random,
                   allow_swap: bool = True) -> BipartiteGraph:
    """Random isomorphic copy: fresh names, shuffled sides, optional side swap."""
    verts = list(g.vertices)
    fresh = [f"v{k}" for k in range(len(verts))]
    rng.shuffle(fresh)
    name = dict(zip(verts, fresh))
    left = [name[v] for v in g.left]
    right = [name[v] for v in g.right]
    edges = [(name[x], name[y]) for x, y in g.edges]
    rng.shuffle(left)
    rng.shuffle(right)
    if allow_swap and rng.random() < 0.5:
        left, right = right, left
        edges = [(y, x) for x, y in edges]
    return BipartiteGraph.of(left, right, edges)


def random_bipartite(rng: random.Random, max_side: int = 4,
                     edge_prob: float = 0.5) -> BipartiteGraph:
    nl = rng.randint(1, max_side)
    nr = rng.randint(1, max_side)
    left = [f"x{i}" for i in range(nl)]
    right = [f"y{j}" for j in range(nr)]
    edges = [(x, y) for x in left for y in right if rng.random() < edge_prob]
    return BipartiteGraph.of(left, right, edges)


def _side_preserving_iso(g: BipartiteGraph, h: BipartiteGraph) -> bool:
    if len(g.left) != len(h.left) or len(g.right) != len(h.right):
        return False
    if len(g.edges) != len(h.edges):
        return False
    h_columns = sorted(sorted(x for x in h.left if (x, y) in h.edges)
                       for y in h.right)
    g_neighbors = {y: [x for x in g.left if (x, y) in g.edges] for y in g.right}
    for sigma in itertools.permutations(h.left):
        mapping = dict(zip(g.left, sigma))
        mapped = sorted(sorted(mapping[x] for x in g_neighbors[y]) for y in g.right)
        if mapped == h_columns:
            return True
    return False


def graphs_isomorphic(g: BipartiteGraph, h: BipartiteGraph) -> bool:
    """Brute-force isomorphism, sides preserved or swapped wholesale."""
    if _side_preserving_iso(g, h):
        return True
    swapped = BipartiteGraph.of(g.right, g.left, [(y, x) for x, y in g.edges])
    return _side_preserving_iso(swapped, h)


def count_iso_classes(graphs) -> int:
    """Pairwise brute-force class count, independent of canonical_form."""
    reps: list[BipartiteGraph] = []
    for g in graphs:
        if not any(graphs_isomorphic(g, r) for r in reps):
            reps.append(g)
    return len(reps)


# ------------------------------------------------------- matchings oracle

def all_pure_pairings(g: BipartiteGraph) -> list[dict[str, str]]:
    """Every perfect matching satisfying the transitivity condition.

    Independent of the library's backtracking: walks all permutations.
    """
    if len(g.left) != len(g.right):
        return []
    out = []
    for perm in itertools.permutations(g.right):
        match = dict(zip(g.left, perm))
        if any((x, y) not in g.edges for x, y in match.items()):
            continue
        good = True
        for xi, xj, xk in itertools.permutations(g.left, 3):
            if ((xi, match[xj]) in g.edges and (xj, match[xk]) in g.edges
                    and (xi, match[xk]) not in g.edges):
                good = False
                break
        if good:
            out.append(match)
    return out


# ------------------------------------------------------ homology oracle

def brute_maximal_independent_sets(g: BipartiteGraph) -> set[frozenset[str]]:
    verts = g.vertices
    independent = []
    for k in range(len(verts) + 1):
        for combo in itertools.combinations(verts, k):
            if all((x, y) not in g.edges
                   for x, y in itertools.permutations(combo, 2)):
                independent.append(frozenset(combo))
    return {s for s in independent
            if not any(s < other for other in independent)}


def fraction_rank(rows: list[list[int]]) -> int:
    """Plain Gaussian elimination over Fraction; the slow, obvious rank."""
    if not rows or not rows[0]:
        return 0
    m = [[Fraction(v) for v in row] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        scale = m[rank][col]
        m[rank] = [v / scale for v in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def brute_betti(facets) -> tuple[int, ...]:
    """Reduced Betti numbers from degree -1 up, straight from the definition."""
    facet_sets = [frozenset(f) for f in facets]
    if not facet_sets:
        return ()
    all_faces: set[tuple[str, ...]] = set()
    for facet in facet_sets:
        members = sorted(facet)
        for k in range(len(members) + 1):
            all_faces.update(itertools.combinations(members, k))
    top = max(len(f) for f in all_faces) - 1
    by_dim = {k: sorted(f for f in all_faces if len(f) == k + 1)
              for k in range(-1, top + 1)}
    ranks = {-1: 0, top + 1: 0}
    for k in range(0, top + 1):
        lower, upper = by_dim[k - 1], by_dim[k]
        row_of = {f: i for i, f in enumerate(lower)}
        matrix = [[0] * len(upper) for _ in lower]
        for col, face in enumerate(upper):
            for i in range(len(face)):
                matrix[row_of[face[:i] + face[i + 1:]]][col] = (-1) ** i
        ranks[k] = fraction_rank(matrix)
    return tuple(len(by_dim[k]) - ranks[k] - ranks[k + 1]
                 for k in range(-1, top + 1))

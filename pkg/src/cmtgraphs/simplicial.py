"""Simplicial complexes and the brute-force Cohen-Macaulay oracle.

Everything here is definitional and exact.  A complex is stored by its
facets; reduced homology is computed over the rationals from integer
boundary matrices whose ranks come out of fraction-free (Bareiss)
elimination, so no floating point is involved anywhere.

Cohen-Macaulayness is decided by the Reisner criterion: every face link
must have vanishing reduced homology below its own dimension.  `is_cm_t`
is the literal relaxation that only inspects links of faces with at least
t vertices, and `cm_codim` finds the least such t.  `cm_codim_recursive`
reaches the same number along a different route (peeling one vertex link
at a time), which gives the test suite an internal cross-check.

Two degenerate complexes are kept distinct: the empty complex (no faces
at all) and the complex whose only face is the empty set.  The latter has
dimension -1, one reduced homology class in degree -1, and counts as
Cohen-Macaulay, which is what makes links of facets uniform to handle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .bigraph import BipartiteGraph, ConsistencyError


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    facets: frozenset[frozenset[str]]

    def __post_init__(self) -> None:
        universe = set(self.vertices)
        if len(universe) != len(self.vertices):
            raise ValueError("duplicate vertex in complex universe")
        for facet in self.facets:
            if not facet <= universe:
                raise ValueError(f"facet {sorted(facet)} leaves the vertex universe")
        for a, b in itertools.combinations(self.facets, 2):
            if a <= b or b <= a:
                raise ConsistencyError("facet list contains nested faces")


def from_facets(vertices, faces) -> SimplicialComplex:
    """Build a complex from any face family, pruning non-maximal members."""
    candidates = [frozenset(f) for f in faces]
    maximal = [f for f in candidates
               if not any(f < other for other in candidates)]
    return SimplicialComplex(tuple(vertices), frozenset(maximal))


def independence_complex(g: BipartiteGraph) -> SimplicialComplex:
    """The complex of independent vertex sets of g, given by its facets.

    Maximal independent sets are maximal cliques of the complement graph;
    Bron-Kerbosch with pivoting enumerates them without repetition.
    """
    verts = g.vertices
    universe = set(verts)
    nonadj = {v: universe - set(g.neighbors(v)) - {v} for v in verts}
    facets: list[frozenset[str]] = []

    def grow(chosen: set[str], allowed: set[str], excluded: set[str]) -> None:
        if not allowed and not excluded:
            facets.append(frozenset(chosen))
            return
        pivot = max(allowed | excluded, key=lambda u: len(nonadj[u] & allowed))
        for v in sorted(allowed - nonadj[pivot]):
            grow(chosen | {v}, allowed & nonadj[v], excluded & nonadj[v])
            allowed.discard(v)
            excluded.add(v)

    grow(set(), set(verts), set())
    return SimplicialComplex(tuple(verts), frozenset(facets))


def dim(c: SimplicialComplex) -> int:
    if not c.facets:
        raise ValueError("the empty complex has no dimension")
    return max(len(f) for f in c.facets) - 1


def is_pure(c: SimplicialComplex) -> bool:
    return len({len(f) for f in c.facets}) <= 1


@lru_cache(maxsize=None)
def faces(c: SimplicialComplex) -> frozenset[frozenset[str]]:
    """Every face of c, the empty set included whenever c has any facet."""
    out: set[frozenset[str]] = set()
    for facet in c.facets:
        members = sorted(facet)
        for k in range(len(members) + 1):
            out.update(map(frozenset, itertools.combinations(members, k)))
    return frozenset(out)


def link(c: SimplicialComplex, face) -> SimplicialComplex:
    """Faces disjoint from `face` whose union with it stays a face."""
    f = frozenset(face)
    containing = [facet for facet in c.facets if f <= facet]
    if not containing:
        raise ValueError(f"{sorted(f)} is not a face of the complex")
    remaining = tuple(v for v in c.vertices if v not in f)
    return from_facets(remaining, (facet - f for facet in containing))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    overlap = set(a.vertices) & set(b.vertices)
    if overlap:
        raise ValueError(f"vertex names shared between operands: {sorted(overlap)}")
    return from_facets(a.vertices + b.vertices,
                       (fa | fb for fa in a.facets for fb in b.facets))


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers over the rationals, from degree -1 upward."""

    betti: tuple[int, ...]

    def rank(self, k: int) -> int:
        idx = k + 1
        if 0 <= idx < len(self.betti):
            return self.betti[idx]
        return 0

    def as_dict(self) -> dict[str, int]:
        return {str(k - 1): b for k, b in enumerate(self.betti)}


def _integer_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by Bareiss elimination; all arithmetic exact."""
    m = [row[:] for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, n_rows):
            row_i, row_r = m[i], m[r]
            factor = row_i[c]
            for j in range(c + 1, n_cols):
                row_i[j] = (row_i[j] * row_r[c] - factor * row_r[j]) // prev
            row_i[c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == n_rows:
            break
    return rank


def _boundary_rank(lower: list[tuple[str, ...]], upper: list[tuple[str, ...]]) -> int:
    """Rank of the boundary map from the span of `upper` down to `lower`."""
    if not lower or not upper:
        return 0
    row_of = {f: i for i, f in enumerate(lower)}
    matrix = [[0] * len(upper) for _ in lower]
    for col, face in enumerate(upper):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            matrix[row_of[sub]][col] = (-1) ** i
    return _integer_rank(matrix)


@lru_cache(maxsize=None)
def reduced_homology(c: SimplicialComplex) -> HomologyProfile:
    """Reduced Betti numbers of c from degree -1 through dim(c)."""
    if not c.facets:
        return HomologyProfile(())
    top = dim(c)
    by_dim: dict[int, list[tuple[str, ...]]] = {
        k: sorted(tuple(sorted(f)) for f in faces(c) if len(f) == k + 1)
        for k in range(-1, top + 1)
    }
    ranks = {k: _boundary_rank(by_dim[k - 1], by_dim[k])
             for k in range(0, top + 1)}
    ranks[-1] = 0
    ranks[top + 1] = 0
    betti = tuple(len(by_dim[k]) - ranks[k] - ranks[k + 1]
                  for k in range(-1, top + 1))
    # Reduced Euler-Poincare identity; a failure means the rank code is wrong.
    face_sum = sum((-1) ** k * len(by_dim[k]) for k in range(-1, top + 1))
    betti_sum = sum((-1) ** k * b for k, b in zip(range(-1, top + 1), betti))
    if face_sum != betti_sum:
        raise ConsistencyError(
            f"Euler-Poincare mismatch: faces {face_sum}, homology {betti_sum}")
    return HomologyProfile(betti)


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** (len(f) - 1) for f in faces(c))


@lru_cache(maxsize=None)
def is_cohen_macaulay(c: SimplicialComplex) -> bool:
    """Reisner criterion over the rationals, every face link inspected."""
    if not c.facets:
        return True
    for f in faces(c):
        lk = link(c, f)
        top = dim(lk)
        profile = reduced_homology(lk)
        if any(profile.rank(k) for k in range(-1, top)):
            return False
    return True


def is_cm_t(c: SimplicialComplex, t: int) -> bool:
    """Pure, and every face with at least t vertices has a Cohen-Macaulay link.

    Negative t is read as 0: the condition cannot see faces of negative size.
    """
    t = max(t, 0)
    if not is_pure(c):
        return False
    if not c.facets:
        return True
    return all(is_cohen_macaulay(link(c, f))
               for f in faces(c) if len(f) >= t)


@lru_cache(maxsize=None)
def cm_codim(c: SimplicialComplex) -> int | None:
    """Least t with is_cm_t(c, t), or None when c is not pure.

    One sweep over the faces suffices: the least passing t is one more than
    the largest face whose link fails the Reisner criterion.
    """
    if not is_pure(c):
        return None
    if not c.facets:
        return 0
    worst = -1
    for f in faces(c):
        if not is_cohen_macaulay(link(c, f)):
            worst = max(worst, len(f))
    return worst + 1


@lru_cache(maxsize=None)
def cm_codim_recursive(c: SimplicialComplex) -> int | None:
    """Same number as cm_codim, reached by peeling vertex links.

    For t >= 1 a pure complex is CM_t exactly when every vertex link is
    CM_{t-1}, so the sharp codimension of a non-CM complex is one more than
    the worst sharp codimension among its vertex links.
    """
    if not is_pure(c):
        return None
    if is_cohen_macaulay(c):
        return 0
    worst = 0
    for f in faces(c):
        if len(f) != 1:
            continue
        sub = cm_codim_recursive(link(c, f))
        if sub is None:
            raise ConsistencyError("vertex link of a pure complex came out non-pure")
        worst = max(worst, sub)
    return worst + 1

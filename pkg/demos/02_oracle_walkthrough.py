"""
What the homology oracle actually computes
==========================================

The classifier never touches homology; the oracle is the slow second
opinion.  This walks through K_{2,2} step by step: its independence
complex, the reduced homology of every face link, and where the first
failure sits.
"""

from cmtgraphs import (
    cm_codim,
    dim,
    faces,
    independence_complex,
    is_cohen_macaulay,
    link,
    parse_graph,
    reduced_homology,
)

g = parse_graph("L: x1 x2\nR: y1 y2\nE: x1-y1 x1-y2 x2-y1 x2-y2\n")
ind = independence_complex(g)

print("facets of Ind(K_2,2):", sorted(sorted(f) for f in ind.facets))
print("dimension:", dim(ind))

# The whole complex is two disjoint segments: reduced H_0 has rank 1,
# which already breaks the Cohen-Macaulay condition at the empty face.
print("reduced betti numbers:", reduced_homology(ind).as_dict())
print("Cohen-Macaulay:", is_cohen_macaulay(ind))

# Every nonempty face has a perfectly fine link, so the failure is
# confined to faces with fewer than 1 vertex and the codimension is 1.
for f in sorted(faces(ind), key=lambda f: (len(f), sorted(f))):
    lk = link(ind, f)
    print(f"  link of {sorted(f) or '{}'}: CM={is_cohen_macaulay(lk)}")

print("cm_codim:", cm_codim(ind))

"""
Counting the small examples
===========================

Cohen-Macaulay bipartite graphs of a fixed dimension are finite in
number; graphs of a fixed sharp codimension t >= 2 fall into finitely
many families once the one free block size of the parametric families
is treated as a parameter.
"""

from cmtgraphs import (
    enumerate_cm,
    enumerate_sharp_cmt,
    enumerate_unmixed,
    to_document,
)

for dimension in (0, 1, 2, 3):
    print(f"CM graphs of dimension {dimension}: {len(enumerate_cm(dimension))}")

for d in (1, 2, 3, 4):
    print(f"unmixed graphs on {d} pairs: {len(enumerate_unmixed(d))}")

print()
for t in (2, 3, 4):
    fams = enumerate_sharp_cmt(t)
    connected = sum(f.connected for f in fams)
    parametric = sum(f.parametric for f in fams)
    print(f"t = {t}: {len(fams)} families ({connected} connected, "
          f"{parametric} parametric)")

# The two finite families at t = 3 are exactly the second and third
# built-in graphs: two disjoint K_2,2 blocks, with or without a one-way
# bridge of cross edges.
print()
for fam in enumerate_sharp_cmt(3):
    if not fam.parametric:
        print(f"fixed family, multiplicities {fam.multiplicities}:")
        print(to_document(fam.graphs[0]))

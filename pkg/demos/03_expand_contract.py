"""
The expansion calculus
======================

Blowing the i-th matched pair of a Cohen-Macaulay base up to a complete
block K_{n_i,n_i} moves the codimension in a completely predictable way:
with n the sum of the multiplicities and n_0 the smallest one above 1,
the result is sharply CM_{n - n_0 + 1}.
"""

from cmtgraphs import (
    Expansion,
    classify,
    cm_codim,
    contract,
    expand,
    independence_complex,
    parse_graph,
    predicted_codim,
    to_document,
)

base = parse_graph("L: x1 x2\nR: y1 y2\nE: x1-y1 x1-y2 x2-y2\n")
print("base (a Cohen-Macaulay path):")
print(to_document(base))

for mult in ((1, 1), (1, 3), (2, 2), (3, 2)):
    e = Expansion(base, mult)
    g = expand(e)
    t = predicted_codim(e)
    print(f"multiplicities {mult}: predicted t = {t}, "
          f"classifier t = {classify(g).t_sharp}, "
          f"oracle t = {cm_codim(independence_complex(g))}")

# contract is the inverse: it collapses each block back to one edge and
# recovers the multiplicities from the block sizes.
g = expand(Expansion(base, (1, 3)))
back = contract(g)
print("\nround trip of (1, 3):", back.multiplicities)
print(to_document(back.base))

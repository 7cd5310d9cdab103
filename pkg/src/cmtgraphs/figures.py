"""Built-in example graphs available to the CLI under fixed names.

fig1  one plain matched edge (x1, y1) plus a complete 3-by-3 block; the
      lone left vertex x1 additionally covers the whole right side of the
      block.  Blocks [1, 3], d = 4, sharp codimension 2.
fig2  two disjoint complete 2-by-2 blocks.  Blocks [2, 2], d = 4, sharp
      codimension 3.
fig3  the same two blocks joined up: every left vertex of the first block
      covers the whole right side of the second.  Same invariants as fig2
      but connected.
"""

from __future__ import annotations

from .bigraph import BipartiteGraph, parse_graph

_DOCUMENTS = {
    "fig1": """\
# matched edge plus a 3-by-3 block, the edge's left vertex covering the block's right side
L: x1 x21 x22 x23
R: y1 y21 y22 y23
E: x1-y1 x1-y21 x1-y22 x1-y23
E: x21-y21 x21-y22 x21-y23
E: x22-y21 x22-y22 x22-y23
E: x23-y21 x23-y22 x23-y23
""",
    "fig2": """\
# two disjoint 2-by-2 blocks
L: x11 x12 x21 x22
R: y11 y12 y21 y22
E: x11-y11 x11-y12 x12-y11 x12-y12
E: x21-y21 x21-y22 x22-y21 x22-y22
""",
    "fig3": """\
# two 2-by-2 blocks, the first block's left side covering the second block's right side
L: x11 x12 x21 x22
R: y11 y12 y21 y22
E: x11-y11 x11-y12 x12-y11 x12-y12
E: x21-y21 x21-y22 x22-y21 x22-y22
E: x11-y21 x11-y22 x12-y21 x12-y22
""",
}

BUILTIN_NAMES = tuple(sorted(_DOCUMENTS))


def builtin_document(name: str) -> str:
    try:
        return _DOCUMENTS[name]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}, have {', '.join(BUILTIN_NAMES)}") from None


def builtin_graph(name: str) -> BipartiteGraph:
    return parse_graph(builtin_document(name))

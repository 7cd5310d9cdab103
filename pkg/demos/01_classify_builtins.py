"""
Classifying the three built-in graphs
=====================================

Each built-in is unmixed on 4 matched pairs; they differ in how their
complete bipartite blocks sit next to each other, and that alone decides
the sharp codimension.
"""

import json

from cmtgraphs import builtin_document, builtin_graph, classification_json

for name in ("fig1", "fig2", "fig3"):
    g = builtin_graph(name)
    print(f"== {name}: {len(g.left)}+{len(g.right)} vertices, "
          f"{len(g.edges)} edges")
    print(builtin_document(name))
    print(json.dumps(classification_json(g), indent=2, sort_keys=True))
    print()

# fig2 and fig3 share the block structure [2, 2] and land at t = 3 either
# way; the two cross edges fig3 adds do not move the codimension.

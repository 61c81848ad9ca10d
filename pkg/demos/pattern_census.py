"""
Counting the patterns behind the hypotheses
===========================================

The hypotheses ask how many colors the short directed cycles and the two
joined-cycle patterns use.  Here we build the two joined patterns, list
their occurrences, and evaluate every hypothesis on a random instance.
"""

import json

from kcolored import (
    ColoredDigraph,
    GenParams,
    enumerate_cycles,
    enumerate_joined,
    hypothesis_report,
    random_colored_smp,
)

# two triangles glued along the arc 2 -> 0
c3c3 = ColoredDigraph(4, [[0], [1], [2], [3]],
                      [(0, 1, 0), (1, 2, 1), (0, 3, 0), (3, 2, 2), (2, 0, 1)], m=3)
print("triangles:", [o.vertices for o in enumerate_cycles(c3c3, 3)])
for occ in enumerate_joined(c3c3, "C3joinC3"):
    print("C3joinC3 at", occ.vertices, "uses colors", sorted(occ.colors))

# two 4-cycles glued along the path 0 -> 1 -> 2, on a bipartite vertex set
c4c4 = ColoredDigraph(5, [[0, 2], [1, 3, 4]],
                      [(0, 1, 0), (1, 2, 0), (2, 3, 1), (3, 0, 1), (2, 4, 2), (4, 0, 2)], m=3)
for occ in enumerate_joined(c4c4, "C4joinC4"):
    print("C4joinC4 at", occ.vertices, "uses colors", sorted(occ.colors))

D = random_colored_smp(GenParams(part_sizes=(2, 2, 1), p_symmetric=0.2, m=3, seed=42))
report = hypothesis_report(D).to_dict()
witnesses = report.pop("witnesses")
print(json.dumps(report, indent=2))
for flag, occ in witnesses.items():
    print(f"{flag} fails on {occ['kind']} {occ['vertices']} with colors {occ['colors']}")

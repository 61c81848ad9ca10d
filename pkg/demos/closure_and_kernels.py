"""
Closures and k-colored kernels
==============================

A directed triangle with three different colors has no kernel by
monochromatic paths, but going around two arcs is enough to reach every
vertex with two colors.
"""

from kcolored import ColoredDigraph, find_k_colored_kernel, is_k_colored_kernel, k_closure, min_colors_path

triangle = ColoredDigraph(3, [[0], [1], [2]], [(0, 1, 0), (1, 2, 1), (2, 0, 2)], m=3)

# fewest colors needed to go from 0 to 2, with the path that achieves it
j, witness = min_colors_path(triangle, 0, 2, k_max=3)
print("0 -> 2 needs", j, "colors along", witness.vertices)

# the 1-closure keeps only the arcs; the 2-closure is complete and symmetric
for k in (1, 2):
    print(f"C_{k} arcs:", sorted(k_closure(triangle, k).arcs))

for k in (1, 2):
    result = find_k_colored_kernel(triangle, k)
    print(f"k={k}:", result.describe())

# verify directly on the colored digraph, without the closure
print("{0} is a 2-colored kernel:", bool(is_k_colored_kernel(triangle, {0}, 2)))
print("why {0} fails for k=1:", is_k_colored_kernel(triangle, {0}, 1).violation)

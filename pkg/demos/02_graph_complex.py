#!/usr/bin/env python3
# The edge-ordered graph complex: orientation signs, zero graphs, the
# insertion bracket, and the vertex-splitting differential.

from poissonflow import (Graph, GraphSum, bracket, canonicalize, differential,
                         is_cocycle, point, render_graphsum, stick,
                         tetrahedron)

# a graph is its ordered edge list; transposing two edges flips its sign
g = tetrahedron()
swapped = Graph(4, (g.edges[1], g.edges[0]) + g.edges[2:])
print("tetrahedron canonical:", canonicalize(g))
print("with two edges swapped:", canonicalize(swapped))

# graphs with an odd-edge-permutation automorphism vanish identically;
# the 2-path and the triangle are the smallest examples
print("\n2-path:", canonicalize(Graph(3, ((1, 2), (2, 3)))))
print("triangle:", canonicalize(Graph(3, ((1, 2), (2, 3), (1, 3)))))

# the differential splits vertices; its normalization on the 1-vertex graph
print("\nd(point) =", render_graphsum(differential(point())))

# the tetrahedron is a cocycle, the bare vertex is not
print("d(tetrahedron) =", render_graphsum(differential(g)))
print("is_cocycle(tetrahedron):", is_cocycle(GraphSum.single(g)))
print("is_cocycle(point):", is_cocycle(GraphSum.single(point())))

# the bracket is graded by edge count; the stick squares to zero
print("\n[stick, stick] =", render_graphsum(bracket(stick(), stick())))
print("[g3, g3] =", render_graphsum(bracket(g, g)))

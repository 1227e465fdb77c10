#!/usr/bin/env python3
# Evaluate the tetrahedron on four copies of a Poisson bivector: the flow
# value, its cocycle property, and the vanishing cases.

from poissonflow import (catalog, cocycle1, euler_field, flow,
                         render_multivector, schouten)
from poissonflow.verify import uniform_ratio

g3 = catalog.get("tetrahedron").payload
P1 = catalog.get("P1").payload
QP1 = catalog.get("QP1").payload
E = euler_field(4)

# the flow of P1 under the tetrahedron reproduces the stored bivector up to
# one overall rational
F1 = flow(g3, P1)
print("flow(g3, P1) leading component:",
      render_multivector(F1)[:70], "...")
print("proportionality to stored QP1:", uniform_ratio(F1, QP1))

# it is a Poisson cocycle of scale 4 (one factor per vertex)
print("[[P1, F1]] = 0:", schouten(P1, F1).is_zero())
print("[[E, F1]] = 4 F1:", schouten(E, F1) == F1.scale(4))

# with the linear Euler field in one vertex the 1-vector dies: every edge
# at that vertex differentiates the linear coefficients at least twice
X = cocycle1(g3, E, P1)
print("cocycle1(g3, E, P1) =", render_multivector(X))

# linear brackets annihilate the flow for the same reason
KK = catalog.get("gl2kk").payload
print("flow(g3, linear gl2 bracket) =", render_multivector(flow(g3, KK)))

# on R^2 every density gives a Poisson structure and a nonzero flow
from poissonflow import Multivector, parse_poly
p2 = Multivector(2, {(1, 2): parse_poly("x1^2*x2", 2)})
print("\nflow on R^2 for density x^2 y:",
      render_multivector(flow(g3, p2)))

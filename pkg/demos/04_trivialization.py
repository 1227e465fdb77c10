#!/usr/bin/env python3
# Exactly solve the coboundary equation Q = [[Y,P]], inspect the gauge
# freedom, and fit a flow back into the determinant-bracket family.

from poissonflow import (catalog, flow, nambu_bivector, parse_poly,
                         render_multivector, schouten, tangent_fit,
                         trivialize)

P1 = catalog.get("P1").payload
QP1 = catalog.get("QP1").payload
Y1 = catalog.get("Y1").payload

# the stored flow value is a coboundary; the solver proves it exactly
sol = trivialize(QP1, P1)
print("status:", sol.status)
print("residual is zero:",
      (schouten(sol.particular, P1) - QP1).is_zero())
print("kernel dimension at degree 4:", sol.kernel_dim)

# solutions form an affine coset; the stored Y1 is one of them
print("stored Y1 lies in the solution set:", sol.contains(Y1))
print("particular representative:", render_multivector(sol.particular)[:70],
      "...")

# determinant brackets on R^3: with a nonconstant density the tetrahedral
# flow is nonzero, yet remains inside the family tangent directions
g3 = catalog.get("tetrahedron").payload
a = parse_poly("x1^4 + x2^4 + x3^4", 3)
rho = parse_poly("x1", 3)
P = nambu_bivector(a, rho)
Q = flow(g3, P)
print("\nflow of the density-x bracket is nonzero:", not Q.is_zero())
status, adot, rhodot = tangent_fit(Q, a, rho)
print("tangent fit:", status)
print("Casimir velocity degree:", adot.degree())

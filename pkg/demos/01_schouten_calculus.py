#!/usr/bin/env python3
# Walk through the exact multivector calculus: polynomials, odd variables,
# the Schouten bracket, Jacobi identities, and homogeneity scales.

from poissonflow import (catalog, euler_field, homogeneity_scale, jacobiator,
                         parse_multivector, parse_poly, schouten)

# polynomials are exact: arbitrary-precision rational coefficients
p = parse_poly("1/2*x1^2*x2 - 3*x3")
print("a polynomial:", p)
print("its x1-derivative:", p.partial(1))

# a bivector on R^3 in odd variables: f xi1 xi2 stands for f d/dx ^ d/dy
b = parse_multivector("(x1) xi1 xi2 + (x3) xi2 xi3")
print("\na bivector:", b)
print("its jacobiator:", jacobiator(b))          # zero: this one is Poisson

bad = parse_multivector("(x1) xi1 xi2 + (x3) xi1 xi3")
print("a non-Poisson bivector has jacobiator:", jacobiator(bad))

# the catalog carries the two cubic R-matrix brackets on R^4
P1 = catalog.get("P1").payload
print("\ncatalog P1:", P1)
print("jacobiator(P1) = 0:", jacobiator(P1).is_zero())

# cubic coefficients mean homogeneity scale 1 along the Euler field
E = euler_field(4)
print("homogeneity scale of P1 along E:", homogeneity_scale(E, P1))

# the Schouten bracket restricts to the commutator on vector fields
v = parse_multivector("(x2) xi1", nvars=2)
w = parse_multivector("(x1) xi2", nvars=2)
print("\n[[x2 d1, x1 d2]] =", schouten(v, w))

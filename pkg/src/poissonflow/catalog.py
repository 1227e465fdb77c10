"""Built-in objects: the two cubic R-matrix brackets on R^4, their graph
flows and trivializing fields, the Euler field, the linear bracket of the
2x2 matrix algebra, the tetrahedron, and determinant-bracket templates.

Objects live as text fixtures under data/ in the package formats, one per
file; every entry flagged as Poisson is re-checked at load time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .gracomplex import parse_graphsum
from .multivec import Multivector, jacobiator, parse_multivector
from .nambu import nambu_bivector
from .ratpoly import parse_poly


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dimension: int
    payload: object          # Multivector or GraphSum
    note: str
    poisson: bool = False


def _read(filename: str) -> str:
    return resources.files("poissonflow.data").joinpath(filename).read_text()


def _mv(filename: str, nvars: int) -> Multivector:
    return parse_multivector(_read(filename), nvars=nvars)


@lru_cache(maxsize=1)
def load_catalog():
    """Name -> CatalogEntry; Poisson entries are Jacobi-checked here."""
    entries = [
        CatalogEntry("P1", 4, _mv("p1.txt", 4),
                     "cubic bracket of the diagonal-part R-matrix on the 2x2 "
                     "matrix algebra; sign chosen so the stored Y1 satisfies "
                     "the coboundary identity", poisson=True),
        CatalogEntry("P2", 4, _mv("p2.txt", 4),
                     "cubic bracket of the second R-matrix on the 2x2 matrix "
                     "algebra; sign convention as for P1", poisson=True),
        CatalogEntry("QP1", 4, _mv("q_p1.txt", 4),
                     "tetrahedral flow value at P1, normalized as displayed "
                     "(leading term -48*x1^5*x2)"),
        CatalogEntry("QP2", 4, _mv("q_p2.txt", 4),
                     "tetrahedral flow value at P2, normalized as displayed "
                     "(leading term -384*x1^5*x2)"),
        CatalogEntry("Y1", 4, _mv("y1.txt", 4),
                     "vector field with [[Y1,P1]] = QP1, one representative "
                     "of its gauge coset"),
        CatalogEntry("Y2", 4, _mv("y2.txt", 4),
                     "vector field with [[Y2,P2]] = QP2"),
        CatalogEntry("euler", 4, _mv("euler_r4.txt", 4),
                     "Euler vector field on R^4"),
        CatalogEntry("gl2kk", 4, _mv("gl2_linear.txt", 4),
                     "linear bracket of the 2x2 matrix Lie algebra on the "
                     "dual space", poisson=True),
        CatalogEntry("tetrahedron", 4, parse_graphsum(_read("tetrahedron.txt")),
                     "complete graph on 4 vertices, edges in lexicographic "
                     "order; a cocycle in bi-grading (4,6)"),
        CatalogEntry("nambu-quartic", 3,
                     nambu_bivector(parse_poly("x1^4 + x2^4 + x3^4", 3)),
                     "determinant bracket with Casimir x^4+y^4+z^4, density 1; "
                     "cubic coefficients", poisson=True),
        CatalogEntry("nambu-cubic", 3,
                     nambu_bivector(
                         parse_poly("1/3*x1^3 + 1/3*x2^3 + 1/3*x3^3", 3)),
                     "determinant bracket with Casimir (x^3+y^3+z^3)/3; "
                     "quadratic coefficients, no polynomial homogenizing "
                     "field exists", poisson=True),
    ]
    catalog = {}
    for e in entries:
        if e.poisson and not jacobiator(e.payload).is_zero():
            raise AssertionError("catalog entry %s is not Poisson" % e.name)
        catalog[e.name.lower()] = e
    return catalog


def get(name: str) -> CatalogEntry:
    cat = load_catalog()
    key = name.lower()
    if key not in cat:
        raise KeyError("no catalog entry %r (have: %s)"
                       % (name, ", ".join(sorted(cat))))
    return cat[key]


def names():
    return sorted(e.name for e in load_catalog().values())


@lru_cache(maxsize=1)
def derived_constants():
    """Regression constants frozen after the first verified run."""
    return json.loads(_read("derived_constants.json"))

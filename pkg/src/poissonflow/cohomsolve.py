"""Exact solver for the coboundary equation Q = [[Y,P]].

The unknown Y is a vector field whose r components are homogeneous
polynomials of one degree D; matching coefficients of [[Y,P]] - Q turns the
equation into a linear system over Q, solved by fraction-free (Bareiss)
elimination on arbitrary-precision integers.  Solutions come as one
particular field plus a basis of the kernel of [[.,P]] at degree D: the
solution set is an affine coset, exactly as the gauge freedom demands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm

from .errors import DimensionError, PreconditionError
from .multivec import Multivector, schouten
from .ratpoly import Poly, ratnorm


def monomials(nvars: int, degree: int):
    """Exponent tuples of total degree ``degree`` in descending grlex order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec((), degree, nvars)
    return out


# -- raw exact linear algebra -------------------------------------------


@dataclass
class RawSolution:
    status: str                       # "solved" | "infeasible"
    particular: list | None = None    # Fractions, free unknowns set to zero
    kernel: list = field(default_factory=list)
    witness: object = None            # label of an inconsistent equation


def _integerize(row, b):
    dens = [x.denominator for x in row if isinstance(x, Fraction)]
    if isinstance(b, Fraction):
        dens.append(b.denominator)
    if not dens:
        return list(row), b
    m = lcm(*dens)
    return [int(x * m) for x in row], int(b * m)


def solve_raw(matrix, rhs, row_labels=None) -> RawSolution:
    """Solve A x = b exactly over the rationals.

    Forward pass is fraction-free (Bareiss) on integer rows, so intermediate
    entries are minors of the scaled system; back-substitution is rational.
    """
    ncols = len(matrix[0]) if matrix else 0
    if row_labels is None:
        row_labels = list(range(len(matrix)))
    rows = []
    labels = []
    for k, (row, b) in enumerate(zip(matrix, rhs)):
        irow, ib = _integerize(row, b)
        if any(irow) or ib:
            rows.append(irow + [ib])
            labels.append(row_labels[k])
    nrows = len(rows)

    piv_cols = []
    piv_row = 0
    prev = 1
    for col in range(ncols):
        sel = None
        for rw in range(piv_row, nrows):
            if rows[rw][col]:
                sel = rw
                break
        if sel is None:
            continue
        if sel != piv_row:
            rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
            labels[piv_row], labels[sel] = labels[sel], labels[piv_row]
        piv = rows[piv_row][col]
        base = rows[piv_row]
        for rw in range(piv_row + 1, nrows):
            rk = rows[rw]
            factor = rk[col]
            for cc in range(col, ncols + 1):
                rk[cc] = (rk[cc] * piv - factor * base[cc]) // prev
        prev = piv
        piv_cols.append(col)
        piv_row += 1
        if piv_row == nrows:
            break

    for rw in range(piv_row, nrows):
        if rows[rw][ncols]:
            return RawSolution(status="infeasible", witness=labels[rw])

    pivset = set(piv_cols)
    free_cols = [c for c in range(ncols) if c not in pivset]

    def back_substitute(with_rhs, fixed):
        x = [Fraction(0)] * ncols
        for c, val in fixed.items():
            x[c] = Fraction(val)
        for k in range(len(piv_cols) - 1, -1, -1):
            col = piv_cols[k]
            row = rows[k]
            s = Fraction(row[ncols]) if with_rhs else Fraction(0)
            for cc in range(col + 1, ncols):
                if row[cc] and x[cc]:
                    s -= row[cc] * x[cc]
            x[col] = s / row[col]
        return x

    particular = back_substitute(True, {c: 0 for c in free_cols})
    kernel = [back_substitute(False, {c: (1 if c == fc else 0) for c in free_cols})
              for fc in free_cols]
    return RawSolution(status="solved", particular=particular, kernel=kernel)


def multivector_columns_system(columns, target: Multivector):
    """Rows of 'sum_k x_k * columns[k] = target' over the joint support.

    Returns (matrix, rhs, row_labels); rows are (xi-index tuple, exponent
    tuple) pairs that occur in any column or in the target.
    """
    support = set()
    for mv in list(columns) + [target]:
        for idx, poly in mv.components.items():
            for exps in poly.terms:
                support.add((idx, exps))
    labels = sorted(support)
    index = {lab: k for k, lab in enumerate(labels)}
    matrix = [[0] * len(columns) for _ in labels]
    for c, mv in enumerate(columns):
        for idx, poly in mv.components.items():
            for exps, coeff in poly.terms.items():
                matrix[index[(idx, exps)]][c] = coeff
    rhs = [0] * len(labels)
    for idx, poly in target.components.items():
        for exps, coeff in poly.terms.items():
            rhs[index[(idx, exps)]] = coeff
    return matrix, rhs, labels


# -- the coboundary ansatz ------------------------------------------------


@dataclass
class AnsatzSpec:
    """Shape of the unknown field: r components, each homogeneous of degree D."""

    nvars: int
    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise PreconditionError("ansatz degree must be nonnegative")

    @property
    def unknown_count(self) -> int:
        return self.nvars * comb(self.degree + self.nvars - 1, self.nvars - 1)

    def basis(self):
        """Unknown order: component index major, grlex-descending monomial."""
        monos = monomials(self.nvars, self.degree)
        return [(i, exps) for i in range(1, self.nvars + 1) for exps in monos]

    def field_from_coefficients(self, coeffs) -> Multivector:
        basis = self.basis()
        if len(coeffs) != len(basis):
            raise DimensionError("coefficient vector has wrong length")
        comps = {}
        for (i, exps), c in zip(basis, coeffs):
            c = ratnorm(c)
            if not c:
                continue
            comps.setdefault((i,), {})[exps] = c
        return Multivector(self.nvars, {
            idx: Poly(self.nvars, terms) for idx, terms in comps.items()})

    def coefficients_of(self, y: Multivector):
        """Coefficient vector of a 1-vector in this basis; None if outside."""
        if not (y.is_grade(1) or y.is_zero()):
            return None
        index = {lab: k for k, lab in enumerate(self.basis())}
        vec = [0] * len(index)
        for idx, poly in y.components.items():
            for exps, c in poly.terms.items():
                key = (idx[0], exps)
                if key not in index:
                    return None
                vec[index[key]] = c
        return vec


@dataclass
class AnsatzSystem:
    """Dense exact linear system A x = b with labelled rows and columns."""

    matrix: list            # rows of ints/Fractions
    rhs: list
    row_labels: list        # ((i,j) component, exponent tuple) per row
    col_labels: list        # (component index, exponent tuple) per unknown
    spec: AnsatzSpec

    @property
    def n_rows(self) -> int:
        return len(self.matrix)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)


@dataclass
class Solution:
    """Affine solution set of a solvable instance, or an infeasibility witness."""

    status: str             # "solved" | "infeasible"
    spec: AnsatzSpec | None = None
    particular: Multivector | None = None
    kernel_basis: list = field(default_factory=list)
    witness: tuple | None = None

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_basis)

    def contains(self, y: Multivector) -> bool:
        """Membership of y in particular + span(kernel_basis), decided exactly."""
        if self.status != "solved":
            return False
        dvec = self.spec.coefficients_of(y - self.particular)
        if dvec is None:
            return False
        vecs = [self.spec.coefficients_of(k) for k in self.kernel_basis]
        matrix = [[v[k] for v in vecs] for k in range(len(dvec))]
        return solve_raw(matrix, dvec).status == "solved"


def _homdeg(p: Multivector, what: str) -> int:
    degs = set()
    for poly in p.components.values():
        d = poly.is_homogeneous()
        if d is None:
            raise PreconditionError("%s has non-homogeneous coefficients" % what)
        degs.add(d)
    if len(degs) != 1:
        raise PreconditionError("%s has mixed coefficient degrees" % what)
    return degs.pop()


def default_degree(q: Multivector, p: Multivector) -> int:
    """deg(Q coefficients) - deg(P coefficients) + 1, the degree forced on Y."""
    dq = _homdeg(q, "target bivector")
    dp = _homdeg(p, "Poisson bivector")
    return dq - dp + 1


def assemble(q: Multivector, p: Multivector, spec: AnsatzSpec) -> AnsatzSystem:
    """Linear system whose solutions Y satisfy [[Y,P]] = Q.

    Rows run over the full (component, monomial) grid at the bracket's
    output degree; columns over the ansatz unknowns.
    """
    if q.nvars != p.nvars or q.nvars != spec.nvars:
        raise DimensionError("dimension mismatch between Q, P and the ansatz")
    if not p.is_grade(2):
        raise PreconditionError("P must be a bivector")
    if not (q.is_grade(2) or q.is_zero()):
        raise PreconditionError("Q must be a bivector")
    dp = _homdeg(p, "Poisson bivector")
    out_deg = spec.degree + dp - 1
    if not q.is_zero():
        dq = _homdeg(q, "target bivector")
        if dq != out_deg:
            raise PreconditionError(
                "structurally empty system: [[Y,P]] has coefficient degree %d "
                "but Q has degree %d" % (out_deg, dq))
    r = spec.nvars
    comps = [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    monos = monomials(r, out_deg)
    row_labels = [(c, m) for c in comps for m in monos]
    row_index = {lab: k for k, lab in enumerate(row_labels)}

    matrix = [[0] * spec.unknown_count for _ in row_labels]
    for cidx, (i, exps) in enumerate(spec.basis()):
        e = Multivector._raw(r, {(i,): Poly._raw(r, {exps: 1})})
        b = schouten(e, p)
        for idx, poly in b.components.items():
            for mexps, c in poly.terms.items():
                matrix[row_index[(idx, mexps)]][cidx] = c
    rhs = [0] * len(row_labels)
    for idx, poly in q.components.items():
        for mexps, c in poly.terms.items():
            rhs[row_index[(idx, mexps)]] = c
    return AnsatzSystem(matrix, rhs, row_labels, spec.basis(), spec)


def solve(sys: AnsatzSystem) -> Solution:
    """Solve an assembled system; see solve_raw for the elimination scheme."""
    raw = solve_raw(sys.matrix, sys.rhs, sys.row_labels)
    if raw.status == "infeasible":
        return Solution(status="infeasible", spec=sys.spec, witness=raw.witness)
    spec = sys.spec
    return Solution(
        status="solved",
        spec=spec,
        particular=spec.field_from_coefficients(raw.particular),
        kernel_basis=[spec.field_from_coefficients(v) for v in raw.kernel])


def trivialize(q: Multivector, p: Multivector, degree: int | None = None) -> Solution:
    """Solve Q = [[Y,P]] over homogeneous degree-D polynomial fields.

    Q must be a cocycle of P (a non-cocycle cannot be a coboundary); solved
    results are re-checked so the residual is exactly zero.
    """
    if not schouten(p, q).is_zero():
        raise PreconditionError("target is not a cocycle: [[P,Q]] != 0")
    if degree is None:
        if q.is_zero():
            raise PreconditionError("zero target needs an explicit ansatz degree")
        degree = default_degree(q, p)
    sol = solve(assemble(q, p, AnsatzSpec(p.nvars, degree)))
    if sol.status == "solved":
        residual = schouten(sol.particular, p) - q
        if not residual.is_zero():
            raise AssertionError("solver returned a non-solution")
    return sol

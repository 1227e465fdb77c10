"""Multivector fields with polynomial coefficients on affine R^r.

A k-vector is written in odd generators: sums of f(x) xi_{i1}...xi_{ik} with
strictly increasing index tuples, so xi_i*xi_i = 0 is structural.  Bivectors
carry a Poisson bracket candidate; the Schouten bracket extends the
commutator of vector fields to all degrees.

Sign ledger (the single place fixing all Koszul conventions):

* inside one component the odd factors are stored sorted ascending, and the
  stored tuple IS the product order xi_{i1}...xi_{ik};
* the left derivative d/dxi_i picks index i at position p (0-based) with
  sign (-1)^p -- it anticommutes past the p generators standing before i;
* the right derivative acting on the tail picks position p with sign
  (-1)^(k-1-p);
* products concatenate index tuples and sort them ascending, with the parity
  of the sorting permutation as sign (repeated index kills the term).

With these choices the bracket

    [[P,Q]] = sum_i (P)<d/dxi_i . d/dx^i(Q) - (P)<d/dx^i . d/dxi_i>(Q)

restricts to the commutator on 1-vectors and satisfies the shifted-graded
skew symmetry and Jacobi identities (property-tested, not assumed).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, ParseError, PreconditionError
from .ratpoly import ANY_DEGREE, Poly, parse_poly, ratnorm, render_poly


class Multivector:
    """Sparse multivector: map from increasing 1-based index tuples to Poly.

    The empty tuple indexes the scalar part.  Instances are immutable by
    convention; all operations return fresh values.
    """

    __slots__ = ("nvars", "components")

    def __init__(self, nvars: int, components=None):
        clean = {}
        for idx, p in (components or {}).items():
            idx = tuple(idx)
            if any(i < 1 or i > nvars for i in idx):
                raise IndexError("xi index out of range in %r" % (idx,))
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError("xi indices must be strictly increasing: %r" % (idx,))
            if not isinstance(p, Poly):
                raise TypeError("component must be a Poly")
            if p.nvars != nvars:
                raise DimensionError("component over %d variables, expected %d"
                                     % (p.nvars, nvars))
            if p:
                clean[idx] = p
        self.nvars = nvars
        self.components = clean

    @classmethod
    def _raw(cls, nvars, components):
        mv = object.__new__(cls)
        mv.nvars = nvars
        mv.components = components
        return mv

    @classmethod
    def zero(cls, nvars: int) -> "Multivector":
        return cls._raw(nvars, {})

    @classmethod
    def from_scalar(cls, p: Poly) -> "Multivector":
        return cls(p.nvars, {(): p})

    @classmethod
    def vector(cls, coefficients) -> "Multivector":
        """1-vector from a list of r component polynomials."""
        comps = {}
        for k, p in enumerate(coefficients):
            comps[(k + 1,)] = p
        return cls(coefficients[0].nvars if coefficients else 0, comps)

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.nvars == other.nvars and self.components == other.components

    def degree(self):
        """Common xi-degree; ANY_DEGREE for 0, None when degrees are mixed."""
        if not self.components:
            return ANY_DEGREE
        degs = {len(idx) for idx in self.components}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_grade(self, k: int) -> bool:
        return all(len(idx) == k for idx in self.components)

    def component(self, idx) -> Poly:
        return self.components.get(tuple(idx), Poly.zero(self.nvars))

    # -- linear operations -----------------------------------------------

    def _check_compatible(self, other):
        if self.nvars != other.nvars:
            raise DimensionError("multivectors over %d and %d variables"
                                 % (self.nvars, other.nvars))

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_compatible(other)
        out = dict(self.components)
        for idx, p in other.components.items():
            s = out.get(idx)
            s = p if s is None else s + p
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return Multivector._raw(self.nvars, out)

    def __neg__(self) -> "Multivector":
        return Multivector._raw(self.nvars,
                                {i: -p for i, p in self.components.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, c) -> "Multivector":
        c = ratnorm(c)
        if not c:
            return Multivector.zero(self.nvars)
        return Multivector._raw(self.nvars,
                                {i: p.scale(c) for i, p in self.components.items()})

    def map_coefficients(self, fn) -> "Multivector":
        out = {}
        for idx, p in self.components.items():
            q = fn(p)
            if q:
                out[idx] = q
        return Multivector._raw(self.nvars, out)

    def __str__(self):
        return render_multivector(self)

    def __repr__(self):
        return "Multivector(%d, %s)" % (self.nvars, render_multivector(self))


def _merge_indices(left, right):
    """Concatenate two increasing tuples; (sorted tuple, parity sign) or None."""
    if not left:
        return right, 1
    if not right:
        return left, 1
    merged = left + right
    if len(set(merged)) != len(merged):
        return None
    # count inversions between the two sorted blocks
    inv = 0
    for a in left:
        for b in right:
            if a > b:
                inv += 1
    return tuple(sorted(merged)), (-1 if inv & 1 else 1)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product; polynomial coefficients are parity-even."""
    a._check_compatible(b)
    out = {}
    for ia, pa in a.components.items():
        for ib, pb in b.components.items():
            merged = _merge_indices(ia, ib)
            if merged is None:
                continue
            idx, sign = merged
            prod = pa * pb
            if sign < 0:
                prod = -prod
            cur = out.get(idx)
            cur = prod if cur is None else cur + prod
            if cur:
                out[idx] = cur
            else:
                out.pop(idx, None)
    return Multivector._raw(a.nvars, out)


def _xi_right(mv: Multivector, i: int) -> Multivector:
    """Right derivative (mv)<d/dxi_i; sign (-1)^(k-1-p)."""
    out = {}
    for idx, p in mv.components.items():
        if i not in idx:
            continue
        pos = idx.index(i)
        sign = -1 if (len(idx) - 1 - pos) & 1 else 1
        key = idx[:pos] + idx[pos + 1:]
        q = p if sign > 0 else -p
        cur = out.get(key)
        cur = q if cur is None else cur + q
        if cur:
            out[key] = cur
        else:
            out.pop(key, None)
    return Multivector._raw(mv.nvars, out)


def _xi_left(mv: Multivector, i: int) -> Multivector:
    """Left derivative d/dxi_i>(mv); sign (-1)^p."""
    out = {}
    for idx, p in mv.components.items():
        if i not in idx:
            continue
        pos = idx.index(i)
        sign = -1 if pos & 1 else 1
        key = idx[:pos] + idx[pos + 1:]
        q = p if sign > 0 else -p
        cur = out.get(key)
        cur = q if cur is None else cur + q
        if cur:
            out[key] = cur
        else:
            out.pop(key, None)
    return Multivector._raw(mv.nvars, out)


def _x_partial(mv: Multivector, i: int) -> Multivector:
    out = {}
    for idx, p in mv.components.items():
        q = p.partial(i)
        if q:
            out[idx] = q
    return Multivector._raw(mv.nvars, out)


def schouten(p: Multivector, q: Multivector) -> Multivector:
    """The odd graded bracket [[p,q]] of degree -1.

    Reduces to the commutator of vector fields on 1-vectors; on a bivector P
    the equation [[P,P]] = 0 is the Jacobi identity.
    """
    p._check_compatible(q)
    out = Multivector.zero(p.nvars)
    for i in range(1, p.nvars + 1):
        a = _xi_right(p, i)
        if a:
            b = _x_partial(q, i)
            if b:
                out = out + wedge(a, b)
        c = _x_partial(p, i)
        if c:
            d = _xi_left(q, i)
            if d:
                out = out - wedge(c, d)
    return out


def schouten_sym(f: Multivector, g: Multivector) -> Multivector:
    """Graded-symmetric variant: (-1)^(|f|-1) [[f,g]] for pure-degree f."""
    deg = f.degree()
    if deg is None:
        raise PreconditionError("left argument has mixed xi-degree")
    if deg is ANY_DEGREE:
        return Multivector.zero(f.nvars)
    b = schouten(f, g)
    return b if (deg - 1) % 2 == 0 else -b


def jacobiator(p: Multivector) -> Multivector:
    """The trivector (1/2)[[p,p]]; zero exactly when p is Poisson."""
    if not p.is_grade(2):
        raise PreconditionError("jacobiator needs a bivector")
    return schouten(p, p).scale(Fraction(1, 2))


def is_poisson(p: Multivector) -> bool:
    return jacobiator(p).is_zero()


def euler_field(r: int) -> Multivector:
    """sum_i x^i d/dx^i on R^r."""
    if r < 1:
        raise ValueError("dimension must be at least 1")
    return Multivector(r, {(i,): Poly.variable(r, i) for i in range(1, r + 1)})


def lie_derivative(v: Multivector, omega: Multivector) -> Multivector:
    """Derivative of omega along the 1-vector v; alias of schouten(v, omega)."""
    if not v.is_grade(1):
        raise PreconditionError("Lie derivative direction must be a 1-vector")
    return schouten(v, omega)


def homogeneity_scale(v: Multivector, p: Multivector):
    """The rational lam with [[v,p]] = lam*p, ANY_DEGREE for p = 0, else None."""
    if not v.is_grade(1):
        raise PreconditionError("scaling field must be a 1-vector")
    b = schouten(v, p)
    if p.is_zero():
        return ANY_DEGREE
    idx = min(p.components)
    exps = min(p.components[idx].terms)
    ref = p.components[idx].terms[exps]
    cand = b.components.get(idx)
    num = cand.terms.get(exps, 0) if cand is not None else 0
    lam = ratnorm(Fraction(num, 1) / Fraction(ref, 1)) if num else 0
    if b == p.scale(lam):
        return lam
    return None


def hamiltonian_field(p: Multivector, h: Poly) -> Multivector:
    """The 1-vector [[p, h]] generated by a scalar h."""
    return schouten(p, Multivector.from_scalar(h))


def poisson_bracket(f: Poly, g: Poly, p: Multivector) -> Poly:
    """The composed bracket [[[[f,p]],g]] of two scalars.

    Under this package's sign ledger the composition evaluates coordinate
    pairs to the opposite of the stored component: {x^i,x^j} = -p^{ij}.
    """
    inner = schouten(Multivector.from_scalar(f), p)
    outer = schouten(inner, Multivector.from_scalar(g))
    return outer.component(())


# -- text format -------------------------------------------------------


def render_multivector(mv: Multivector) -> str:
    """``(poly) xi1 xi2 + ...`` with components ordered by grade then index."""
    if mv.is_zero():
        return "0"
    chunks = []
    for idx in sorted(mv.components, key=lambda t: (len(t), t)):
        body = "(%s)" % render_poly(mv.components[idx])
        if idx:
            body += " " + " ".join("xi%d" % i for i in idx)
        chunks.append(body)
    return " + ".join(chunks)


def parse_multivector(text: str, nvars=None) -> Multivector:
    """Inverse of render_multivector.

    The written format carries no explicit dimension, so ``nvars`` defaults
    to the largest x- or xi-index seen; pass it explicitly to round-trip
    values whose trailing variables do not occur.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty multivector", 0)
    if stripped == "0":
        return Multivector.zero(nvars or 0)

    import re as _re

    pieces = []  # (poly text, [xi indices]) chunks
    pos = 0
    pattern = _re.compile(
        r"\s*([+-]?)\s*\(([^()]*)\)((?:\s*xi\d+)*)\s*")
    first = True
    while pos < len(stripped):
        m = pattern.match(stripped, pos)
        if m is None:
            # allow a bare polynomial as the scalar part
            if first:
                p = parse_poly(stripped, nvars)
                return Multivector(p.nvars if nvars is None else nvars, {(): p})
            raise ParseError("expected '(poly) xi...' term", pos)
        sign, poly_text, xis = m.group(1), m.group(2), m.group(3)
        if not first and sign == "":
            raise ParseError("missing '+' or '-' between terms", m.start())
        idx = tuple(int(s) for s in _re.findall(r"xi(\d+)", xis))
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ParseError("xi indices must be strictly increasing", m.start(3))
        pieces.append((sign, poly_text, idx))
        pos = m.end()
        first = False

    maxvar = 0
    for _, poly_text, idx in pieces:
        if idx:
            maxvar = max(maxvar, max(idx))
        for v in _re.findall(r"x(\d+)(?![\d])", poly_text):
            maxvar = max(maxvar, int(v))
    if nvars is None:
        nvars = maxvar
    elif maxvar > nvars:
        raise ParseError("index %d exceeds declared dimension %d" % (maxvar, nvars))

    out = Multivector.zero(nvars)
    for sign, poly_text, idx in pieces:
        p = parse_poly(poly_text, nvars)
        if sign == "-":
            p = -p
        out = out + Multivector(nvars, {idx: p})
    return out

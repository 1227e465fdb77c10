"""The edge-ordered graph complex.

A graph is a finite unoriented multigraph without loops whose orientation
datum is the ordering of its edge list: transposing two edges flips the
sign of the graph.  Graphs admitting an automorphism that induces an odd
permutation of the edges are zero (any parallel edge pair is the simplest
case).  Linear combinations are held in canonical form, vertex insertion
gives a graded bracket, and the differential splits vertices.

Sign conventions here, validated by property tests rather than cited:

* degree of a graph = its edge count;
* ``insert(g1, g2)`` appends g2's edges after g1's;
* ``bracket(a, b) = insert(a, b) - (-1)^(E1*E2) insert(b, a)``;
* ``differential = -bracket(stick, .)`` so that d(point) = -stick, and the
  new edge of a vertex split lands last in the edge order.
"""

from __future__ import annotations

import re
from itertools import product

from .errors import MalformedGraphError, ParseError
from .ratpoly import ratnorm, rat_to_text, parse_rational


class Graph:
    """Edge-ordered graph; vertices are 1..n, edges unordered pairs."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges):
        if n < 1:
            raise MalformedGraphError("vertex count must be positive")
        norm = []
        for (i, j) in edges:
            if i == j:
                raise MalformedGraphError("loop edge (%d,%d)" % (i, j))
            if not (1 <= i <= n and 1 <= j <= n):
                raise MalformedGraphError("edge (%d,%d) outside 1..%d" % (i, j, n))
            norm.append((i, j) if i < j else (j, i))
        self.n = n
        self.edges = tuple(norm)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degrees(self):
        deg = [0] * (self.n + 1)
        for (i, j) in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(%d, %r)" % (self.n, list(self.edges))

    def __str__(self):
        return render_graph(self, 1)


def _sort_parity(seq):
    """Sort a list of distinct items; return (sorted tuple, permutation parity)."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    seen = [False] * len(order)
    sign = 1
    for s in range(len(order)):
        if seen[s]:
            continue
        length = 0
        t = s
        while not seen[t]:
            seen[t] = True
            t = order[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return tuple(seq[k] for k in order), sign


def canonicalize(g: Graph):
    """Lexicographically minimal isomorph of ``g`` with the relating sign.

    Returns ``(graph, sign)`` with ``sign`` in {+1,-1} such that the input
    presentation equals ``sign`` times the canonical one, or ``(None, 0)``
    when the graph is zero (some automorphism induces an odd edge
    permutation; parallel edges are the degenerate case).

    The canonical labeling maximizes the adjacency bit string read in colex
    position order (1,2),(1,3),(2,3),(1,4),..., which is the labeling whose
    sorted edge list is smallest; assigning new labels one vertex at a time
    reveals that string prefix by prefix, so a branch-and-bound search
    suffices.  All maximizing labelings are enumerated, and a sign clash
    between any two of them is exactly an odd-edge-parity automorphism.
    """
    edges = g.edges
    if len(set(edges)) != len(edges):
        return None, 0
    n = g.n
    if not edges:
        return Graph(n, ()), 1

    adj = [0] * (n + 1)
    for (i, j) in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    best = [None] * n       # best[k]: revealed bits when label k+1 is placed
    completions = []        # labelings (tuples old-vertex-per-new-label)
    assign = []
    used = [False] * (n + 1)

    def dfs(depth):
        if depth == n:
            completions.append(tuple(assign))
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            row = adj[v]
            bits = tuple((row >> assign[k]) & 1 for k in range(depth))
            cur = best[depth]
            if cur is not None:
                if bits < cur:
                    continue
                if bits > cur:
                    best[depth] = bits
                    for d in range(depth + 1, n):
                        best[d] = None
                    completions.clear()
            else:
                best[depth] = bits
            used[v] = True
            assign.append(v)
            dfs(depth + 1)
            assign.pop()
            used[v] = False

    dfs(0)

    canon_edges = None
    sign = 0
    for labeling in completions:
        newlabel = [0] * (n + 1)
        for k, v in enumerate(labeling):
            newlabel[v] = k + 1
        relabeled = []
        for (i, j) in edges:
            a, b = newlabel[i], newlabel[j]
            relabeled.append((a, b) if a < b else (b, a))
        key, s = _sort_parity(relabeled)
        if canon_edges is None:
            canon_edges, sign = key, s
        elif s != sign:
            return None, 0
    return Graph(n, canon_edges), sign


class GraphSum:
    """Formal rational combination of canonical graphs.

    ``add_term`` is the accumulation primitive used while a sum is being
    built; treat sums as immutable afterwards.  All module operations
    return fresh values and are safe to call concurrently.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for graph, c in (terms or {}).items():
            self.add_term(graph, c)

    @classmethod
    def _raw(cls, terms):
        s = object.__new__(cls)
        s.terms = terms
        return s

    @classmethod
    def zero(cls) -> "GraphSum":
        return cls._raw({})

    @classmethod
    def single(cls, graph: Graph, c=1) -> "GraphSum":
        s = cls.zero()
        s.add_term(graph, c)
        return s

    def add_term(self, graph: Graph, c):
        """Accumulate ``c`` times a (not necessarily canonical) graph."""
        c = ratnorm(c)
        if not c:
            return
        canon, sign = canonicalize(graph)
        if canon is None:
            return
        cur = self.terms.get(canon, 0) + sign * c
        if cur:
            self.terms[canon] = ratnorm(cur)
        else:
            self.terms.pop(canon, None)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "GraphSum") -> "GraphSum":
        out = dict(self.terms)
        for graph, c in other.terms.items():
            s = out.get(graph, 0) + c
            if s:
                out[graph] = ratnorm(s)
            else:
                out.pop(graph, None)
        return GraphSum._raw(out)

    def __neg__(self) -> "GraphSum":
        return GraphSum._raw({gr: -c for gr, c in self.terms.items()})

    def __sub__(self, other: "GraphSum") -> "GraphSum":
        return self + (-other)

    def scale(self, c) -> "GraphSum":
        c = ratnorm(c)
        if not c:
            return GraphSum.zero()
        return GraphSum._raw({gr: ratnorm(k * c) for gr, k in self.terms.items()})

    def bigradings(self):
        """Set of (vertex count, edge count) pairs present."""
        return {(gr.n, gr.n_edges) for gr in self.terms}

    def __str__(self):
        return render_graphsum(self)

    def __repr__(self):
        return "GraphSum(%s)" % render_graphsum(self).replace("\n", " ")


def point() -> Graph:
    return Graph(1, ())


def stick() -> Graph:
    return Graph(2, ((1, 2),))


def tetrahedron() -> Graph:
    return Graph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))


def insert_terms(g1: Graph, g2: Graph):
    """Raw insertion terms of g2 into the vertices of g1, before
    canonicalization: yields plain Graphs, one per (vertex, reattachment).

    Vertex v of g1 is replaced by the whole of g2; every edge end formerly
    at v may go to any vertex of g2.  Surviving g1 vertices keep their
    relative order as labels 1..n1-1, g2's vertices follow as n1..n1+n2-1.
    g1's edges come first (redirected), g2's are appended.
    """
    n1, n2 = g1.n, g2.n
    for v in range(1, n1 + 1):
        slots = [k for k, (i, j) in enumerate(g1.edges) if i == v or j == v]
        remap = {}
        new = 1
        for u in range(1, n1 + 1):
            if u != v:
                remap[u] = new
                new += 1
        offset = n1 - 1
        for targets in product(range(1, n2 + 1), repeat=len(slots)):
            chosen = dict(zip(slots, targets))
            edges = []
            for k, (i, j) in enumerate(g1.edges):
                if k in chosen:
                    other = j if i == v else i
                    edges.append((remap[other], offset + chosen[k]))
                else:
                    edges.append((remap[i], remap[j]))
            for (i, j) in g2.edges:
                edges.append((offset + i, offset + j))
            yield Graph(n1 + n2 - 1, edges)


def insert(g1, g2) -> GraphSum:
    """Insertion sum; accepts Graphs or GraphSums, extended bilinearly."""
    if isinstance(g1, Graph):
        g1 = GraphSum.single(g1)
    if isinstance(g2, Graph):
        g2 = GraphSum.single(g2)
    out = GraphSum.zero()
    for a, ca in g1.terms.items():
        for b, cb in g2.terms.items():
            c = ca * cb
            for term in insert_terms(a, b):
                out.add_term(term, c)
    return out


def bracket(s1, s2) -> GraphSum:
    """Graded bracket [s1,s2] with degree = edge count."""
    if isinstance(s1, Graph):
        s1 = GraphSum.single(s1)
    if isinstance(s2, Graph):
        s2 = GraphSum.single(s2)
    out = GraphSum.zero()
    for a, ca in s1.terms.items():
        for b, cb in s2.terms.items():
            c = ca * cb
            for term in insert_terms(a, b):
                out.add_term(term, c)
            sign = -1 if (a.n_edges * b.n_edges) % 2 == 0 else 1
            for term in insert_terms(b, a):
                out.add_term(term, sign * c)
    return out


def differential(s) -> GraphSum:
    """Vertex-splitting differential, normalized by d(point) = -stick.

    Realized as -[stick, .]; takes bi-grading (n, E) to (n+1, E+1).
    """
    if isinstance(s, Graph):
        s = GraphSum.single(s)
    return -bracket(GraphSum.single(stick()), s)


def is_cocycle(s) -> bool:
    return differential(s).is_zero()


# -- text format -------------------------------------------------------


def render_graph(g: Graph, c) -> str:
    edges = "".join("(%d,%d)" % e for e in g.edges)
    return "graph{n=%d; edges=%s; c=%s}" % (g.n, edges, rat_to_text(c))


def render_graphsum(s: GraphSum) -> str:
    if s.is_zero():
        return "0"
    keys = sorted(s.terms, key=lambda g: (g.n, g.n_edges, g.edges))
    return "\n".join(render_graph(g, s.terms[g]) for g in keys)


_GRAPH_RE = re.compile(
    r"graph\{\s*n\s*=\s*(\d+)\s*;\s*edges\s*=\s*((?:\(\s*\d+\s*,\s*\d+\s*\))*)\s*;"
    r"\s*c\s*=\s*([+-]?\d+(?:\s*/\s*\d+)?)\s*\}")
_EDGE_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_graph(text: str):
    """One ``graph{...}`` record; returns (Graph, coefficient)."""
    m = _GRAPH_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError("expected graph{n=..; edges=..; c=..} in %r" % text.strip(), 0)
    n = int(m.group(1))
    edges = [(int(a), int(b)) for a, b in _EDGE_RE.findall(m.group(2))]
    c = parse_rational(m.group(3))
    return Graph(n, edges), c


def parse_graphsum(text: str) -> GraphSum:
    """Newline-separated list of graph records; '0' or blank is the zero sum."""
    out = GraphSum.zero()
    stripped = text.strip()
    if not stripped or stripped == "0":
        return out
    for line in stripped.splitlines():
        line = line.strip()
        if not line:
            continue
        g, c = parse_graph(line)
        out.add_term(g, c)
    return out

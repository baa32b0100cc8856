"""Edge-colored graphs over GF(2) and torus graphs over Z.

``ColoredGraph`` carries the GF(2) story: an n-regular graph with nonzero
edge colors satisfying (P1) (incident colors form a basis at every vertex)
and (P2) (the color multisets at the two ends of an edge agree modulo the
edge's own color).  Its coloring polynomial Σ_v Π_{e∋v} α(e) lives in the
primal space and always passes the image test.

``TorusGraph`` is the Z analogue: oriented edges with weights α(e), axioms
α(ē) = ±α(e), vertex bases, and the congruence matching, plus an orientation
σ: V → {±1} with σ(i(e))α(e) = −σ(i(ē))α(ē).  σ is pinned down (up to a
global sign) by BFS propagation from vertex 0.

The torus polynomial of an oriented graph is Σ_v σ(v)·(wedge of the vertex
weights written in det-normalized order); on canonical monomials the vertex
term reads σ(v)·δ(W_v)·(sorted wedge) with δ = sign of the sorted weight
determinant.  For every graph arising from a Z-colored polytope pair the
result satisfies the unitary image criterion — the per-edge cancellation in
d(g*) is exactly the orientation relation.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import algebra, gf2, intmat
from .algebra import ExtPolynomial, Gf2Polynomial
from .errors import ValidationError
from .polytopes import Coloring, SimplePolytope

Char = tuple[int, ...]


class ColoredGraph:
    """Undirected graph with nonzero GF(2)^n edge colors."""

    __slots__ = ("n", "num_vertices", "alpha")

    def __init__(self, n: int, num_vertices: int,
                 alpha: Mapping[frozenset[int], Sequence[int]]):
        self.n = int(n)
        self.num_vertices = int(num_vertices)
        self.alpha: dict[frozenset[int], Char] = {}
        for e, c in alpha.items():
            e = frozenset(int(v) for v in e)
            if len(e) != 2:
                raise ValidationError(f"edge {sorted(e)} must join two distinct vertices")
            if any(v < 0 or v >= num_vertices for v in e):
                raise ValidationError(f"edge {sorted(e)} references an unknown vertex")
            self.alpha[e] = algebra.check_char_gf2(tuple(c), self.n)

    def incident(self, v: int) -> list[frozenset[int]]:
        return sorted((e for e in self.alpha if v in e), key=sorted)

    def validate(self) -> None:
        """Check n-regularity and properties (P1), (P2)."""
        for v in range(self.num_vertices):
            edges = self.incident(v)
            if len(edges) != self.n:
                raise ValidationError(
                    f"(P1) fails: vertex {v} has degree {len(edges)}, expected {self.n}")
            rows = [gf2.pack(self.alpha[e]) for e in edges]
            if not gf2.is_invertible(rows, self.n):
                raise ValidationError(
                    f"(P1) fails: edge colors at vertex {v} are not a basis")
        for e in self.alpha:
            u, v = sorted(e)
            a = gf2.pack(self.alpha[e])
            left = sorted(min(x, x ^ a) for x in
                          (gf2.pack(self.alpha[f]) for f in self.incident(u)))
            right = sorted(min(x, x ^ a) for x in
                           (gf2.pack(self.alpha[f]) for f in self.incident(v)))
            if left != right:
                raise ValidationError(
                    f"(P2) fails along edge {u}-{v}: color multisets differ mod alpha(e)")

    def coloring_polynomial(self) -> Gf2Polynomial:
        self.validate()
        monos = [tuple(self.alpha[e] for e in self.incident(v))
                 for v in range(self.num_vertices)]
        return Gf2Polynomial(self.n, monos, space=algebra.PRIMAL)


def graph_coloring_polynomial(graph: ColoredGraph) -> Gf2Polynomial:
    """Σ over vertices of the product of incident edge colors (primal space)."""
    return graph.coloring_polynomial()


def graphs_equivalent(g1: ColoredGraph, g2: ColoredGraph) -> bool:
    """Bordism equivalence: equality of coloring polynomials."""
    if g1.n != g2.n:
        raise ValidationError("graphs live in different ranks")
    return g1.coloring_polynomial() == g2.coloring_polynomial()


def one_skeleton(p: SimplePolytope, coloring: Coloring) -> ColoredGraph:
    """Edge-colored 1-skeleton of a GF(2)-colored polytope.

    The color of an edge is the vertex-basis element dual to the facet not
    containing it — the unique nonzero vector pairing to zero with the n−1
    facet colors along the edge, hence independent of the chosen endpoint.
    """
    if coloring.target != "gf2":
        raise ValidationError("one_skeleton expects a GF(2) coloring")
    coloring.validate(p)
    dual_rows: list[dict[int, Char]] = []
    for v in p.vertices:
        fs = sorted(v)
        rows = [gf2.pack(coloring.map[f]) for f in fs]
        dual = gf2.inverse_transpose(rows, p.dim)
        dual_rows.append({f: gf2.unpack(r, p.dim) for f, r in zip(fs, dual)})
    alpha: dict[frozenset[int], Char] = {}
    for i, j in p.edges():
        shared = p.vertices[i] & p.vertices[j]
        leaving = next(iter(p.vertices[i] - shared))
        alpha[frozenset((i, j))] = dual_rows[i][leaving]
    graph = ColoredGraph(p.dim, len(p.vertices), alpha)
    graph.validate()
    return graph


# ---------------------------------------------------------------------------
# torus graphs


class TorusGraph:
    """Oriented-edge graph with Z^n weights and optional orientation σ."""

    __slots__ = ("n", "num_vertices", "alpha", "sigma")

    def __init__(self, n: int, num_vertices: int,
                 alpha: Mapping[tuple[int, int], Sequence[int]],
                 sigma: Sequence[int] | None = None):
        self.n = int(n)
        self.num_vertices = int(num_vertices)
        self.alpha: dict[tuple[int, int], Char] = {}
        for (u, v), c in alpha.items():
            u, v = int(u), int(v)
            if u == v or min(u, v) < 0 or max(u, v) >= num_vertices:
                raise ValidationError(f"bad oriented edge ({u},{v})")
            self.alpha[(u, v)] = algebra.check_char_z(tuple(c), self.n)
        for (u, v) in list(self.alpha):
            if (v, u) not in self.alpha:
                raise ValidationError(f"edge ({u},{v}) is missing its reversal")
        self.sigma = None if sigma is None else [int(s) for s in sigma]
        if self.sigma is not None:
            if len(self.sigma) != num_vertices or any(s not in (1, -1) for s in self.sigma):
                raise ValidationError("sigma must assign ±1 to every vertex")

    def out_edges(self, v: int) -> list[tuple[int, int]]:
        return sorted(e for e in self.alpha if e[0] == v)

    def validate(self) -> None:
        """Torus graph axioms: reversal signs, vertex bases, congruence matching."""
        for (u, v), a in self.alpha.items():
            back = self.alpha[(v, u)]
            if back != a and back != tuple(-x for x in a):
                raise ValidationError(
                    f"axiom (1) fails: alpha({v},{u}) is not ±alpha({u},{v})")
        for v in range(self.num_vertices):
            rows = [list(self.alpha[e]) for e in self.out_edges(v)]
            if len(rows) != self.n:
                raise ValidationError(
                    f"axiom (2) fails: vertex {v} has valence {len(rows)}, expected {self.n}")
            if intmat.det(rows) not in (1, -1):
                raise ValidationError(
                    f"axiom (2) fails: weights at vertex {v} are not a Z-basis")
        for (u, v), a in self.alpha.items():
            if u > v:
                continue
            left = sorted(intmat.reduce_mod_vector(self.alpha[e], a)
                          for e in self.out_edges(u))
            right = sorted(intmat.reduce_mod_vector(self.alpha[e], a)
                           for e in self.out_edges(v))
            if left != right:
                raise ValidationError(
                    f"axiom (3) fails along edge {u}-{v}: no color bijection mod alpha(e)")

    def orient(self) -> "TorusGraph":
        """Compute σ by constraint propagation, σ(vertex 0) = +1.

        The relation σ(i(e))α(e) = −σ(i(ē))α(ē) fixes σ up to a global sign;
        inconsistency on some cycle means the axial data is non-orientable.
        """
        sigma: dict[int, int] = {0: 1}
        stack = [0]
        while stack:
            u = stack.pop()
            for (_, v) in self.out_edges(u):
                a, back = self.alpha[(u, v)], self.alpha[(v, u)]
                eps = 1 if back == a else -1
                want = -eps * sigma[u]
                if v in sigma:
                    if sigma[v] != want:
                        raise ValidationError("non-orientable axial data")
                else:
                    sigma[v] = want
                    stack.append(v)
        if len(sigma) != self.num_vertices:
            raise ValidationError("torus graph is not connected")
        return TorusGraph(self.n, self.num_vertices, self.alpha,
                          [sigma[v] for v in range(self.num_vertices)])


def torus_graph_from_pair(p: SimplePolytope, coloring: Coloring) -> TorusGraph:
    """Torus graph of a Z-colored pair: weights are dual-basis rows per vertex."""
    if coloring.target != "z":
        raise ValidationError("torus_graph_from_pair expects a Z coloring")
    coloring.validate(p)
    dual_rows: list[dict[int, Char]] = []
    for v in p.vertices:
        fs = sorted(v)
        rows = [list(coloring.map[f]) for f in fs]
        dual = intmat.inverse_transpose_unimodular(rows)
        dual_rows.append({f: tuple(r) for f, r in zip(fs, dual)})
    alpha: dict[tuple[int, int], Char] = {}
    for i, j in p.edges():
        shared = p.vertices[i] & p.vertices[j]
        alpha[(i, j)] = dual_rows[i][next(iter(p.vertices[i] - shared))]
        alpha[(j, i)] = dual_rows[j][next(iter(p.vertices[j] - shared))]
    graph = TorusGraph(p.dim, len(p.vertices), alpha)
    graph.validate()
    return graph.orient()


def torus_polynomial(graph: TorusGraph) -> ExtPolynomial:
    """Σ_v σ(v)·(vertex weight wedge in det-normalized order), primal space."""
    if graph.sigma is None:
        raise ValidationError("torus graph is not oriented; call orient() first")
    terms: list[tuple[tuple[Char, ...], int]] = []
    for v in range(graph.num_vertices):
        weights = [graph.alpha[e] for e in graph.out_edges(v)]
        sign, mono = algebra.sort_monomial(weights)
        if sign == 0:
            raise ValidationError(f"repeated weight at vertex {v}")
        terms.append((mono, graph.sigma[v] * algebra.det_sign(mono)))
    return ExtPolynomial(graph.n, terms, space=algebra.PRIMAL)

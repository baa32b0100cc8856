"""Simple polytopes as vertex-facet incidence structures, with facet colorings.

A polytope here is purely combinatorial: ``dim`` = n, ``num_facets`` = m, and
vertices given as n-element sets of facet indices.  Simplicity is enforced
(every vertex lies on exactly n facets, every (n-1)-set of facets lies on at
most 2 vertices, and the edge graph is n-regular and connected).

Colorings assign a nonzero character to each facet so that the colors at
every vertex form a basis — invertible over GF(2), determinant ±1 over Z.
The GF(2) coloring polynomial (sum over vertices of the product of incident
facet colors) lives in the dual space; its dual is the edge-colored graph
polynomial of the 1-skeleton.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Mapping, Sequence

from . import algebra, gf2, intmat
from .algebra import Gf2Polynomial, ExtPolynomial
from .errors import ValidationError

Vertex = frozenset[int]


class SimplePolytope:
    """Abstract simple n-polytope: facet indices 0..m-1 and vertex incidences."""

    __slots__ = ("dim", "num_facets", "vertices")

    def __init__(self, dim: int, num_facets: int, vertices: Iterable[Iterable[int]]):
        self.dim = int(dim)
        self.num_facets = int(num_facets)
        self.vertices = [frozenset(int(f) for f in v) for v in vertices]
        self._validate()

    def _validate(self) -> None:
        n, m = self.dim, self.num_facets
        if n < 1:
            raise ValidationError("polytope dimension must be at least 1")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex facet-sets")
        for v in self.vertices:
            if len(v) != n:
                raise ValidationError(f"vertex {sorted(v)} does not lie on exactly {n} facets")
            if any(f < 0 or f >= m for f in v):
                raise ValidationError(f"vertex {sorted(v)} references an unknown facet")
        # every (n-1)-set of facets lies in at most 2 vertices; those pairs are edges
        ridge_count: dict[Vertex, int] = {}
        for v in self.vertices:
            for f in v:
                ridge = v - {f}
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        if any(c > 2 for c in ridge_count.values()):
            raise ValidationError("a facet (n-1)-set lies on more than two vertices")
        adj = self.adjacency()
        if any(len(nb) != n for nb in adj):
            raise ValidationError("edge graph is not n-regular")
        # connectivity
        if self.vertices:
            seen = {0}
            stack = [0]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(self.vertices):
                raise ValidationError("edge graph is not connected")

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists; vertices are adjacent when they share n-1 facets."""
        by_ridge: dict[Vertex, list[int]] = {}
        for i, v in enumerate(self.vertices):
            for f in v:
                by_ridge.setdefault(v - {f}, []).append(i)
        adj: list[list[int]] = [[] for _ in self.vertices]
        for pair in by_ridge.values():
            if len(pair) == 2:
                i, j = pair
                adj[i].append(j)
                adj[j].append(i)
        return [sorted(nb) for nb in adj]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, nb in enumerate(self.adjacency()):
            out.extend((i, j) for j in nb if i < j)
        return out

    def __repr__(self) -> str:
        return (f"SimplePolytope(dim={self.dim}, facets={self.num_facets}, "
                f"vertices={len(self.vertices)})")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SimplePolytope)
                and self.dim == other.dim
                and self.num_facets == other.num_facets
                and sorted(self.vertices, key=sorted) == sorted(other.vertices, key=sorted))


def simplex(k: int) -> SimplePolytope:
    """The k-simplex: k+1 facets, vertices = all k-element facet subsets."""
    if k < 1:
        raise ValidationError("simplex dimension must be at least 1")
    verts = [frozenset(range(k + 1)) - {i} for i in range(k + 1)]
    return SimplePolytope(k, k + 1, verts)


def product(p1: SimplePolytope, p2: SimplePolytope) -> SimplePolytope:
    """Cartesian product; p2's facet indices are shifted past p1's."""
    off = p1.num_facets
    verts = [v1 | frozenset(f + off for f in v2)
             for v1 in p1.vertices for v2 in p2.vertices]
    return SimplePolytope(p1.dim + p2.dim, off + p2.num_facets, verts)


def connected_sum(p1: SimplePolytope, v1: Vertex | Iterable[int],
                  p2: SimplePolytope, v2: Vertex | Iterable[int],
                  pairing: Mapping[int, int]) -> SimplePolytope:
    """Vertex connected sum: cut v1 and v2, glue the cut faces via ``pairing``.

    ``pairing`` maps each facet at v1 to a facet at v2; each paired couple
    merges into a single facet of the sum.  The merged facet keeps p1's index;
    unmerged p2 facets are appended.  Facets that end up with no vertices are
    dropped (this happens only in the degenerate 1-dimensional case).
    """
    v1 = frozenset(int(f) for f in v1)
    v2 = frozenset(int(f) for f in v2)
    if v1 not in p1.vertices:
        raise ValidationError("v1 is not a vertex of the first polytope")
    if v2 not in p2.vertices:
        raise ValidationError("v2 is not a vertex of the second polytope")
    if p1.dim != p2.dim:
        raise ValidationError("connected sum needs equal dimensions")
    pairing = {int(a): int(b) for a, b in pairing.items()}
    if set(pairing) != set(v1) or set(pairing.values()) != set(v2):
        raise ValidationError("pairing must biject the facets at v1 with those at v2")

    inverse = {b: a for a, b in pairing.items()}
    p2_map: dict[int, int] = {}
    next_id = p1.num_facets
    for f in range(p2.num_facets):
        if f in inverse:
            p2_map[f] = inverse[f]
        else:
            p2_map[f] = next_id
            next_id += 1

    verts = [v for v in p1.vertices if v != v1]
    verts += [frozenset(p2_map[f] for f in v) for v in p2.vertices if v != v2]

    # drop facets that lost all their vertices, renumbering densely
    used = sorted(set().union(*verts)) if verts else []
    renum = {f: i for i, f in enumerate(used)}
    verts = [frozenset(renum[f] for f in v) for v in verts]
    try:
        return SimplePolytope(p1.dim, len(used), verts)
    except ValidationError as exc:
        raise ValidationError(f"non-simple sum: {exc}") from exc


# ---------------------------------------------------------------------------
# colorings


class Coloring:
    """Facet coloring into GF(2)^n or Z^n characters."""

    __slots__ = ("target", "map")

    def __init__(self, target: str, colors: Mapping[int, Sequence[int]]):
        if target not in ("gf2", "z"):
            raise ValidationError(f"unknown coloring target {target!r}")
        self.target = target
        self.map = {int(f): tuple(int(x) for x in c) for f, c in colors.items()}

    def color(self, f: int) -> tuple[int, ...]:
        return self.map[f]

    def validate(self, p: SimplePolytope) -> None:
        n = p.dim
        if set(self.map) != set(range(p.num_facets)):
            raise ValidationError("coloring must cover every facet exactly once")
        check = algebra.check_char_gf2 if self.target == "gf2" else algebra.check_char_z
        for f, c in self.map.items():
            check(c, n)
        bad = []
        for i, v in enumerate(p.vertices):
            rows = [self.map[f] for f in sorted(v)]
            if self.target == "gf2":
                ok = gf2.is_invertible([gf2.pack(r) for r in rows], n)
            else:
                ok = intmat.det([list(r) for r in rows]) in (1, -1)
            if not ok:
                bad.append(i)
        if bad:
            raise ValidationError(
                f"facet colors do not form a basis at vertices {bad}")

    def mod2(self) -> "Coloring":
        return Coloring("gf2", {f: algebra.char_mod2(c) for f, c in self.map.items()})


def coloring_polynomial(p: SimplePolytope, coloring: Coloring) -> Gf2Polynomial:
    """GF(2) coloring polynomial Σ_v Π_{F∋v} λ(F), in the dual space."""
    if coloring.target != "gf2":
        raise ValidationError("coloring_polynomial expects a GF(2) coloring")
    coloring.validate(p)
    monos = [tuple(coloring.map[f] for f in sorted(v)) for v in p.vertices]
    return Gf2Polynomial(p.dim, monos, space=algebra.DUAL)


# ---------------------------------------------------------------------------
# random/backtracking coloring search (small cases; bott has a fast path)


def _gf2_coloring_search(p: SimplePolytope, rng: random.Random | None,
                         limit: int | None) -> Iterable[Coloring]:
    """Backtracking enumeration of valid GF(2) colorings, facet by facet.

    With an rng the value order is shuffled, so the first hit is a uniform-ish
    random sample; without one the enumeration is deterministic.
    """
    n, m = p.dim, p.num_facets
    chars = [gf2.pack(c) for c in algebra.nonzero_chars_gf2(n)]
    at_vertex: list[list[int]] = [[] for _ in range(m)]
    for i, v in enumerate(p.vertices):
        for f in v:
            at_vertex[f].append(i)
    assign: list[int] = [0] * m
    count = 0

    def vertex_ok(vi: int, upto: int) -> bool:
        rows = [assign[f] for f in p.vertices[vi] if f <= upto]
        return gf2.rank(rows) == len(rows)

    def extend(f: int):
        nonlocal count
        if limit is not None and count >= limit:
            return
        if f == m:
            count += 1
            yield Coloring("gf2", {i: gf2.unpack(assign[i], n) for i in range(m)})
            return
        order = list(chars)
        if rng is not None:
            rng.shuffle(order)
        for c in order:
            assign[f] = c
            if all(vertex_ok(vi, f) for vi in at_vertex[f]):
                yield from extend(f + 1)
            if limit is not None and count >= limit:
                return
        assign[f] = 0

    yield from extend(0)


def all_gf2_colorings(p: SimplePolytope) -> list[Coloring]:
    return list(_gf2_coloring_search(p, None, None))


def random_gf2_coloring(p: SimplePolytope, rng: random.Random) -> Coloring:
    for c in _gf2_coloring_search(p, rng, 1):
        return c
    raise ValidationError("polytope admits no valid GF(2) coloring")


def random_unimodular_matrix(n: int, rng: random.Random, ops: int = 12) -> list[list[int]]:
    """Product of random elementary operations on the identity; det = ±1."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        if n > 1:
            i, j = rng.sample(range(n), 2)
        else:
            i = j = 0
        if kind == 0 and i != j:
            s = rng.choice((1, -1))
            m[i] = [a + s * b for a, b in zip(m[i], m[j])]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return m


def standard_z_coloring(factors: Sequence[int]) -> Coloring:
    """Standard unitary coloring of Δ^{k1}×⋯×Δ^{kr}: e-basis plus −(Σe) per factor."""
    n = sum(factors)
    colors: dict[int, tuple[int, ...]] = {}
    fid = 0
    off = 0
    for k in factors:
        for i in range(k):
            c = [0] * n
            c[off + i] = 1
            colors[fid] = tuple(c)
            fid += 1
        colors[fid] = tuple(-1 if off <= j < off + k else 0 for j in range(n))
        fid += 1
        off += k
    return Coloring("z", colors)


def random_z_coloring(factors: Sequence[int], rng: random.Random) -> Coloring:
    """Random valid Z coloring of a product of simplices.

    Starts from the standard coloring, flips facet signs independently, and
    applies a global unimodular change of coordinates — all three moves
    preserve the det ±1 vertex condition.
    """
    n = sum(factors)
    base = standard_z_coloring(factors)
    u = random_unimodular_matrix(n, rng)
    out = {}
    for f, c in base.map.items():
        if rng.random() < 0.5:
            c = tuple(-x for x in c)
        out[f] = tuple(sum(c[i] * u[i][j] for i in range(n)) for j in range(n))
    return Coloring("z", out)


def product_of_simplices(factors: Sequence[int]) -> SimplePolytope:
    p = simplex(factors[0])
    for k in factors[1:]:
        p = product(p, simplex(k))
    return p

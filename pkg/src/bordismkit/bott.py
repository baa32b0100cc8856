"""Generator classes from colored products of simplices.

Every product of simplices Delta^{k_1} x ... x Delta^{k_r} with k_1 + ... +
k_r = n carries basis colorings (one nonzero character per facet, forming a
basis at every vertex); the manifolds behind these colored shapes generate
the whole group in ambient rank n, so enumerating their coloring polynomials
yields an explicit generating family for the kernel.  Compositions of n that
agree up to reordering give polytopes that differ by a relabeling of facets
and coordinates, and the relabeled colorings are enumerated anyway, so only
partitions are walked.

``iter_bott_generators`` streams one representative (polytope, coloring,
polynomial) triple per distinct polynomial, deduplicated across shapes in a
fixed deterministic order; ``spanning_rank`` folds the stream into the rank
of the dual span with an optional early stop once a target rank is reached.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

import numpy as np

from . import accel, algebra, gf2, polytopes
from .algebra import DUAL, Gf2Polynomial, Monomial
from .errors import ResourceLimitError, ValidationError
from .polytopes import Coloring, SimplePolytope

DEFAULT_MAX_N = 4


class BottGenerator(NamedTuple):
    polytope: SimplePolytope
    coloring: Coloring
    polynomial: Gf2Polynomial  # dual-space coloring polynomial


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n in descending lexicographic order, largest part first."""
    out: list[tuple[int, ...]] = []

    def walk(rest: int, cap: int, acc: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        for part in range(min(rest, cap), 0, -1):
            walk(rest - part, part, acc + (part,))

    walk(n, n, ())
    return out


def _vertex_array(p: SimplePolytope) -> np.ndarray:
    return np.array([sorted(v) for v in p.vertices], dtype=np.int16)


def _key_monomials(key: np.ndarray, n: int) -> list[Monomial]:
    monos = []
    for code in key:
        if code == accel.PAD:
            break
        monos.append(tuple(gf2.unpack((int(code) >> (4 * j)) & 0xF, n)
                           for j in range(n)))
    return monos


def iter_bott_generators(n: int, max_n: int | None = None,
                         backend: str | None = None) -> Iterator[BottGenerator]:
    """Stream deduplicated generator triples over all shapes of rank n."""
    if n < 1:
        raise ValidationError(f"ambient rank must be positive, got {n}")
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise ResourceLimitError(
            f"rank {n} exceeds the generator enumeration cap {cap}; the walk "
            f"would visit up to {((1 << n) - 1) ** (2 * n)} colorings of the cube alone")
    seen: set[bytes] = set()
    for shape in partitions(n):
        polytope = polytopes.product_of_simplices(shape)
        vf = _vertex_array(polytope)
        for colors, keys in accel.coloring_blocks(vf, polytope.num_facets, n,
                                                  backend=backend):
            for row, key in zip(colors, keys):
                kb = key.tobytes()
                if kb in seen:
                    continue
                seen.add(kb)
                coloring = Coloring("gf2", {f: gf2.unpack(int(c), n)
                                            for f, c in enumerate(row)})
                poly = Gf2Polynomial(n, _key_monomials(key, n), space=DUAL)
                yield BottGenerator(polytope, coloring, poly)


def bott_generators(n: int, max_n: int | None = None,
                    backend: str | None = None) -> list[BottGenerator]:
    """All generator triples of rank n, one per distinct polynomial."""
    return list(iter_bott_generators(n, max_n=max_n, backend=backend))


def dual_span_rank(polynomials: Iterable[Gf2Polynomial], n: int) -> int:
    """GF(2) rank of the span of the duals of the given polynomials."""
    index = {m: i for i, m in enumerate(algebra.all_faithful_monomials_gf2(n))}
    acc = gf2.RankAccumulator()
    for p in polynomials:
        bits = 0
        for m in p.monomials:
            bits ^= 1 << index[algebra.dual_monomial_gf2(m, n)]
        acc.add(bits)
    return acc.rank


class SpanningReport(NamedTuple):
    n: int
    rank: int
    distinct: int
    colorings: int
    stopped_early: bool


def spanning_rank(n: int, target: int | None = None, max_n: int | None = None,
                  backend: str | None = None) -> SpanningReport:
    """Rank of the span of dual generator polynomials.

    Streams the same enumeration as ``iter_bott_generators`` but folds each
    distinct polynomial straight into a bit-packed rank accumulator via a
    precomputed monomial-to-dual-index table.  With ``target`` set, stops as
    soon as the rank reaches it (the span only grows, so the reached rank is
    final as long as the target is an upper bound, e.g. the kernel dimension).
    """
    if n < 1:
        raise ValidationError(f"ambient rank must be positive, got {n}")
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise ResourceLimitError(f"rank {n} exceeds the generator enumeration cap {cap}")
    faithful = algebra.all_faithful_monomials_gf2(n)
    index = {m: i for i, m in enumerate(faithful)}
    dual_bit: dict[int, int] = {}
    for m in faithful:
        code = 0
        for j, ch in enumerate(sorted(gf2.pack(c) for c in m)):
            code |= ch << (4 * j)
        dual_bit[code] = index[algebra.dual_monomial_gf2(m, n)]

    acc = gf2.RankAccumulator()
    seen: set[bytes] = set()
    examined = 0
    for shape in partitions(n):
        polytope = polytopes.product_of_simplices(shape)
        vf = _vertex_array(polytope)
        for colors, keys in accel.coloring_blocks(vf, polytope.num_facets, n,
                                                  backend=backend):
            examined += len(keys)
            for key in keys:
                kb = key.tobytes()
                if kb in seen:
                    continue
                seen.add(kb)
                bits = 0
                for code in key:
                    if code == accel.PAD:
                        break
                    bits ^= 1 << dual_bit[int(code)]
                acc.add(bits)
            if target is not None and acc.rank >= target:
                return SpanningReport(n, acc.rank, len(seen), examined, True)
    return SpanningReport(n, acc.rank, len(seen), examined, False)

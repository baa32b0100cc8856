"""Hot-loop backends for enumerating basis colorings of a simple polytope.

The enumeration walks facets in index order, assigning each a nonzero packed
character in GF(2)^n and pruning as soon as the colors already assigned at
some vertex become linearly dependent.  Every surviving leaf is a coloring
whose vertex colors all form bases, and the leaf also gets a fixed-width key
describing its vertex polynomial: the multiset of vertex monomials collapsed
modulo 2 (each monomial is the sorted 4-bit-packed tuple of the n colors at
one vertex), written as ascending distinct codes padded with 0xFFFF.  Keys
let callers deduplicate colorings by polynomial without building polynomial
objects inside the inner loop.

Two interchangeable backends produce identical blocks:

* ``numba`` — a compiled recursive search, used by default when numba is
  importable;
* ``numpy`` — frontier blocks of partial assignments extended one facet at a
  time and filtered through precomputed independence tables.

Set ``BORDISMKIT_NO_NUMBA=1`` to force the numpy backend (it is also the
automatic fallback when numba is missing).  ``benchmarks/bench_accel.py``
compares the two.
"""

from __future__ import annotations

import itertools
import os
from typing import Iterator

import numpy as np

from . import gf2
from .errors import ResourceLimitError, ValidationError

try:  # pragma: no cover - exercised implicitly by backend selection
    from numba import jit

    _NUMBA_OK = True
except ImportError:  # pragma: no cover
    _NUMBA_OK = False

PAD = 0xFFFF
_MAX_CHAR_BITS = 4  # characters are packed into 4-bit nibbles inside keys


def active_backend(backend: str | None = None) -> str:
    """Resolve the backend name: explicit argument > env flag > availability."""
    if backend is not None:
        if backend not in ("numba", "numpy"):
            raise ValidationError(f"unknown backend {backend!r}")
        if backend == "numba" and not _NUMBA_OK:
            raise ResourceLimitError("numba backend requested but numba is not importable")
        return backend
    if os.environ.get("BORDISMKIT_NO_NUMBA", "") == "1":
        return "numpy"
    return "numba" if _NUMBA_OK else "numpy"


# ---------------------------------------------------------------------------
# numba backend


if _NUMBA_OK:

    @jit(nopython=True, cache=True)
    def _partial_ok(colors, vf, f, piv):
        """Colors assigned so far stay independent at every vertex touching f."""
        nv, n = vf.shape
        for v in range(nv):
            touches = False
            for j in range(n):
                if vf[v, j] == f:
                    touches = True
                    break
            if not touches:
                continue
            npiv = 0
            for j in range(n):
                g = vf[v, j]
                if g > f:
                    continue
                x = np.int64(colors[g])
                for t in range(npiv):
                    p = piv[t]
                    if x & (p & (-p)):
                        x ^= p
                if x == 0:
                    return False
                # keep pivots sorted by lowest set bit so one pass reduces
                low = x & (-x)
                pos = npiv
                while pos > 0 and (piv[pos - 1] & (-piv[pos - 1])) > low:
                    piv[pos] = piv[pos - 1]
                    pos -= 1
                piv[pos] = x
                npiv += 1
        return True

    @jit(nopython=True, cache=True)
    def _emit_key(colors, vf, mono, codes, out_keys, idx):
        nv, n = vf.shape
        for v in range(nv):
            for j in range(n):
                c = colors[vf[v, j]]
                pos = j
                while pos > 0 and mono[pos - 1] > c:
                    mono[pos] = mono[pos - 1]
                    pos -= 1
                mono[pos] = c
            code = 0
            for j in range(n - 1, -1, -1):
                code = (code << 4) | mono[j]
            codes[v] = code
        codes.sort()
        w = 0
        i = 0
        while i < nv:
            j = i
            while j < nv and codes[j] == codes[i]:
                j += 1
            if (j - i) & 1:
                out_keys[idx, w] = codes[i]
                w += 1
            i = j
        while w < nv:
            out_keys[idx, w] = PAD
            w += 1

    @jit(nopython=True, cache=True)
    def _complete(colors, f, m, n, vf, piv, mono, codes, out_colors, out_keys, count):
        """DFS over facets f..m-1; returns leaf count so far, or -1 on overflow."""
        if f == m:
            if count >= out_colors.shape[0]:
                return -1
            out_colors[count, :] = colors
            _emit_key(colors, vf, mono, codes, out_keys, count)
            return count + 1
        for c in range(1, 1 << n):
            colors[f] = c
            if _partial_ok(colors, vf, f, piv):
                count = _complete(colors, f + 1, m, n, vf, piv, mono, codes,
                                  out_colors, out_keys, count)
                if count < 0:
                    colors[f] = 0
                    return -1
        colors[f] = 0
        return count


def _partial_ok_py(colors: list[int], vf: np.ndarray, f: int) -> bool:
    for row in vf:
        if f not in row:
            continue
        piv: list[int] = []
        for g in row:
            if g > f:
                continue
            x = colors[g]
            for p in piv:
                if x & (p & (-p)):
                    x ^= p
            if x == 0:
                return False
            piv.append(x)
            piv.sort(key=lambda p: p & (-p))
    return True


def _numba_blocks(vf: np.ndarray, m: int, n: int,
                  block_rows: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    nv = vf.shape[0]
    out_colors = np.zeros((block_rows, m), dtype=np.uint8)
    out_keys = np.zeros((block_rows, nv), dtype=np.uint16)
    piv = np.zeros(n, dtype=np.int64)
    mono = np.zeros(n, dtype=np.uint16)
    codes = np.zeros(nv, dtype=np.uint16)

    def subtree(colors: list[int], f: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        arr = np.array(colors + [0] * (m - f), dtype=np.uint8)
        count = _complete(arr, f, m, n, vf, piv, mono, codes, out_colors, out_keys, 0)
        if count >= 0:
            if count:
                yield out_colors[:count].copy(), out_keys[:count].copy()
            return
        # subtree larger than the buffer: split one facet deeper
        for c in range(1, 1 << n):
            colors.append(c)
            if _partial_ok_py(colors, vf, f):
                yield from subtree(colors, f + 1)
            colors.pop()

    yield from subtree([], 0)


# ---------------------------------------------------------------------------
# numpy backend


def _independence_tables(n: int) -> list[np.ndarray | None]:
    """tables[k][c1, ..., ck] == True iff the packed characters are independent."""
    size = 1 << n
    tables: list[np.ndarray | None] = [None] * (n + 1)
    for k in range(1, n + 1):
        tab = np.zeros((size,) * k, dtype=bool)
        for combo in itertools.product(range(size), repeat=k):
            tab[combo] = gf2.rank(combo) == k
        tables[k] = tab
    return tables


def _keys_numpy(cand: np.ndarray, vf: np.ndarray, n: int) -> np.ndarray:
    nv = vf.shape[0]
    monos = np.sort(cand[:, vf], axis=2).astype(np.uint16)
    codes = np.zeros((cand.shape[0], nv), dtype=np.uint16)
    for j in range(n):
        codes |= monos[:, :, j] << np.uint16(4 * j)
    codes.sort(axis=1)
    keep = np.zeros(codes.shape, dtype=bool)
    for i in range(nv):
        mult = (codes == codes[:, i:i + 1]).sum(axis=1)
        first = codes[:, i] != codes[:, i - 1] if i else np.ones(len(codes), bool)
        keep[:, i] = (mult & 1).astype(bool) & first
    out = np.where(keep, codes, np.uint16(PAD))
    out.sort(axis=1)
    return out


def _numpy_blocks(vf: np.ndarray, m: int, n: int,
                  block_rows: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    tables = _independence_tables(n)
    # checks[f] = assigned facet subsets that must stay independent once f is set
    checks: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for row in vf:
        fs = sorted(int(g) for g in row)
        for j in range(len(fs)):
            checks[fs[j]].append(tuple(fs[:j + 1]))
    palette = np.arange(1, 1 << n, dtype=np.uint8)
    stack = [np.zeros((1, 0), dtype=np.uint8)]
    while stack:
        blk = stack.pop()
        f = blk.shape[1]
        ext = np.repeat(blk, len(palette), axis=0)
        col = np.tile(palette, blk.shape[0])[:, None]
        cand = np.concatenate([ext, col], axis=1)
        mask = np.ones(len(cand), dtype=bool)
        for subset in checks[f]:
            tab = tables[len(subset)]
            mask &= tab[tuple(cand[:, g] for g in subset)]
        cand = cand[mask]
        if not len(cand):
            continue
        if f + 1 == m:
            for i in range(0, len(cand), block_rows):
                part = cand[i:i + block_rows]
                yield part, _keys_numpy(part, vf, n)
        else:
            # push in reverse so pops keep the global lexicographic order,
            # matching the numba DFS exactly
            chunks = [cand[i:i + block_rows] for i in range(0, len(cand), block_rows)]
            stack.extend(reversed(chunks))


# ---------------------------------------------------------------------------
# public entry point


def coloring_blocks(vertex_facets: np.ndarray, num_facets: int, n: int,
                    backend: str | None = None,
                    block_rows: int = 1 << 18) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Stream (colorings, keys) blocks for all basis colorings of a polytope.

    ``vertex_facets`` is the (num_vertices x n) array of facet indices per
    vertex.  Each yielded block is a pair of arrays: colorings as packed
    characters (rows x num_facets, uint8) and the matching polynomial keys
    (rows x num_vertices, uint16).
    """
    if n < 1 or n * _MAX_CHAR_BITS > 16:
        raise ValidationError(f"rank {n} outside the supported key packing range")
    vf = np.ascontiguousarray(np.asarray(vertex_facets, dtype=np.int16))
    if vf.ndim != 2 or vf.shape[1] != n:
        raise ValidationError("vertex_facets must be a (num_vertices, n) array")
    if active_backend(backend) == "numba":
        return _numba_blocks(vf, num_facets, n, block_rows)
    return _numpy_blocks(vf, num_facets, n, block_rows)

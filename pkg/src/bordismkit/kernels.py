"""Kernels of the deletion differential composed with dualization.

``kernel_space`` works over GF(2): rows are indexed by the faithful degree-n
monomials, the row of a monomial m is d(m*) expressed in the degree-(n-1)
square-free monomials, and the kernel (= polynomials g with d(g*) = 0) is
read off from the vanishing combinations of a bit-packed elimination.

``kernel_sample_unitary`` is the integer analogue restricted to a finite
window: all faithful monomials whose characters have entries bounded by a
given weight.  The left kernel of the integer row matrix is computed by
streaming unimodular row reduction, so the reported basis generates the full
kernel lattice of the window (any integral relation among the rows is an
integer combination of the basis).

``support_floor`` turns the same row matrix into a proof: a relation with one
monomial needs a zero row, a relation with two needs a proportional pair of
rows, so when neither exists every nonzero kernel element of the window —
basis element or not — has support at least 3.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field

from . import algebra, gf2, intmat
from .algebra import DUAL, PRIMAL, ExtPolynomial, Gf2Polynomial, Monomial
from .errors import ResourceLimitError, ValidationError

DEFAULT_MAX_N = 5
DEFAULT_SAMPLE_MAX_N = 3
DEFAULT_SAMPLE_MAX_WEIGHT = 2


def max_rank_limit() -> int:
    """Ambient rank cap, overridable through BORDISMKIT_MAX_N."""
    raw = os.environ.get("BORDISMKIT_MAX_N", "")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise ValidationError(f"BORDISMKIT_MAX_N={raw!r} is not an integer") from exc
    return DEFAULT_MAX_N


def _basis_count(n: int, k: int) -> int:
    """Number of unordered independent k-subsets of nonzero vectors in GF(2)^n."""
    out = 1
    for i in range(k):
        out *= (1 << n) - (1 << i)
    return out // math.factorial(k)


@dataclass(frozen=True)
class KernelSpace:
    """GF(2) kernel of g -> d(g*) in homogeneous degree n."""

    n: int
    dim: int
    basis: list[Gf2Polynomial] = field(repr=False)
    monomials: list[Monomial] = field(repr=False)

    def contains(self, p: Gf2Polynomial) -> bool:
        if p.n != self.n or p.space != PRIMAL:
            return False
        return algebra.differential(algebra.dual(p)).is_zero()


def kernel_space(n: int, max_n: int | None = None) -> KernelSpace:
    """Exact kernel basis over GF(2) for ambient rank n."""
    if n < 1:
        raise ValidationError(f"ambient rank must be positive, got {n}")
    cap = max_rank_limit() if max_n is None else max_n
    if n > cap:
        raise ResourceLimitError(
            f"rank {n} exceeds the configured maximum {cap}; the elimination "
            f"would run over a {_basis_count(n, n)} x {_basis_count(n, n - 1)} matrix "
            "(raise BORDISMKIT_MAX_N to allow it)")
    monomials = algebra.all_faithful_monomials_gf2(n)
    col_ids: dict[Monomial, int] = {}
    rows: list[int] = []
    for mono in monomials:
        star = algebra.dual_monomial_gf2(mono, n)
        bits = 0
        for j in range(n):
            deleted = star[:j] + star[j + 1:]
            if deleted not in col_ids:
                col_ids[deleted] = len(col_ids)
            bits ^= 1 << col_ids[deleted]
        rows.append(bits)

    pivots: dict[int, tuple[int, int]] = {}
    basis: list[Gf2Polynomial] = []
    for i, row in enumerate(rows):
        comb = 1 << i
        while row:
            lead = row.bit_length() - 1
            hit = pivots.get(lead)
            if hit is None:
                pivots[lead] = (row, comb)
                break
            row ^= hit[0]
            comb ^= hit[1]
        else:
            members = [monomials[j] for j in range(i + 1) if comb >> j & 1]
            basis.append(Gf2Polynomial(n, members, space=PRIMAL))
    return KernelSpace(n=n, dim=len(basis), basis=basis, monomials=monomials)


# ---------------------------------------------------------------------------
# integral window kernels


def window_monomials(n: int, weight_bound: int) -> list[Monomial]:
    """Faithful monomials whose character entries all lie in [-w, w]."""
    chars = [c for c in itertools.product(range(-weight_bound, weight_bound + 1), repeat=n)
             if any(c)]
    out = []
    for sub in itertools.combinations(chars, n):
        if intmat.det([list(c) for c in sub]) in (1, -1):
            out.append(sub)
    return out


def _window_rows(monomials: list[Monomial], n: int) -> list[dict[Monomial, int]]:
    rows = []
    for mono in monomials:
        image = algebra.differential(algebra.dual(
            ExtPolynomial(n, {mono: 1}, space=PRIMAL)))
        rows.append(dict(image.terms))
    return rows


def _xgcd(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_s, old_t


def _left_kernel(rows: list[dict[Monomial, int]]) -> tuple[int, list[dict[int, int]]]:
    """Rank and an integral basis of {x : sum_i x_i row_i = 0}.

    Streaming row reduction of [M | I] by unimodular operations: combinations
    of rows that reduce to zero span the full left-kernel lattice.
    """
    pivots: dict[Monomial, tuple[dict[Monomial, int], dict[int, int]]] = {}
    kernel: list[dict[int, int]] = []
    for i, r in enumerate(rows):
        row = dict(r)
        comb = {i: 1}
        while row:
            col = min(row)
            val = row[col]
            hit = pivots.get(col)
            if hit is None:
                pivots[col] = (row, comb)
                break
            prow, pcomb = hit
            piv = prow[col]
            if val % piv == 0:
                q = val // piv
                _addmul(row, prow, -q)
                _addmul(comb, pcomb, -q)
            else:
                g = math.gcd(piv, val)
                a, b = _xgcd(piv, val)
                u, v = -(val // g), piv // g  # second row of a unimodular 2x2
                pivots[col] = (_combine(prow, row, a, b), _combine(pcomb, comb, a, b))
                row = _combine(prow, row, u, v)
                comb = _combine(pcomb, comb, u, v)
        else:
            kernel.append(comb)
    return len(pivots), kernel


def _addmul(dst: dict, src: dict, factor: int) -> None:
    for k, v in src.items():
        nv = dst.get(k, 0) + factor * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def _combine(r1: dict, r2: dict, c1: int, c2: int) -> dict:
    out = {}
    for k in set(r1) | set(r2):
        v = c1 * r1.get(k, 0) + c2 * r2.get(k, 0)
        if v:
            out[k] = v
    return out


@dataclass(frozen=True)
class WindowKernel:
    """Integral kernel of g -> d(g*) restricted to a finite character window."""

    n: int
    weight_bound: int
    dim: int
    rank: int
    monomials: list[Monomial] = field(repr=False)
    basis: list[ExtPolynomial] = field(repr=False)


def kernel_sample_unitary(n: int, weight_bound: int = 1,
                          max_n: int | None = None,
                          max_weight_bound: int | None = None) -> WindowKernel:
    """Integral kernel basis over the window of weight-bounded monomials."""
    if n < 1:
        raise ValidationError(f"ambient rank must be positive, got {n}")
    if weight_bound < 0:
        raise ValidationError(f"weight bound must be nonnegative, got {weight_bound}")
    cap_n = DEFAULT_SAMPLE_MAX_N if max_n is None else max_n
    cap_w = DEFAULT_SAMPLE_MAX_WEIGHT if max_weight_bound is None else max_weight_bound
    if n > cap_n or weight_bound > cap_w:
        chars = (2 * weight_bound + 1) ** n - 1
        raise ResourceLimitError(
            f"window (n={n}, weight_bound={weight_bound}) exceeds the caps "
            f"(n <= {cap_n}, weight_bound <= {cap_w}); it would scan "
            f"C({chars}, {n}) candidate monomials")
    monomials = window_monomials(n, weight_bound)
    rank, combos = _left_kernel(_window_rows(monomials, n))
    basis = []
    for comb in combos:
        terms = {monomials[i]: c for i, c in comb.items()}
        lead = min(terms)
        if terms[lead] < 0:
            terms = {m: -c for m, c in terms.items()}
        basis.append(ExtPolynomial(n, terms, space=PRIMAL))
    return WindowKernel(n=n, weight_bound=weight_bound, dim=len(basis),
                        rank=rank, monomials=monomials, basis=basis)


def support_floor(n: int, weight_bound: int) -> int:
    """Proven lower bound on the support of nonzero kernel elements of a window.

    Checks two structural facts about the rows d(m*): no row is zero (so no
    relation has support 1) and, when it holds, no two rows are proportional
    over Q (so no relation has support 2).  The argument covers every element
    of the window kernel, not just a basis.
    """
    monomials = window_monomials(n, weight_bound)
    seen: dict[tuple, Monomial] = {}
    floor = 3
    for mono, row in zip(monomials, _window_rows(monomials, n)):
        if not row:
            return 1
        items = tuple(sorted(row.items()))
        if items[0][1] < 0:
            items = tuple((k, -v) for k, v in items)
        if items in seen:
            floor = 2
        else:
            seen[items] = mono
    return floor

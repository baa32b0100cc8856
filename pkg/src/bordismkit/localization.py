"""Fixed-point localization sums and integrality checks.

A faithful polynomial is read as fixed-point data: one point per unit of
coefficient, carrying the monomial's characters as tangent weights (and, in
the integer flavor, a sign recovered from the coefficient and the weight
matrix determinant, matching the convention that folds ordering signs into
canonical coefficients).  Localization expressions are then rational sums

    sum_p  [sign_p] * f(weights_p) / product(weights_p)

and the checks decide whether such a sum is a genuine polynomial.  All the
weight forms appearing are primitive (rows of invertible integer matrices),
so after normalizing each to a canonical sign the common denominator is a
product of pairwise coprime linear forms, and divisibility can be settled
one linear factor at a time by exact division with remainder.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from . import algebra, mvpoly
from .algebra import Char, ExtPolynomial, Gf2Polynomial, Monomial
from .errors import ValidationError
from .mvpoly import MPoly

GF2 = "gf2"
Z = "z"


class SymmetricFunction:
    """A finite sum of monomial symmetric functions, given by partitions."""

    __slots__ = ("partitions",)

    def __init__(self, partitions: Sequence[Sequence[int]] = ((),)):
        canon = []
        for mu in partitions:
            mu = tuple(sorted((int(x) for x in mu), reverse=True))
            if any(x <= 0 for x in mu):
                raise ValidationError(f"partition parts must be positive: {mu}")
            canon.append(mu)
        # summands are distinct by definition; a repeated partition is a typo
        if len(set(canon)) != len(canon):
            raise ValidationError("repeated partition in symmetric function")
        self.partitions = tuple(sorted(canon))

    @classmethod
    def one(cls) -> "SymmetricFunction":
        return cls(((),))

    @classmethod
    def monomial(cls, mu: Sequence[int]) -> "SymmetricFunction":
        return cls((tuple(mu),))

    @classmethod
    def elementary(cls, k: int) -> "SymmetricFunction":
        return cls(((1,) * k,))

    def degree(self) -> int:
        return max((sum(mu) for mu in self.partitions), default=0)

    def max_parts(self) -> int:
        return max((len(mu) for mu in self.partitions), default=0)

    def evaluate(self, forms: Sequence[MPoly], nv: int, ring: str) -> MPoly:
        out = MPoly.zero(nv, ring)
        for mu in self.partitions:
            if not mu:
                out = out + MPoly.constant(nv, ring, 1)
            else:
                out = out + mvpoly.eval_monomial_symmetric(mu, forms, nv, ring)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return self.partitions == other.partitions

    def __hash__(self) -> int:
        return hash(self.partitions)

    def __repr__(self) -> str:
        names = " + ".join("1" if not mu else "m" + str(list(mu))
                           for mu in self.partitions)
        return f"SymmetricFunction({names})"


class FixedPoint(NamedTuple):
    sign: int
    weights: Monomial


class FixedPointData:
    """Weights (and signs, integer flavor) of an isolated fixed-point set."""

    __slots__ = ("flavor", "n", "points")

    def __init__(self, flavor: str, n: int, points: Sequence[FixedPoint]):
        if flavor not in (GF2, Z):
            raise ValidationError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        self.n = n
        checked = []
        for pt in points:
            sign = int(pt.sign)
            if flavor == GF2:
                sign = 1
            elif sign not in (1, -1):
                raise ValidationError(f"fixed-point sign must be ±1, got {pt.sign}")
            weights = tuple(tuple(int(v) for v in w) for w in pt.weights)
            if len(weights) != n or any(len(w) != n for w in weights):
                raise ValidationError(f"point weights {weights} are not {n} characters of length {n}")
            faithful = (algebra.is_faithful_monomial_gf2(weights, n) if flavor == GF2
                        else algebra.is_faithful_monomial_z(weights, n))
            if not faithful:
                raise ValidationError(f"non-faithful fixed point with weights {weights}")
            checked.append(FixedPoint(sign, weights))
        self.points = tuple(checked)

    @classmethod
    def from_polynomial(cls, p: Gf2Polynomial | ExtPolynomial) -> "FixedPointData":
        """Read a faithful polynomial as fixed-point data.

        Integer flavor: a term c*m contributes |c| points with the monomial's
        characters as weights and sign sgn(c)*sgn(det m) — undoing the fold of
        the ordering sign into the canonical coefficient.
        """
        if isinstance(p, Gf2Polynomial):
            pts = [FixedPoint(1, m) for m in p.sorted_monomials()]
            return cls(GF2, p.n, pts)
        pts = []
        for mono, coeff in p.sorted_terms():
            sign = (1 if coeff > 0 else -1) * algebra.det_sign(mono)
            pts.extend([FixedPoint(sign, mono)] * abs(coeff))
        return cls(Z, p.n, pts)

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"FixedPointData(flavor={self.flavor!r}, n={self.n}, points={len(self.points)})"


# ---------------------------------------------------------------------------
# localization denominators


def _canonical_char(char: Char, ring: str) -> tuple[Char, int]:
    """Normalize a character to a canonical sign.

    Returns (canonical, unit) with char == unit * canonical; over GF(2) the
    unit is always 1.
    """
    if ring == mvpoly.GF2:
        return char, 1
    lead = next(v for v in char if v)
    if lead < 0:
        return tuple(-v for v in char), -1
    return char, 1


def _localization_numerator(data: FixedPointData, values: Sequence[MPoly],
                            signs: Sequence[int], ring: str) -> tuple[MPoly, list[MPoly]]:
    """N = sum_p sign_p * value_p * (D / chi_p) and the factor list of D.

    D is the least common denominator: every distinct canonical weight form,
    each to the first power (weights within a point are rows of an invertible
    matrix, hence pairwise non-proportional, so each chi_p is square-free).
    """
    n = data.n
    chars: set[Char] = set()
    units: list[int] = []
    for pt in data.points:
        u = 1
        for w in pt.weights:
            c, unit = _canonical_char(w, ring)
            chars.add(c)
            u *= unit
        units.append(u)
    ordered = sorted(chars)
    factors = [MPoly.linear(c, ring) for c in ordered]
    num = MPoly.zero(n, ring)
    for pt, value, sign, unit in zip(data.points, values, signs, units):
        # D / chi_p = product of the canonical forms not among p's weights
        own = {_canonical_char(w, ring)[0] for w in pt.weights}
        cofactor = mvpoly.product(
            (MPoly.linear(c, ring) for c in ordered if c not in own), n, ring)
        num = num + (value * cofactor).scale(sign * unit)
    return num, factors


def _divides_all(num: MPoly, factors: list[MPoly]) -> bool:
    return all(mvpoly.divides_linear(f, num) for f in factors)


# ---------------------------------------------------------------------------
# integrality checks


def integrality_check_gf2(data: FixedPointData, f: SymmetricFunction) -> bool:
    """Whether sum_p f(weights_p) / chi_p is a polynomial over GF(2)."""
    if data.flavor != GF2:
        raise ValidationError("expected GF(2) fixed-point data")
    if f.max_parts() > data.n:
        raise ValidationError(
            f"symmetric function needs {f.max_parts()} variables, data has {data.n}")
    ring = mvpoly.GF2
    values = [f.evaluate([MPoly.linear(w, ring) for w in pt.weights], data.n, ring)
              for pt in data.points]
    num, factors = _localization_numerator(data, values, [1] * len(data.points), ring)
    return _divides_all(num, factors)


def integrality_check_z(data: FixedPointData, f: SymmetricFunction,
                        signed: bool = False) -> bool:
    """Whether sum_p f(weights_p) / chi_p is a polynomial over Z.

    The bare (unsigned) sum is the default; ``signed=True`` weights each term
    by the point's sign instead.
    """
    if data.flavor != Z:
        raise ValidationError("expected integer fixed-point data")
    if f.max_parts() > data.n:
        raise ValidationError(
            f"symmetric function needs {f.max_parts()} variables, data has {data.n}")
    ring = mvpoly.Q
    values = [f.evaluate([MPoly.linear(w, ring) for w in pt.weights], data.n, ring)
              for pt in data.points]
    signs = [pt.sign for pt in data.points] if signed else [1] * len(data.points)
    num, factors = _localization_numerator(data, values, signs, ring)
    return _divides_all(num, factors)


# ---------------------------------------------------------------------------
# equivariant Chern numbers


class Gf2IntegralityTable:
    """Batch integrality checker for GF(2) polynomials at a fixed rank.

    Faithful monomials at rank n draw their characters from the common pool
    of 2^n − 1 nonzero vectors, so the localization sum can always be put
    over the full denominator D = product of ALL those linear forms: the
    term of a point with monomial m becomes f(m's forms)·(D/χ_m), and a
    factor ℓ divides the total iff the per-monomial remainders mod ℓ cancel.
    Those remainders depend only on (monomial, partition, factor), so they
    are precomputed once as bitsets and each query is a few XORs — the
    result agrees with ``integrality_check_gf2`` on every input (the extra
    factors of D are units for the divisibility questions asked).
    """

    __slots__ = ("n", "partitions", "_rems", "_index")

    def __init__(self, n: int, partitions: Sequence[tuple[int, ...]]):
        ring = mvpoly.GF2
        self.n = n
        self.partitions = tuple(partitions)
        chars = algebra.nonzero_chars_gf2(n)
        forms = {c: MPoly.linear(c, ring) for c in chars}
        self._index: dict[tuple, int] = {}
        self._rems: dict[tuple, int] = {}
        for mono in algebra.all_faithful_monomials_gf2(n):
            cofactor = mvpoly.product(
                (forms[c] for c in chars if c not in mono), n, ring)
            point_forms = [forms[c] for c in mono]
            for mu in self.partitions:
                if not mu:
                    value = MPoly.constant(n, ring, 1)
                else:
                    value = mvpoly.eval_monomial_symmetric(mu, point_forms, n, ring)
                term = value * cofactor
                for c in chars:
                    _, rem = mvpoly.divmod_linear(term, forms[c])
                    bits = 0
                    for e in rem.terms:
                        bits |= 1 << self._index.setdefault(e, len(self._index))
                    self._rems[(mono, mu, c)] = bits

    def passes(self, p: Gf2Polynomial, mu: Sequence[int]) -> bool:
        """Whether the monomial symmetric function m_mu gives a polynomial sum."""
        mu = tuple(sorted((int(x) for x in mu), reverse=True))
        if mu not in self.partitions:
            raise ValidationError(f"partition {mu} is not in the table")
        if p.n != self.n:
            raise ValidationError(f"polynomial has rank {p.n}, table has {self.n}")
        for c in algebra.nonzero_chars_gf2(self.n):
            acc = 0
            for mono in p.monomials:
                try:
                    acc ^= self._rems[(mono, mu, c)]
                except KeyError:
                    raise ValidationError(
                        f"non-faithful monomial {mono}") from None
            if acc:
                return False
        return True


class ChernNumber(NamedTuple):
    i: int
    j: int
    is_polynomial: bool
    integral: bool
    value: MPoly | None      # the simplified sum when it is a polynomial
    constant: object | None  # its value when moreover constant

    def is_zero(self) -> bool:
        return self.is_polynomial and self.value.is_zero()


def equivariant_chern_number(data: FixedPointData, i: int, j: int) -> ChernNumber:
    """The localization sum for the (i, j) equivariant Chern number.

    N/D with N = sum_p sign_p e1(w_p)^i e2(w_p)^j (D/chi_p): exact division
    by each canonical linear factor of D in turn; a nonzero remainder at any
    factor means the sum is not polynomial.
    """
    if data.flavor != Z:
        raise ValidationError("expected integer fixed-point data")
    if i < 0 or j < 0:
        raise ValidationError("Chern number indices must be nonnegative")
    if j and data.n < 2:
        raise ValidationError("e2 needs at least two weights per point")
    ring = mvpoly.Q
    n = data.n
    values = []
    for pt in data.points:
        forms = [MPoly.linear(w, ring) for w in pt.weights]
        value = MPoly.constant(n, ring, 1)
        if i:
            e1 = mvpoly.eval_monomial_symmetric((1,), forms, n, ring)
            for _ in range(i):
                value = value * e1
        if j:
            e2 = mvpoly.eval_monomial_symmetric((1, 1), forms, n, ring)
            for _ in range(j):
                value = value * e2
        values.append(value)
    signs = [pt.sign for pt in data.points]
    num, factors = _localization_numerator(data, values, signs, ring)
    quo = num
    for form in factors:
        quo, rem = mvpoly.divmod_linear(quo, form)
        if not rem.is_zero():
            return ChernNumber(i, j, False, False, None, None)
    return ChernNumber(i, j, True, quo.has_integer_coeffs(), quo, quo.constant_value())


def vanishing_test(g: ExtPolynomial, degree_cap: int | None = None) -> bool:
    """All equivariant Chern numbers with i + 2j <= cap vanish on g.

    g must be a kernel element (zero, or faithful with d(g*) = 0); the cap
    defaults to 2n.
    """
    if not isinstance(g, ExtPolynomial):
        raise ValidationError("expected an integer-coefficient polynomial")
    cap = 2 * g.n if degree_cap is None else int(degree_cap)
    if cap < 0:
        raise ValidationError("degree cap must be nonnegative")
    if g.is_zero():
        return True
    if g.space != algebra.PRIMAL or not algebra.is_faithful(g) \
            or not algebra.differential(algebra.dual(g)).is_zero():
        raise ValidationError("polynomial is not a kernel element")
    data = FixedPointData.from_polynomial(g)
    for i in range(cap + 1):
        for j in range((cap - i) // 2 + 1):
            if j and g.n < 2:
                continue
            if not equivariant_chern_number(data, i, j).is_zero():
                return False
    return True


class SupportReport(NamedTuple):
    n: int
    bound: int
    samples: int
    nonzero_samples: int
    min_support: int | None
    violations: tuple[int, ...]  # indices of nonzero samples below the bound

    @property
    def ok(self) -> bool:
        return not self.violations


def min_fixed_points_check(n: int, samples: Sequence[ExtPolynomial]) -> SupportReport:
    """Check the ceil(n/2)+1 support bound on kernel samples; report the minimum."""
    bound = (n + 1) // 2 + 1
    min_support: int | None = None
    nonzero = 0
    violations = []
    for idx, g in enumerate(samples):
        if g.n != n:
            raise ValidationError(f"sample {idx} has ambient rank {g.n}, expected {n}")
        support = g.support()
        if support == 0:
            continue
        nonzero += 1
        if min_support is None or support < min_support:
            min_support = support
        if support < bound:
            violations.append(idx)
    return SupportReport(n, bound, len(samples), nonzero, min_support, tuple(violations))

"""Faithful polynomials, dualization, and the deletion differential.

Two coefficient flavors share one shape:

* ``Gf2Polynomial`` — square-free polynomials over GF(2) on nonzero
  characters in GF(2)^n.  A polynomial is a set of monomials; addition is
  symmetric difference.
* ``ExtPolynomial`` — elements of the free exterior Z-algebra on nonzero
  characters in Z^n.  Monomials are stored with characters sorted in the
  fixed lexicographic order and the reordering sign folded into the
  coefficient, so equal elements have equal representations.

Both carry a ``space`` tag ("primal" or "dual"); ``dual`` swaps it.  A
monomial is *faithful* when its characters are a basis (invertible over
GF(2), determinant ±1 over Z); ``in_image`` / ``in_image_unitary`` test
membership of a faithful polynomial in the geometric image via d(g*) = 0.

Sign convention for the Z-flavor dual (the calibrated design decision): a
faithful monomial is dualized by rewriting it in a determinant-positive
character order, taking the dual-basis rows in that same order, and
re-canonicalizing.  On canonical representations this reads

    dual(c on A) = c · sign(det A) · sign(det B) on B,

with A the sorted character matrix and B the sorted dual-basis matrix.  This
is an involution, reduces mod 2 to the plain GF(2) dual, and is exactly
multiplicative for block products, which is what keeps the kernel closed
under products.  Calibration notes live in the test suite next to the
hand-checked examples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import gf2, intmat
from .errors import ValidationError

Char = tuple[int, ...]
Monomial = tuple[Char, ...]

PRIMAL = "primal"
DUAL = "dual"


# ---------------------------------------------------------------------------
# characters and monomials


def check_char_gf2(char: Char, n: int) -> Char:
    char = tuple(int(v) for v in char)
    if len(char) != n:
        raise ValidationError(f"character {char} does not have length {n}")
    if any(v not in (0, 1) for v in char):
        raise ValidationError(f"GF(2) character {char} has entries outside {{0,1}}")
    if not any(char):
        raise ValidationError("zero character is not allowed")
    return char


def check_char_z(char: Char, n: int) -> Char:
    char = tuple(int(v) for v in char)
    if len(char) != n:
        raise ValidationError(f"character {char} does not have length {n}")
    if not any(char):
        raise ValidationError("zero character is not allowed")
    return char


def char_mod2(char: Char) -> Char:
    return tuple(v & 1 for v in char)


def sort_monomial(chars: Iterable[Char]) -> tuple[int, Monomial]:
    """Sort characters lexicographically; return (permutation sign, monomial).

    Returns sign 0 when a character repeats (the wedge vanishes).
    """
    chars = list(chars)
    sign = 1
    # insertion sort so the parity comes out with no extra bookkeeping
    for i in range(1, len(chars)):
        j = i
        while j > 0 and chars[j - 1] > chars[j]:
            chars[j - 1], chars[j] = chars[j], chars[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(chars, chars[1:]):
        if a == b:
            return 0, ()
    return sign, tuple(chars)


def monomial_matrix(mono: Monomial) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(c) for c in mono)


def det_sign(mono: Monomial) -> int:
    """Sign of det of the sorted character matrix of a full-rank Z monomial."""
    d = intmat.det(monomial_matrix(mono))
    if d == 0:
        raise ValidationError(f"monomial {mono} has linearly dependent characters")
    return 1 if d > 0 else -1


def is_faithful_monomial_gf2(mono: Monomial, n: int) -> bool:
    if len(mono) != n:
        return False
    rows = [gf2.pack(c) for c in mono]
    return gf2.is_invertible(rows, n)


def is_faithful_monomial_z(mono: Monomial, n: int) -> bool:
    if len(mono) != n:
        return False
    return intmat.det(monomial_matrix(mono)) in (1, -1)


def dual_monomial_gf2(mono: Monomial, n: int) -> Monomial:
    rows = [gf2.pack(c) for c in mono]
    dual_rows = gf2.inverse_transpose(rows, n)
    _, sorted_mono = sort_monomial(gf2.unpack(r, n) for r in dual_rows)
    return sorted_mono


def dual_monomial_z(mono: Monomial, n: int) -> tuple[int, Monomial]:
    """Dual of a canonical faithful Z monomial: (sign factor, sorted dual monomial)."""
    mat = monomial_matrix(mono)
    d = intmat.det(mat)
    if d not in (1, -1):
        raise ValidationError(f"monomial {mono} is not faithful (det={d})")
    dual_rows = intmat.inverse_transpose_unimodular(mat)
    sort_sign, dual_mono = sort_monomial(dual_rows)
    # sign(det A) * sign(det B) where B is the *sorted* dual matrix; since
    # det(unsorted dual) = det(A)^{-1} = det(A), this equals the sort sign.
    assert sort_sign != 0
    return sort_sign, dual_mono


# ---------------------------------------------------------------------------
# GF(2) polynomials


class Gf2Polynomial:
    """Square-free polynomial over GF(2) on characters in GF(2)^n."""

    __slots__ = ("n", "space", "monomials")

    def __init__(self, n: int, monomials: Iterable[Monomial] = (), space: str = PRIMAL):
        if space not in (PRIMAL, DUAL):
            raise ValidationError(f"unknown space {space!r}")
        if n < 1:
            raise ValidationError("rank n must be at least 1")
        self.n = int(n)
        self.space = space
        seen: set[Monomial] = set()
        for mono in monomials:
            mono = tuple(check_char_gf2(c, n) for c in mono)
            if len(set(mono)) != len(mono):
                raise ValidationError(f"repeated character in monomial {mono}")
            _, mono = sort_monomial(mono)
            seen.symmetric_difference_update({mono})
        self.monomials = frozenset(seen)

    # -- basics ----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Gf2Polynomial)
            and self.n == other.n
            and self.space == other.space
            and self.monomials == other.monomials
        )

    def __hash__(self) -> int:
        return hash((self.n, self.space, self.monomials))

    def __repr__(self) -> str:
        if not self.monomials:
            return f"Gf2Polynomial(n={self.n}, 0, space={self.space!r})"
        parts = " + ".join(
            "*".join(str(c) for c in mono) if mono else "1"
            for mono in self.sorted_monomials()
        )
        return f"Gf2Polynomial(n={self.n}, {parts}, space={self.space!r})"

    def is_zero(self) -> bool:
        return not self.monomials

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials)

    def __add__(self, other: "Gf2Polynomial") -> "Gf2Polynomial":
        self._check_compatible(other)
        return _gf2_from_set(self.n, self.space, self.monomials ^ other.monomials)

    def wedge(self, other: "Gf2Polynomial") -> "Gf2Polynomial":
        """Square-free product; monomials with a repeated character vanish."""
        self._check_compatible(other)
        acc: set[Monomial] = set()
        for m1 in self.monomials:
            for m2 in other.monomials:
                merged = m1 + m2
                if len(set(merged)) != len(merged):
                    continue
                _, mono = sort_monomial(merged)
                acc.symmetric_difference_update({mono})
        return _gf2_from_set(self.n, self.space, frozenset(acc))

    def _check_compatible(self, other: "Gf2Polynomial") -> None:
        if not isinstance(other, Gf2Polynomial):
            raise TypeError("expected a Gf2Polynomial")
        if self.n != other.n or self.space != other.space:
            raise ValidationError("polynomials live in different spaces")

    def degrees(self) -> set[int]:
        return {len(m) for m in self.monomials}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if degree is None:
            return len(degs) == 1
        return degs == {degree}


def _gf2_from_set(n: int, space: str, monos: frozenset[Monomial]) -> Gf2Polynomial:
    p = Gf2Polynomial.__new__(Gf2Polynomial)
    p.n = n
    p.space = space
    p.monomials = frozenset(monos)
    return p


def gf2_polynomial(n: int, monomials: Iterable[Iterable[Iterable[int]]],
                   space: str = PRIMAL) -> Gf2Polynomial:
    """Convenience constructor from nested iterables."""
    return Gf2Polynomial(n, [tuple(tuple(c) for c in m) for m in monomials], space)


# ---------------------------------------------------------------------------
# exterior polynomials over Z


class ExtPolynomial:
    """Element of the free exterior Z-algebra on characters in Z^n."""

    __slots__ = ("n", "space", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
                 space: str = PRIMAL):
        if space not in (PRIMAL, DUAL):
            raise ValidationError(f"unknown space {space!r}")
        if n < 1:
            raise ValidationError("rank n must be at least 1")
        self.n = int(n)
        self.space = space
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            coeff = int(coeff)
            if coeff == 0:
                continue
            mono = tuple(check_char_z(c, n) for c in mono)
            sign, mono = sort_monomial(mono)
            if sign == 0:
                continue
            acc[mono] = acc.get(mono, 0) + sign * coeff
            if acc[mono] == 0:
                del acc[mono]
        self.terms = acc

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtPolynomial)
            and self.n == other.n
            and self.space == other.space
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.space, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return f"ExtPolynomial(n={self.n}, 0, space={self.space!r})"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            body = "^".join(str(ch) for ch in mono) if mono else "1"
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{body}")
        return f"ExtPolynomial(n={self.n}, {' '.join(parts)}, space={self.space!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def _check_compatible(self, other: "ExtPolynomial") -> None:
        if not isinstance(other, ExtPolynomial):
            raise TypeError("expected an ExtPolynomial")
        if self.n != other.n or self.space != other.space:
            raise ValidationError("polynomials live in different spaces")

    def __add__(self, other: "ExtPolynomial") -> "ExtPolynomial":
        self._check_compatible(other)
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            acc[mono] = acc.get(mono, 0) + c
            if acc[mono] == 0:
                del acc[mono]
        return _ext_from_dict(self.n, self.space, acc)

    def __neg__(self) -> "ExtPolynomial":
        return _ext_from_dict(self.n, self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "ExtPolynomial") -> "ExtPolynomial":
        return self + (-other)

    def scale(self, k: int) -> "ExtPolynomial":
        k = int(k)
        if k == 0:
            return _ext_from_dict(self.n, self.space, {})
        return _ext_from_dict(self.n, self.space, {m: k * c for m, c in self.terms.items()})

    def wedge(self, other: "ExtPolynomial") -> "ExtPolynomial":
        """Exterior product (same ambient rank; distinct characters or zero)."""
        self._check_compatible(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, mono = sort_monomial(m1 + m2)
                if sign == 0:
                    continue
                acc[mono] = acc.get(mono, 0) + sign * c1 * c2
                if acc[mono] == 0:
                    del acc[mono]
        return _ext_from_dict(self.n, self.space, acc)

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if degree is None:
            return len(degs) == 1
        return degs == {degree}

    def support(self) -> int:
        """Number of monomials with nonzero coefficient."""
        return len(self.terms)


def _ext_from_dict(n: int, space: str, terms: dict[Monomial, int]) -> ExtPolynomial:
    p = ExtPolynomial.__new__(ExtPolynomial)
    p.n = n
    p.space = space
    p.terms = terms
    return p


def ext_polynomial(n: int, terms: Iterable[tuple[Iterable[Iterable[int]], int]],
                   space: str = PRIMAL) -> ExtPolynomial:
    return ExtPolynomial(n, [(tuple(tuple(c) for c in m), k) for m, k in terms], space)


# ---------------------------------------------------------------------------
# faithfulness


def is_faithful(p: Gf2Polynomial | ExtPolynomial) -> bool:
    """True when every monomial is degree-n square-free with basis characters.

    The zero polynomial is vacuously faithful (it represents the bounding
    class).
    """
    if isinstance(p, Gf2Polynomial):
        return all(is_faithful_monomial_gf2(m, p.n) for m in p.monomials)
    return all(is_faithful_monomial_z(m, p.n) for m in p.terms)


# ---------------------------------------------------------------------------
# dual


def dual(p: Gf2Polynomial | ExtPolynomial):
    """Monomial-wise dual-basis transform; flips the primal/dual space tag."""
    target = DUAL if p.space == PRIMAL else PRIMAL
    if isinstance(p, Gf2Polynomial):
        out: set[Monomial] = set()
        for mono in p.monomials:
            if not is_faithful_monomial_gf2(mono, p.n):
                raise ValidationError(f"cannot dualize non-faithful monomial {mono}")
            out.symmetric_difference_update({dual_monomial_gf2(mono, p.n)})
        return _gf2_from_set(p.n, target, frozenset(out))
    acc: dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        sign, dual_mono = dual_monomial_z(mono, p.n)
        acc[dual_mono] = acc.get(dual_mono, 0) + sign * coeff
        if acc[dual_mono] == 0:
            del acc[dual_mono]
    return _ext_from_dict(p.n, target, acc)


# ---------------------------------------------------------------------------
# differential


def differential(p: Gf2Polynomial | ExtPolynomial):
    """Deletion differential d.

    GF(2): d(s1···si) = sum over j of the monomial with sj removed (i > 1),
    d(s1) = 1, d(1) = 0.  Z: signs alternate, d(s1 ∧ ··· ∧ sk) =
    Σ (−1)^{i+1} (delete si) on canonically ordered monomials, d(s1) = 1.
    Square of the differential is zero in both flavors.
    """
    if isinstance(p, Gf2Polynomial):
        out: set[Monomial] = set()
        for mono in p.monomials:
            if len(mono) == 0:
                continue
            for j in range(len(mono)):
                out.symmetric_difference_update({mono[:j] + mono[j + 1:]})
        return _gf2_from_set(p.n, p.space, frozenset(out))
    acc: dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        if len(mono) == 0:
            continue
        for j in range(len(mono)):
            sub = mono[:j] + mono[j + 1:]
            c = coeff * (1 if j % 2 == 0 else -1)
            acc[sub] = acc.get(sub, 0) + c
            if acc[sub] == 0:
                del acc[sub]
    return _ext_from_dict(p.n, p.space, acc)


# ---------------------------------------------------------------------------
# membership


def in_image_verdict(p: Gf2Polynomial) -> tuple[bool, str]:
    """Membership of a GF(2) polynomial in the geometric image, with reason."""
    if not isinstance(p, Gf2Polynomial):
        raise TypeError("in_image expects a Gf2Polynomial")
    if p.space != PRIMAL:
        return False, "polynomial is not in the primal space"
    if p.is_zero():
        return True, "zero polynomial (bounding class)"
    if not is_faithful(p):
        return False, "not faithful"
    if differential(dual(p)).is_zero():
        return True, "d(g*) = 0"
    return False, "d(g*) != 0"


def in_image(p: Gf2Polynomial) -> bool:
    return in_image_verdict(p)[0]


def in_image_unitary_verdict(p: ExtPolynomial) -> tuple[bool, str]:
    if not isinstance(p, ExtPolynomial):
        raise TypeError("in_image_unitary expects an ExtPolynomial")
    if p.space != PRIMAL:
        return False, "polynomial is not in the primal space"
    if p.is_zero():
        return True, "zero polynomial (bounding class)"
    if not is_faithful(p):
        return False, "not faithful"
    if differential(dual(p)).is_zero():
        return True, "d(g*) = 0"
    return False, "d(g*) != 0"


def in_image_unitary(p: ExtPolynomial) -> bool:
    return in_image_unitary_verdict(p)[0]


# ---------------------------------------------------------------------------
# mod-2 reduction


def mod2_reduce(p: ExtPolynomial) -> Gf2Polynomial:
    """Coordinate-wise and coefficient-wise reduction mod 2.

    Monomials whose characters collide (or vanish) mod 2 are dropped: in the
    square-free target a repeated character means the monomial is zero.  For
    faithful monomials this never fires — an integrally invertible character
    matrix stays invertible mod 2 — so on the classes we care about the
    reduction is literally coordinate-wise.  Dropping instead of raising keeps
    the map total and multiplicative on arbitrary elements.
    """
    out: set[Monomial] = set()
    for mono, coeff in p.terms.items():
        if coeff % 2 == 0:
            continue
        reduced = [char_mod2(c) for c in mono]
        if any(not any(c) for c in reduced):
            continue
        if len(set(reduced)) != len(reduced):
            continue
        _, sorted_mono = sort_monomial(reduced)
        out.symmetric_difference_update({sorted_mono})
    return _gf2_from_set(p.n, p.space, frozenset(out))


# ---------------------------------------------------------------------------
# block embeddings (used by the class product)


def embed_chars_gf2(p: Gf2Polynomial, total: int, offset: int) -> Gf2Polynomial:
    out = set()
    for mono in p.monomials:
        new_mono = tuple(
            (0,) * offset + c + (0,) * (total - offset - p.n) for c in mono
        )
        _, new_mono = sort_monomial(new_mono)
        out.symmetric_difference_update({new_mono})
    return _gf2_from_set(total, p.space, frozenset(out))


def embed_chars_z(p: ExtPolynomial, total: int, offset: int) -> ExtPolynomial:
    acc: dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        new_mono = tuple(
            (0,) * offset + c + (0,) * (total - offset - p.n) for c in mono
        )
        sign, new_mono = sort_monomial(new_mono)
        acc[new_mono] = acc.get(new_mono, 0) + sign * coeff
    return _ext_from_dict(total, p.space, {m: c for m, c in acc.items() if c})


def permute_coords_gf2(p: Gf2Polynomial, perm: tuple[int, ...]) -> Gf2Polynomial:
    out = set()
    for mono in p.monomials:
        new_mono = tuple(tuple(c[i] for i in perm) for c in mono)
        _, new_mono = sort_monomial(new_mono)
        out.symmetric_difference_update({new_mono})
    return _gf2_from_set(p.n, p.space, frozenset(out))


def permute_coords_z(p: ExtPolynomial, perm: tuple[int, ...]) -> ExtPolynomial:
    acc: dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        new_chars = [tuple(c[i] for i in perm) for c in mono]
        sign, new_mono = sort_monomial(new_chars)
        acc[new_mono] = acc.get(new_mono, 0) + sign * coeff
    return _ext_from_dict(p.n, p.space, {m: c for m, c in acc.items() if c})


# ---------------------------------------------------------------------------
# enumeration helpers


def nonzero_chars_gf2(n: int) -> list[Char]:
    return [c for c in itertools.product((0, 1), repeat=n) if any(c)]


def all_faithful_monomials_gf2(n: int) -> list[Monomial]:
    """All unordered bases of GF(2)^n as canonical monomials, sorted."""
    chars = nonzero_chars_gf2(n)
    packed = [gf2.pack(c) for c in chars]
    out: list[Monomial] = []

    def extend(start: int, picked: list[int], pivots: list[int]) -> None:
        if len(picked) == n:
            out.append(tuple(chars[i] for i in picked))
            return
        for i in range(start, len(chars)):
            reduced = gf2._reduce(packed[i], pivots)
            if reduced:
                extend(i + 1, picked + [i], pivots + [reduced])

    extend(0, [], [])
    return out

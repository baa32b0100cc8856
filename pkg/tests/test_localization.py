"""Fixed-point data, integrality checks, and equivariant Chern numbers."""

import random
from fractions import Fraction

import pytest

from bordismkit import algebra, kernels, mvpoly
from bordismkit.algebra import ExtPolynomial, Gf2Polynomial
from bordismkit.errors import ValidationError
from bordismkit.localization import (FixedPoint, FixedPointData,
                                     Gf2IntegralityTable, SymmetricFunction,
                                     equivariant_chern_number,
                                     integrality_check_gf2,
                                     integrality_check_z,
                                     min_fixed_points_check, vanishing_test)

RP2 = Gf2Polynomial(2, [((0, 1), (1, 0)), ((0, 1), (1, 1)), ((1, 0), (1, 1))])
CP1 = ExtPolynomial(1, {((-1,),): -1, ((1,),): 1})
CP2 = ExtPolynomial(2, {((-1, 0), (-1, 1)): -1,
                        ((0, -1), (1, -1)): 1,
                        ((0, 1), (1, 0)): -1})

# CP^2 equivariant Chern evaluations, checked by hand against the classical
# values: c1^2 = 9, c2 = 3 (Euler characteristic), and the odd-degree sums
# vanish identically.
CP2_NUMBERS = {(1, 0): 0, (2, 0): 9, (0, 1): 3, (3, 0): 0, (1, 1): 0}


def e_n_function(n):
    return SymmetricFunction.elementary(n)


# -- symmetric functions ----------------------------------------------------


def test_symmetric_function_canonicalizes():
    f = SymmetricFunction(((1, 3, 2),))
    assert f.partitions == ((3, 2, 1),)
    assert f.degree() == 6
    assert f.max_parts() == 3


def test_symmetric_function_rejects_bad_parts():
    with pytest.raises(ValidationError):
        SymmetricFunction(((0, 1),))
    with pytest.raises(ValidationError):
        SymmetricFunction(((2,), (2,)))


def test_elementary_and_one():
    assert SymmetricFunction.one().partitions == ((),)
    assert SymmetricFunction.elementary(3).partitions == ((1, 1, 1),)
    assert SymmetricFunction.monomial((2, 1)).partitions == ((2, 1),)


# -- fixed point data --------------------------------------------------------


def test_from_polynomial_gf2():
    data = FixedPointData.from_polynomial(RP2)
    assert data.flavor == "gf2"
    assert len(data.points) == 3
    assert all(pt.sign == 1 for pt in data.points)


def test_from_polynomial_z_signs():
    # every CP^2 fixed point carries sign +1 once the ordering sign of the
    # stored coefficient is unfolded against the weight determinant
    data = FixedPointData.from_polynomial(CP2)
    assert data.flavor == "z"
    assert len(data.points) == 3
    assert all(pt.sign == 1 for pt in data.points)


def test_from_polynomial_z_multiplicity():
    data = FixedPointData.from_polynomial(CP1.scale(2))
    assert len(data.points) == 4


def test_fixed_point_data_validates_faithfulness():
    with pytest.raises(ValidationError):
        FixedPointData("z", 2, [FixedPoint(1, ((2, 0), (0, 1)))])


def test_gf2_flavor_forces_positive_signs():
    # signs carry no information over GF(2); the constructor normalizes them
    data = FixedPointData("gf2", 1, [FixedPoint(-1, ((1,),))])
    assert [pt.sign for pt in data.points] == [1]


# -- integrality --------------------------------------------------------------


def test_rp2_integral_for_all_low_degree_functions():
    data = FixedPointData.from_polynomial(RP2)
    for mu in [()] + mvpoly.partitions_up_to(6, 2):
        assert integrality_check_gf2(data, SymmetricFunction((mu,)))


def test_single_monomial_fails_integrality():
    data = FixedPointData.from_polynomial(
        Gf2Polynomial(2, [((0, 1), (1, 0))]))
    results = [integrality_check_gf2(data, SymmetricFunction.monomial(mu))
               for mu in mvpoly.partitions_up_to(4, 2)]
    assert not all(results)


def test_e_n_always_integral():
    # e_n evaluates to the product of the point's own forms, clearing the
    # denominator at that point entirely
    rng = random.Random(59)
    monos = algebra.all_faithful_monomials_gf2(3)
    for _ in range(30):
        g = Gf2Polynomial(3, rng.sample(monos, rng.randint(1, 6)))
        data = FixedPointData.from_polynomial(g)
        assert integrality_check_gf2(data, e_n_function(3))


def test_integrality_z_unsigned_vs_signed():
    # a single integer fixed point has a bare 1/x term: never integral
    single = FixedPointData("z", 1, [FixedPoint(1, ((1,),))])
    assert not integrality_check_z(single, SymmetricFunction.one())
    # CP^1 passes unsigned (canonical units cancel) and signed
    data = FixedPointData.from_polynomial(CP1)
    assert integrality_check_z(data, SymmetricFunction.one())
    assert integrality_check_z(data, SymmetricFunction.one(), signed=True)


def test_integrality_validates_max_parts():
    data = FixedPointData.from_polynomial(CP1)
    with pytest.raises(ValidationError):
        integrality_check_z(data, SymmetricFunction(((1, 1),)))


def test_batch_table_matches_reference():
    rng = random.Random(61)
    parts = [()] + mvpoly.partitions_up_to(4, 2)
    table = Gf2IntegralityTable(2, parts)
    monos = algebra.all_faithful_monomials_gf2(2)
    for _ in range(40):
        g = Gf2Polynomial(2, rng.sample(monos, rng.randint(1, 3)))
        data = FixedPointData.from_polynomial(g)
        for mu in parts:
            assert (table.passes(g, mu)
                    == integrality_check_gf2(data, SymmetricFunction((mu,))))


def test_batch_table_input_checks():
    table = Gf2IntegralityTable(2, [(1,)])
    with pytest.raises(ValidationError):
        table.passes(Gf2Polynomial(2, [((0, 1), (1, 0))]), (2,))
    with pytest.raises(ValidationError):
        table.passes(Gf2Polynomial(3, [], space="primal"), (1,))


# -- Chern numbers -------------------------------------------------------------


def test_cp1_chern_number():
    data = FixedPointData.from_polynomial(CP1)
    r = equivariant_chern_number(data, 1, 0)
    assert r.is_polynomial and r.integral and r.constant == 2


def test_cp2_chern_numbers():
    data = FixedPointData.from_polynomial(CP2)
    for (i, j), want in CP2_NUMBERS.items():
        r = equivariant_chern_number(data, i, j)
        assert r.is_polynomial and r.integral, (i, j)
        assert r.constant == want, (i, j)


def test_chern_requires_z_flavor():
    data = FixedPointData.from_polynomial(RP2)
    with pytest.raises(ValidationError):
        equivariant_chern_number(data, 1, 0)


def test_chern_c2_needs_rank_two():
    data = FixedPointData.from_polynomial(CP1)
    with pytest.raises(ValidationError):
        equivariant_chern_number(data, 0, 1)


def test_chern_sign_sensitivity():
    # flipping one fixed-point sign of CP^1 yields the non-polynomial 2/x sum
    data = FixedPointData("z", 1, [FixedPoint(1, ((1,),)),
                                   FixedPoint(-1, ((-1,),))])
    r = equivariant_chern_number(data, 0, 0)
    assert not r.is_polynomial


# -- vanishing and support -----------------------------------------------------


def test_vanishing_test_zero_polynomial():
    assert vanishing_test(ExtPolynomial(2))


def test_vanishing_test_sees_nonzero_chern_numbers():
    # CP^1 is a kernel element but its degree-1 Chern number is 2
    assert not vanishing_test(CP1)


def test_vanishing_test_rejects_nonmembers():
    with pytest.raises(ValidationError):
        vanishing_test(ExtPolynomial(2, {((0, 1), (1, 0)): 1}))
    with pytest.raises(ValidationError):
        vanishing_test(RP2)


def test_min_fixed_points_report():
    report = min_fixed_points_check(2, kernels.kernel_sample_unitary(2, 1).basis)
    assert report.ok
    assert report.n == 2
    assert report.min_support >= (2 + 1) // 2 + 1
    assert report.violations == ()

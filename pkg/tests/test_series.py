"""Laurent series arithmetic, precision contracts, polygons, transports."""

import math

import pytest
from fractions import Fraction

from swancond.basechange import make_base_change
from swancond.errors import (ArithmeticDomainError, ContractError,
                             PrecisionError)
from swancond.residue import FiniteField, ResidueField
from swancond.series import (INF, LaurentSeries, LocalField, apply_base_change,
                             newton_polygon)


def K2():
    return LocalField(ResidueField(FiniteField(2)), "pi")


def K3():
    return LocalField(ResidueField(FiniteField(3)), "pi")


def S(field, terms, precision=INF):
    parsed = {e: field.residue.parse(c) for e, c in terms.items()}
    return LaurentSeries(field, parsed, precision)


# ---------------------------------------------------------------------------
# Arithmetic and precision.
# ---------------------------------------------------------------------------


def test_inverse_pair_is_exact():
    K = K2()
    x = S(K, {-2: "u"})
    y = S(K, {2: "1/u"})
    assert x * y == LaurentSeries.one(K)


def test_geometric_series_inverse():
    K = K2()
    x = S(K, {0: "1", 1: "1"})
    inv = x.inv(precision=4)
    assert inv == S(K, {0: "1", 1: "1", 2: "1", 3: "1"}, precision=4)
    prod = x * inv
    assert prod.coeff(0) == K.residue.one()
    assert all(prod.coeff(k).is_zero() for k in range(1, 4))


def test_addition_precision_contract():
    K = K2()
    x = S(K, {-1: "1"}, precision=3)
    y = S(K, {-1: "2"}, precision=2)   # 2 = 0 mod 2: y is O(pi^2) with no pole
    z = S(K, {-1: "1"}, precision=2)
    total = x + (-z)
    assert total.precision == 2
    assert not total.terms
    assert y.precision == 2


def test_multiplication_precision():
    K = K2()
    x = S(K, {1: "1"}, precision=5)
    y = S(K, {2: "u"}, precision=4)
    z = x * y
    # min(5 + 2, 4 + 1) = 5
    assert z.precision == 5
    assert z.coeff(3) == K.residue.gen()


def test_inv_precision_contract():
    K = K2()
    x = S(K, {1: "1", 2: "1"}, precision=6)   # ord 1, precision 6
    inv = x.inv()
    assert inv.precision == 6 - 2
    assert (x * inv).coeff(0) == K.residue.one()


def test_inv_needs_target_for_exact_series():
    K = K2()
    x = S(K, {0: "1", 1: "1"})
    with pytest.raises(PrecisionError):
        x.inv()


def test_inv_of_zero():
    K = K2()
    with pytest.raises(ArithmeticDomainError):
        LaurentSeries.zero(K).inv()
    with pytest.raises(PrecisionError):
        LaurentSeries.unknown(K, 3).inv()


def test_order_contracts():
    K = K2()
    assert S(K, {-3: "1"}).order() == -3
    assert LaurentSeries.zero(K).order() == INF
    with pytest.raises(PrecisionError):
        LaurentSeries.unknown(K, 5).order()


def test_coeff_beyond_precision():
    K = K2()
    x = S(K, {0: "1"}, precision=3)
    assert x.coeff(2).is_zero()
    with pytest.raises(PrecisionError):
        x.coeff(3)


def test_ord_additivity_random():
    import random
    rng = random.Random(17)
    K = K3()
    res = K.residue
    u = res.gen()
    for _ in range(40):
        def rand_series():
            terms = {}
            for _ in range(rng.randint(1, 3)):
                c = res.constant(rng.randrange(1, 3)) * u ** rng.randint(0, 2)
                terms[rng.randint(-4, 4)] = c
            return LaurentSeries(K, terms)
        x, y = rand_series(), rand_series()
        assert (x * y).order() == x.order() + y.order()
        if x.order() != y.order():
            assert (x + y).order() == min(x.order(), y.order())


def test_serialization_round_trip():
    K = K2()
    x = S(K, {-2: "u", 3: "u+1"}, precision=7)
    rec = x.to_record()
    assert LaurentSeries.from_record(K, rec) == x
    y = S(K, {0: "1"})
    assert LaurentSeries.from_record(K, y.to_record()) == y


# ---------------------------------------------------------------------------
# Newton polygons.
# ---------------------------------------------------------------------------


def _poly_for(field, f):
    one = LaurentSeries.one(field)
    p = field.p
    zero = LaurentSeries.zero(field)
    return [-f, -one] + [zero] * (p - 2) + [one]


def test_polygon_ramified_slope():
    K = K2()
    np_ = newton_polygon(_poly_for(K, S(K, {-3: "1"})))
    # hull of (0,-3),(1,0),(2,0) -> single segment, reported slope 3/2
    assert np_.segments == ((Fraction(3, 2), 2),)
    assert np_.slope_denominator_lcm() == 2


def test_polygon_ferocious_slope():
    K = K2()
    np_ = newton_polygon(_poly_for(K, S(K, {-2: "u"})))
    # (1, 0) lies above the hull of (0,-2),(2,0)
    assert np_.segments == ((Fraction(1), 2),)
    assert np_.slope_denominator_lcm() == 1


def test_polygon_unit_roots():
    K = K2()
    np_ = newton_polygon(_poly_for(K, LaurentSeries.zero(K)))
    assert np_.segments == ((Fraction(0), 2),)
    assert np_.degree() == 2


def test_polygon_integral_f():
    K = K2()
    np_ = newton_polygon(_poly_for(K, S(K, {2: "1"})))
    assert np_.segments == ((Fraction(-2), 1), (Fraction(0), 1))
    assert np_.slope_denominator_lcm() == 1


def test_polygon_multiplicities_sum_to_degree():
    K = K3()
    for terms in [{-4: "u"}, {-2: "1"}, {1: "1"}, {-3: "u", -1: "1"}]:
        np_ = newton_polygon(_poly_for(K, S(K, terms)))
        assert np_.degree() == 3


def test_polygon_precision_guard():
    K = K2()
    one = LaurentSeries.one(K)
    # constant coefficient O(pi^-5) could dip below the hull of the rest
    coeffs = [LaurentSeries.unknown(K, -5), -one, one]
    with pytest.raises(PrecisionError):
        newton_polygon(coeffs)
    # but O(pi^1) cannot: the hull through (1,0),(2,0) extends to (0,0)
    coeffs = [LaurentSeries.unknown(K, 1), -one, one]
    assert newton_polygon(coeffs).segments == ((Fraction(0), 2),)


def test_polygon_rejects_zero_leading():
    K = K2()
    one = LaurentSeries.one(K)
    with pytest.raises(ContractError):
        newton_polygon([one, one, LaurentSeries.zero(K)])


# ---------------------------------------------------------------------------
# Base-change transports.
# ---------------------------------------------------------------------------


def test_wild_root_transport():
    K = K2()
    bc = make_base_change("wild_root", K, m=1)
    x = S(K, {-1: "u"})
    y = apply_base_change(x, bc)
    assert y.terms == {-2: K.residue.gen()}
    assert y.field.uniformizer == "pi'"


def test_tame_root_transport():
    K = K2()
    bc = make_base_change("tame_root", K, t=3)
    y = apply_base_change(S(K, {-3: "1"}), bc)
    assert y.terms == {-9: K.residue.one()}


def test_prop_p1_transport():
    K = K2()
    bc = make_base_change("prop_p1", K)
    y = apply_base_change(S(K, {-1: "1"}), bc)
    FU = bc.target.residue
    assert set(y.terms) == {-2}
    assert y.terms[-2] == FU.one() / FU.gen("U")


def test_unramified_transport_preserves_everything():
    K = K2()
    bc = make_base_change("unramified", K, constant_degree=2)
    x = S(K, {-2: "u", 1: "u+1"}, precision=9)
    y = apply_base_change(x, bc)
    assert y.precision == 9
    assert sorted(y.terms) == [-2, 1]
    assert str(y.terms[-2]) == "u"


def test_transport_is_ring_homomorphism():
    import random
    rng = random.Random(23)
    K = K3()
    res = K.residue
    u = res.gen()
    changes = [make_base_change("tame_root", K, t=2),
               make_base_change("wild_root", K, m=1),
               make_base_change("prop_p1", K)]
    for _ in range(25):
        def rand_series():
            terms = {}
            for _ in range(rng.randint(1, 3)):
                terms[rng.randint(-3, 3)] = (
                    res.constant(rng.randrange(1, 3)) * u ** rng.randint(0, 2))
            return LaurentSeries(K, terms)
        x, y = rand_series(), rand_series()
        for bc in changes:
            fx, fy = apply_base_change(x, bc), apply_base_change(y, bc)
            assert apply_base_change(x * y, bc) == fx * fy
            assert apply_base_change(x + y, bc) == fx + fy


def test_transport_respects_uniformizer_relation():
    # the image of pi itself matches the declared relation exactly
    K = K2()
    pi = S(K, {1: "1"})
    tame = make_base_change("tame_root", K, t=3)
    assert apply_base_change(pi, tame).terms == {3: K.residue.one()}
    wild = make_base_change("wild_root", K, m=2)
    assert apply_base_change(pi, wild).terms == {4: K.residue.one()}
    prop = make_base_change("prop_p1", K)
    img = apply_base_change(pi, prop)
    assert set(img.terms) == {2}
    assert str(img.terms[2]) == "U"


def test_transport_source_mismatch():
    K, K3_ = K2(), K3()
    bc = make_base_change("tame_root", K, t=3)
    with pytest.raises(ContractError):
        apply_base_change(S(K3_, {0: "1"}), bc)

"""The truncated-series field: arithmetic, order, classification, enclosures."""

from fractions import Fraction as F
from random import Random

import pytest

from ihull import lcf
from ihull.errors import (
    IndeterminateComparison,
    NotFinite,
    NotPositive,
    PreconditionViolated,
    ZeroOrUnknownLeading,
)
from ihull.intervals import Interval
from ihull.lcf import (
    INFINITE_ORDER,
    LeviCivitaNumber,
    Magnitude,
    Ordering,
    Ternary,
)
from ihull.probes import random_finite, random_exact

T = lcf.T
TI = lcf.T_INVERSE
ONE = lcf.one()

SQRT2 = F(14142135623730950488016887242096980785696, 10**40)
COS1 = F(5403023058681397174009366074429766037323, 10**40)


def num(text):
    from ihull.parsing import parse_number

    return parse_number(text)


# ---------------------------------------------------------------------------
# construction and normalization
# ---------------------------------------------------------------------------

def test_terms_canonicalized():
    x = LeviCivitaNumber(((F(2), 1), (F(0), 3), (F(2), -1)))
    assert x.terms == ((F(0), Interval.point(3)),)
    assert LeviCivitaNumber(((F(5), 7),), order=F(3)).terms == ()


def test_exactness_flags():
    assert ONE.is_exact and lcf.zero().is_zero
    assert not lcf.zero(F(3)).is_zero
    assert not lcf.from_interval(Interval(F(1), F(2))).is_exact


# ---------------------------------------------------------------------------
# add / mul / inverse
# ---------------------------------------------------------------------------

def test_add_cancellation():
    assert (ONE + T) + (ONE - T) == lcf.from_rational(2)


def test_add_disjoint_exponents():
    assert (TI + ONE).terms == ((F(-1), Interval.point(1)), (F(0), Interval.point(1)))


def test_add_truncation_dominates():
    result = lcf.truncate(ONE, 3) + lcf.t_power(5)
    assert result.terms == ((F(0), Interval.point(1)),)
    assert result.order == 3


def test_mul_difference_of_squares():
    assert (ONE + T) * (ONE - T) == num("1 - t^2")


def test_mul_fractional_exponents():
    assert lcf.t_power(F(1, 2)) * lcf.t_power(F(1, 2)) == T


def test_mul_annihilation():
    assert (lcf.zero() * TI).is_zero


def test_mul_truncation_rule():
    a = lcf.truncate(ONE + T, 4)           # 1 + t + O(t^4)
    b = lcf.scale(T, 3)                    # 3t
    product = a * b
    assert product.order == 5              # O(t^4) * 3t enters at t^5
    assert product == lcf.truncate(num("3t + 3t^2"), 5)


def test_inverse_geometric_series():
    assert lcf.inverse(ONE - T, 3) == lcf.truncate(num("1 + t + t^2"), 3)


def test_inverse_monomials_exact():
    assert lcf.inverse(T, 5) == TI
    assert lcf.inverse(lcf.from_rational(2), 5) == lcf.from_rational(F(1, 2))


def test_inverse_identity_up_to_order():
    rng = Random(11)
    for _ in range(40):
        a = random_exact(rng)
        if a.leading is None or a.leading[1].contains_zero():
            continue
        inv = lcf.inverse(a, 6)
        residue = a * inv - ONE
        assert not [q for q, _ in residue.terms if q < 6]
        assert residue.order >= 6 - a.leading[0] or residue.order >= 6


def test_inverse_rejects_unknown_leading():
    with pytest.raises(ZeroOrUnknownLeading):
        lcf.inverse(lcf.zero(), 4)
    with pytest.raises(ZeroOrUnknownLeading):
        lcf.inverse(lcf.from_interval(Interval(F(-1), F(1))), 4)


# ---------------------------------------------------------------------------
# comparison and order structure
# ---------------------------------------------------------------------------

def test_compare_examples():
    assert lcf.compare(T, T * T) is Ordering.GT
    assert lcf.compare(ONE + T, ONE) is Ordering.GT
    assert lcf.compare(TI, lcf.from_rational(10**6)) is Ordering.GT
    assert lcf.compare(ONE, ONE) is Ordering.EQ


def test_compare_indeterminate_carries_exponent():
    with pytest.raises(IndeterminateComparison) as info:
        lcf.compare(lcf.truncate(ONE, 3), ONE)
    assert info.value.exponent == 3
    with pytest.raises(IndeterminateComparison) as info:
        lcf.sign(lcf.from_interval(Interval(F(-1), F(1))))
    assert info.value.exponent == 0


def test_compare_decides_despite_deep_straddle():
    # a straddling coefficient *after* a decisive one is irrelevant
    x = ONE + lcf.monomial(Interval(F(-1), F(1)), 1)
    assert lcf.compare(x, lcf.zero()) is Ordering.GT


def test_order_transitivity_on_random_triples():
    rng = Random(5)
    for _ in range(200):
        values = sorted(
            (random_exact(rng) for _ in range(3)),
            key=lambda v: [(q, c.lo) for q, c in v.terms],
        )
        a, b, c = values
        try:
            if (
                lcf.compare(a, b) is Ordering.LT
                and lcf.compare(b, c) is Ordering.LT
            ):
                assert lcf.compare(a, c) is Ordering.LT
        except IndeterminateComparison:
            pass


def test_abs_value():
    assert lcf.abs_value(num("-2 + t")) == num("2 - t")
    assert lcf.abs_value(T) == T


# ---------------------------------------------------------------------------
# sqrt / cos / pi enclosures
# ---------------------------------------------------------------------------

def test_sqrt_perfect_square():
    result = lcf.sqrt(num("1 + 2t + t^2"), 4, 64)
    assert result.coefficient(0) == Interval.point(1)
    assert result.coefficient(1) == Interval.point(1)
    assert all(c.is_zero for q, c in result.terms if q > 1)


def test_sqrt_monomial_square():
    assert lcf.sqrt(num("4t^2"), 4, 64) == num("2t")


def test_sqrt_scalar_enclosure():
    enc = lcf.sqrt(lcf.from_rational(2), 4, 64).coefficient(0)
    assert SQRT2 in enc and enc.width <= F(1, 2**64)


def test_sqrt_square_re_encloses_input():
    rng = Random(3)
    for _ in range(25):
        a = random_exact(rng, max_terms=2, force_constant=True)
        if a.leading is None or a.leading[1].lo <= 0 or a.leading[0] != 0:
            continue
        root = lcf.sqrt(a, 6, 64)
        residue = root * root - a
        for q, c in residue.terms:
            if q < 6:
                assert c.contains_zero()


def test_sqrt_requires_positive_leading():
    with pytest.raises(NotPositive):
        lcf.sqrt(num("-1 + t"), 4, 64)
    with pytest.raises(NotPositive):
        lcf.sqrt(lcf.zero(), 4, 64)


def test_sqrt_fractional_lead_exponent():
    result = lcf.sqrt(num("9t^3"), 6, 64)
    assert result == lcf.monomial(3, F(3, 2))


def test_cos_examples():
    assert lcf.cos_enclosure(lcf.zero(), 4, 64) == ONE
    expansion = lcf.cos_enclosure(T, 4, 64)
    assert expansion.coefficient(0) == Interval.point(1)
    assert expansion.coefficient(2) == Interval.point(F(-1, 2))
    assert expansion.order == 4
    enc = lcf.cos_enclosure(ONE, 4, 64).coefficient(0)
    assert COS1 in enc


def test_cos_angle_addition_structure():
    # cos(1 + t) = cos1 - sin1 * t - (cos1/2) t^2 + ...
    SIN1 = F(8414709848078965066525023216302989996225, 10**40)
    value = lcf.cos_enclosure(ONE + T, 6, 64)
    assert COS1 in value.coefficient(0)
    assert -SIN1 in value.coefficient(1)
    assert -COS1 / 2 in value.coefficient(2)


def test_cos_sin_pythagoras_at_exponent_zero():
    for arg in (ONE, num("2"), num("1/3"), num("1 + t")):
        c = lcf.cos_enclosure(arg, 4, 64).coefficient(0)
        s = lcf.sin_enclosure(arg, 4, 64).coefficient(0)
        total = c * c + s * s
        assert F(1) in total
        assert total.width <= F(1, 2**58)


def test_cos_rejects_infinite():
    with pytest.raises(NotFinite):
        lcf.cos_enclosure(TI, 4, 64)


def test_pi_number():
    PI = F(31415926535897932384626433832795028841971, 10**40)
    assert PI in lcf.pi_number(64).coefficient(0)


def test_refinement_monotonicity():
    coarse = lcf.sqrt(lcf.from_rational(2), 4, 24).coefficient(0)
    fine = lcf.sqrt(lcf.from_rational(2), 4, 96).coefficient(0)
    assert coarse.contains_interval(fine)
    coarse = lcf.cos_enclosure(ONE, 4, 24).coefficient(0)
    fine = lcf.cos_enclosure(ONE, 4, 96).coefficient(0)
    assert coarse.contains_interval(fine)


# ---------------------------------------------------------------------------
# classification / standard part / halos
# ---------------------------------------------------------------------------

def test_classify_examples():
    assert lcf.classify_magnitude(T) is Magnitude.INFINITESIMAL
    assert lcf.classify_magnitude(num("3/2 + 5t")) is Magnitude.APPRECIABLE
    assert lcf.classify_magnitude(TI) is Magnitude.INFINITE
    assert lcf.classify_magnitude(lcf.zero()) is Magnitude.INFINITESIMAL
    assert lcf.classify_magnitude(lcf.zero(F(2))) is Magnitude.INFINITESIMAL
    assert lcf.classify_magnitude(lcf.zero(F(0))) is Magnitude.UNKNOWN


def test_classify_straddles():
    wide = lcf.from_interval(Interval(F(-1), F(1)))
    assert lcf.classify_magnitude(wide + T) is Magnitude.UNKNOWN
    # a definite deeper term rescues the verdict
    assert (
        lcf.classify_magnitude(lcf.monomial(Interval(F(-1), F(1)), -2) + lcf.scale(TI, 5))
        is Magnitude.INFINITE
    )


def test_standard_part_examples():
    assert lcf.standard_part(num("3/2 + 5t")) == Interval.point(F(3, 2))
    assert lcf.standard_part(num("t - t^2")) == Interval.point(0)
    with pytest.raises(NotFinite):
        lcf.standard_part(TI)
    with pytest.raises(NotFinite):
        lcf.standard_part(lcf.zero(F(0)))


def test_halo_equal_examples():
    assert lcf.halo_equal(ONE, ONE + lcf.t_power(3)) is Ternary.TRUE
    assert lcf.halo_equal(ONE, lcf.from_rational(2)) is Ternary.FALSE
    assert lcf.halo_equal(TI, TI + T) is Ternary.TRUE
    wide = lcf.from_interval(Interval(F(-1), F(1)))
    assert lcf.halo_equal(wide, lcf.zero()) is Ternary.UNKNOWN


# ---------------------------------------------------------------------------
# field laws and the standard-part morphism on random exact values
# ---------------------------------------------------------------------------

def test_field_laws_random():
    rng = Random(23)
    for _ in range(120):
        a, b, c = (random_exact(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_standard_part_is_ring_morphism():
    rng = Random(29)
    for _ in range(200):
        a, b = random_finite(rng), random_finite(rng)
        assert lcf.standard_part(a + b) == lcf.standard_part(a) + lcf.standard_part(b)
        assert lcf.standard_part(a * b) == lcf.standard_part(a) * lcf.standard_part(b)


def test_kernel_characterization():
    rng = Random(31)
    for _ in range(300):
        a = random_finite(rng)
        is_kernel = lcf.standard_part(a).is_zero
        assert is_kernel == (lcf.classify_magnitude(a) is Magnitude.INFINITESIMAL)


# ---------------------------------------------------------------------------
# rational approximation
# ---------------------------------------------------------------------------

def test_approximate_within_identity_case():
    y = num("3/2 + 5t")
    assert lcf.approximate_within(y, T * T) == y


def test_approximate_within_scalar_tolerance():
    enc = lcf.sqrt(lcf.from_rational(2), 4, 64)
    q = lcf.approximate_within(enc, lcf.from_rational(F(1, 1000)))
    assert q.is_exact
    assert abs(q.coefficient(0).lo - SQRT2) < F(1, 1000)


def test_approximate_within_infinitesimal_tolerance():
    q = lcf.approximate_within(ONE, T)
    assert lcf.standard_part(q) == Interval.point(1)
    assert lcf.halo_equal(q, ONE) is Ternary.TRUE


def test_approximate_within_random():
    rng = Random(37)
    for _ in range(100):
        y = random_finite(rng)
        q = lcf.approximate_within(y, T)
        assert q.is_exact
        assert lcf.halo_equal(q, y) is Ternary.TRUE
        gap = lcf.sub(y, q)
        assert lcf.sign(lcf.sub(T, gap)) > 0 and lcf.sign(lcf.add(T, gap)) > 0


def test_approximate_within_requires_positive_eps():
    with pytest.raises(PreconditionViolated):
        lcf.approximate_within(ONE, lcf.zero())
    with pytest.raises(IndeterminateComparison):
        lcf.approximate_within(ONE, lcf.zero(F(4)))


def test_approximate_within_enclosure_wider_than_eps():
    enc = lcf.sqrt(lcf.from_rational(2), 4, 64)
    with pytest.raises(IndeterminateComparison):
        lcf.approximate_within(enc, T)

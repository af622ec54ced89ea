"""Geodesics, certificates, and classification on the punctured-plane cover."""

from fractions import Fraction as F
from random import Random

import pytest

from ihull import cover, lcf
from ihull.cover import CoverPoint, Verdict, classify_point, point
from ihull.errors import (
    BranchIndeterminate,
    InvalidPoint,
    NotApplicable,
    NotStandard,
    PreconditionViolated,
)
from ihull.intervals import Interval, pi_interval
from ihull.lcf import IndeterminateComparison, Magnitude, Ordering, Ternary
from ihull.parsing import parse_number

T = lcf.T
TI = lcf.T_INVERSE
ONE = lcf.one()

# frozen from an independent high-precision evaluation
CHORD_1 = F(9588510772084060005465758704311427761636, 10**40)  # sqrt(2 - 2 cos 1)
THETA_7 = F(7168146928204135230747132334409942316057, 10**40)  # 7 - 2 pi


def test_point_requires_positive_radius():
    with pytest.raises(InvalidPoint):
        point(0, 1)
    with pytest.raises(InvalidPoint):
        point(-1, 0)
    with pytest.raises(InvalidPoint):
        CoverPoint(lcf.from_interval(Interval(F(-1), F(1))), lcf.zero())


# ---------------------------------------------------------------------------
# distance
# ---------------------------------------------------------------------------

def test_radial_geodesic():
    assert cover.cover_distance(point(1, 0), point(2, 0)) == ONE


def test_through_origin_branch():
    d = cover.cover_distance(point(1, 0), point(1, 4))
    assert d == lcf.from_rational(2)


def test_flagship_distance_standard_part_one():
    d = cover.cover_distance(point(ONE, TI), point(T, lcf.zero()))
    assert d == ONE + T
    st = lcf.standard_part(d)
    assert st.is_exact and st.lo == 1


def test_chord_enclosure():
    d = cover.cover_distance(point(1, 0), point(1, 1))
    enc = d.coefficient(0)
    assert CHORD_1 in enc
    assert enc.width <= F(1, 2**60)


def test_distance_symmetric_and_zero_on_diagonal():
    a, b = point(F(3, 2), F(1, 3)), point(F(1, 2), 2)
    assert cover.cover_distance(a, b) == cover.cover_distance(b, a)
    assert cover.cover_distance(a, a).is_zero


def test_branch_indeterminate_near_pi():
    pi_mid = pi_interval(64).midpoint
    with pytest.raises(BranchIndeterminate):
        cover.cover_distance(point(1, 0), point(1, pi_mid), precision=64)
    # decidable again at higher precision: pi_mid is below pi or above it
    d = cover.cover_distance(point(1, 0), point(1, pi_mid), precision=256)
    assert d is not None


def test_branch_continuity_near_pi():
    # chord at pi - 1/1000 and through-origin at pi + 1/1000 differ by < 10^-2
    pi_mid = pi_interval(128).midpoint
    below = cover.cover_distance(point(1, 0), point(1, pi_mid - F(1, 1000)))
    above = cover.cover_distance(point(1, 0), point(1, pi_mid + F(1, 1000)))
    assert above == lcf.from_rational(2)
    gap = lcf.sub(above, below).coefficient(0)
    assert gap.mag() < F(1, 100)


def test_radial_projection_is_lipschitz():
    rng = Random(41)
    for _ in range(30):
        a = point(F(rng.randint(1, 40), 10), F(rng.randint(-30, 30), 10))
        b = point(F(rng.randint(1, 40), 10), F(rng.randint(-30, 30), 10))
        d = cover.cover_distance(a, b)
        radial = lcf.abs_value(lcf.sub(a.r, b.r))
        try:
            assert lcf.sign(lcf.sub(d, radial)) >= 0
        except IndeterminateComparison:
            pass  # equality up to enclosure width (collinear radial pairs)


def test_coordinate_path_upper_bound():
    rng = Random(43)
    for _ in range(30):
        a = point(F(rng.randint(1, 40), 10), F(rng.randint(-30, 30), 10))
        b = point(F(rng.randint(1, 40), 10), F(rng.randint(-30, 30), 10))
        d = cover.cover_distance(a, b)
        r_min = a.r if lcf.compare(a.r, b.r) is not Ordering.GT else b.r
        path = lcf.add(
            lcf.abs_value(lcf.sub(a.r, b.r)),
            lcf.mul(r_min, lcf.abs_value(lcf.sub(a.zeta, b.zeta))),
        )
        try:
            assert lcf.sign(lcf.sub(path, d)) >= 0
        except IndeterminateComparison:
            pass  # equality up to enclosure width (purely radial pairs)


def test_triangle_inequality_standard_points():
    rng = Random(47)
    for _ in range(20):
        pts = [
            point(F(rng.randint(2, 40), 10), F(rng.randint(-25, 25), 10))
            for _ in range(3)
        ]
        dab = cover.cover_distance(pts[0], pts[1])
        dbc = cover.cover_distance(pts[1], pts[2])
        dac = cover.cover_distance(pts[0], pts[2])
        slack = lcf.sub(lcf.add(dab, dbc), dac)
        try:
            assert lcf.sign(slack) >= 0
        except IndeterminateComparison:
            pass  # degenerate triple decided only up to enclosure width


# ---------------------------------------------------------------------------
# the paper-trail bounds
# ---------------------------------------------------------------------------

def test_three_leg_bound_canonical():
    bound = cover.three_leg_upper_bound(point(ONE, TI), T)
    assert bound == parse_number("1 + 2t - 2t^2")
    d = cover.cover_distance(point(ONE, TI), point(T, lcf.zero()))
    assert lcf.compare(d, bound) is not Ordering.GT


def test_three_leg_bound_second_witness():
    bound = cover.three_leg_upper_bound(point(ONE, lcf.t_power(-2)), T)
    assert bound == parse_number("1 + t + t^2 - 2t^4")
    st = lcf.standard_part(bound)
    assert st.is_exact and st.lo == 1


def test_three_leg_bound_preconditions():
    with pytest.raises(PreconditionViolated):
        cover.three_leg_upper_bound(point(2, 0), T)  # r != 1
    with pytest.raises(PreconditionViolated):
        cover.three_leg_upper_bound(point(ONE, lcf.from_rational(5)), T)
    with pytest.raises(PreconditionViolated):
        cover.three_leg_upper_bound(point(ONE, TI), ONE)  # eps not infinitesimal


def test_sandwich_pins_standard_part():
    # |1 - eps| <= d <= three-leg bound, and both ends have standard part 1
    center, eps = point(ONE, TI), T
    d = cover.cover_distance(center, point(eps, lcf.zero()))
    lower = lcf.abs_value(lcf.sub(ONE, eps))
    upper = cover.three_leg_upper_bound(center, eps)
    assert lcf.compare(lower, d) is not Ordering.GT
    assert lcf.compare(d, upper) is not Ordering.GT
    assert lcf.standard_part(lower) == Interval.point(1)
    assert lcf.standard_part(upper) == Interval.point(1)


def test_separation_certificate_fields():
    cert = cover.separation_certificate(point(ONE, TI))
    assert cert.ball_radius == F(1, 2)
    assert cert.r_lo == F(1, 2) and cert.r_hi == 2
    assert cert.zeta_halfwidth == 1
    assert cert.ball_radius <= min(cert.r_lo, cert.r_lo * cert.zeta_halfwidth)


def test_lower_bound_independent_of_witness():
    center = point(ONE, TI)
    assert cover.inapproachability_lower_bound(center, point(1, 0)) == F(1, 2)
    assert cover.inapproachability_lower_bound(center, point(7, 3)) == F(1, 2)
    # scale covariance: center radius 3 gives 3/2
    assert cover.inapproachability_lower_bound(point(3, TI), point(1, 0)) == F(3, 2)


def test_lower_bound_preconditions():
    with pytest.raises(NotApplicable):
        cover.inapproachability_lower_bound(point(ONE, lcf.from_rational(9)), point(1, 0))
    with pytest.raises(NotApplicable):
        cover.inapproachability_lower_bound(point(T, TI), point(1, 0))
    with pytest.raises(NotApplicable):
        cover.inapproachability_lower_bound(point(ONE, TI), point(ONE, TI))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def test_classification_table():
    nearstd = classify_point(point(ONE + T, lcf.from_rational(5)))
    assert nearstd.verdict is Verdict.NEARSTANDARD
    assert nearstd.standard_point == (Interval.point(1), Interval.point(5))
    assert classify_point(point(ONE, TI)).verdict is Verdict.FINITE_INAPPROACHABLE
    assert classify_point(point(T, lcf.t_power(-2))).verdict is Verdict.ORIGIN_HALO
    assert classify_point(point(TI, lcf.zero())).verdict is Verdict.OUTSIDE_GALAXY


def test_origin_halo_bound_is_infinitesimal():
    for zeta in (lcf.t_power(-2), lcf.zero(), lcf.from_rational(100), TI):
        bound = cover.origin_path_bound(point(T, zeta))
        assert lcf.classify_magnitude(bound) is Magnitude.INFINITESIMAL
    # the bound really is a distance bound: check one case against the metric
    d = cover.cover_distance(point(T, lcf.from_rational(2)), point(T, lcf.zero()))
    bound = cover.origin_path_bound(point(T, lcf.from_rational(2)))
    assert lcf.classify_magnitude(d) is Magnitude.INFINITESIMAL
    assert lcf.classify_magnitude(bound) is Magnitude.INFINITESIMAL


def test_classification_consistency_with_galaxy():
    # finite_inapproachable means: in the galaxy, yet not approachable
    from ihull import hull, spaces

    space = spaces.get_space("cover")
    witness = space.point(ONE, TI)
    assert classify_point(point(ONE, TI)).verdict is Verdict.FINITE_INAPPROACHABLE
    assert hull.in_galaxy(space, witness) is Ternary.TRUE
    assert hull.is_approachable(space, witness) is Ternary.FALSE


# ---------------------------------------------------------------------------
# completion, net, covering map
# ---------------------------------------------------------------------------

def test_completion_distance():
    assert cover.completion_distance(None, point(1, 0)) == ONE
    assert cover.completion_distance(None, None).is_zero
    assert cover.completion_distance(point(1, 0), None) == ONE
    d = cover.completion_distance(None, point(ONE, TI))
    assert lcf.standard_part(d) == Interval.point(1)


def test_separated_net():
    net = cover.separated_net(5)
    assert [p.zeta.coefficient(0).lo for p in net] == [0, 4, 8, 12, 16]
    for i, p in enumerate(net):
        assert cover.completion_distance(None, p) == ONE
        for q in net[i + 1 :]:
            assert cover.cover_distance(p, q) == lcf.from_rational(2)


def test_separated_net_negative_control():
    # spacing below pi gives chords shorter than 2: the net property fails
    d = cover.cover_distance(point(1, 0), point(1, 1))
    assert lcf.compare(d, lcf.from_rational(2)) is Ordering.LT


def test_separated_net_needs_two_points():
    with pytest.raises(ValueError):
        cover.separated_net(1)


def test_covering_map_examples():
    r, theta = cover.covering_map(point(1, 0))
    assert r == 1 and theta == Interval.point(0)
    r, theta = cover.covering_map(point(1, 4))
    assert 4 in theta and theta.width <= F(1, 2**60)
    r, theta = cover.covering_map(point(2, 7))
    assert r == 2 and THETA_7 in theta
    _, theta = cover.covering_map(point(1, -1))
    assert F(5283185307179586476925286766559005768394, 10**39) in theta  # 2 pi - 1


def test_covering_map_requires_standard():
    with pytest.raises(NotStandard):
        cover.covering_map(point(ONE + T, lcf.zero()))
    with pytest.raises(NotStandard):
        cover.covering_map(point(lcf.sqrt(lcf.from_rational(2), 4, 64), lcf.zero()))


def test_covering_map_local_isometry():
    # nearby standard points with |dzeta| < pi: cover distance = planar chord
    rng = Random(53)
    for _ in range(10):
        r1, r2 = (F(rng.randint(5, 30), 10) for _ in range(2))
        z1 = F(rng.randint(-10, 10), 10)
        z2 = z1 + F(rng.randint(-10, 10), 10)
        d = cover.cover_distance(point(r1, z1), point(r2, z2))
        _, th1 = cover.covering_map(point(r1, z1))
        _, th2 = cover.covering_map(point(r2, z2))
        # chord in the plane from polar coordinates, via the same enclosures
        dz = lcf.sub(lcf.from_rational(z1), lcf.from_rational(z2))
        chord_sq = lcf.add(
            lcf.add(lcf.from_rational(r1 * r1), lcf.from_rational(r2 * r2)),
            lcf.scale(lcf.cos_enclosure(dz), -2 * r1 * r2),
        )
        if chord_sq.is_zero:
            assert d.is_zero
            continue
        chord = lcf.sqrt(chord_sq)
        assert d.coefficient(0).intersect(chord.coefficient(0)) is not None

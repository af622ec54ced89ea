"""The metric universal cover of the punctured plane.

Points carry polar-style coordinates (r, zeta) with r > 0 and zeta an
*unwrapped* angle ranging over all reals (not mod 2*pi); the length element
is dr^2 + r^2 dzeta^2.  Unrolling makes the space simply connected but
incomplete: the puncture at r = 0 is missing, and winding far in zeta is
never free.

Geodesic distance has two regimes.  When the angle gap is below pi the
shortest path is the straight chord of the developed cone,
sqrt(r1^2 + r2^2 - 2 r1 r2 cos(dzeta)); at or beyond pi every path must
either wrap around or dive toward the puncture, and the infimal length is
r1 + r2 (attained only in the completion, through the restored origin).

With coordinates from the truncated-series field this module also decides,
per point, whether it is infinitely near a standard point, near the restored
origin, at a finite distance but not approachable from any standard point,
or infinitely far away - together with explicit certificates for the
inapproachable case (a rectangle whose boundary every escaping path must
cross) and for the origin-halo case (a three-leg path of infinitesimal
length).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import lcf
from .errors import (
    BranchIndeterminate,
    IndeterminateComparison,
    InvalidPoint,
    NotApplicable,
    NotFinite,
    NotStandard,
    PreconditionViolated,
)
from .intervals import Interval, two_pi_interval
from .lcf import (
    DEFAULT_ORDER,
    DEFAULT_PRECISION,
    LeviCivitaNumber,
    Magnitude,
    Ordering,
)


@dataclass(frozen=True)
class CoverPoint:
    """A point (r, zeta) of the cover; r > 0 must be decidable."""

    r: LeviCivitaNumber
    zeta: LeviCivitaNumber

    def __post_init__(self):
        try:
            positive = lcf.sign(self.r) > 0
        except IndeterminateComparison as exc:
            raise InvalidPoint(f"radial coordinate of unknown sign: {exc}") from None
        if not positive:
            raise InvalidPoint("radial coordinate must be positive")

    def __str__(self) -> str:
        from .parsing import format_point

        return format_point((self.r, self.zeta))


def point(r, zeta) -> CoverPoint:
    """Convenience constructor accepting rationals or numbers."""
    to_num = lambda v: v if isinstance(v, LeviCivitaNumber) else lcf.from_rational(v)
    return CoverPoint(to_num(r), to_num(zeta))


class Verdict(Enum):
    NEARSTANDARD = "nearstandard"
    ORIGIN_HALO = "origin_halo"
    FINITE_INAPPROACHABLE = "finite_inapproachable"
    OUTSIDE_GALAXY = "outside_galaxy"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CoverClassification:
    verdict: Verdict
    #: (st r, st zeta) when the verdict is NEARSTANDARD, else None.
    standard_point: tuple[Interval, Interval] | None = None

    def __str__(self) -> str:
        if self.verdict is Verdict.NEARSTANDARD:
            r, z = self.standard_point
            return f"nearstandard ({r}, {z})"
        return self.verdict.value


@dataclass(frozen=True)
class SeparationCertificate:
    """A rectangle around `center` that every path to a finite-angle point
    must exit, plus the resulting metric-ball radius.

    Inside [r_lo, r_hi] x [zeta - halfwidth, zeta + halfwidth] the length
    element dominates dr^2 + r_lo^2 dzeta^2, so exiting costs at least
    min(radial margins, r_lo * halfwidth) >= ball_radius.
    """

    center: CoverPoint
    r_lo: Fraction
    r_hi: Fraction
    zeta_halfwidth: Fraction
    ball_radius: Fraction


# ---------------------------------------------------------------------------
# distance
# ---------------------------------------------------------------------------

def cover_distance(
    a: CoverPoint,
    b: CoverPoint,
    order=DEFAULT_ORDER,
    precision: int = DEFAULT_PRECISION,
) -> LeviCivitaNumber:
    """Geodesic distance on the cover (infimum metric).

    Chord branch for |dzeta| < pi, r1 + r2 at or beyond pi.  Raises
    BranchIndeterminate when |dzeta| vs. pi cannot be decided at this
    precision (which includes any input sitting exactly on pi).
    """
    dz = lcf.sub(a.zeta, b.zeta)
    pi_num = lcf.pi_number(precision)
    try:
        above = lcf.compare(dz, pi_num)
        below = lcf.compare(dz, lcf.neg(pi_num))
    except IndeterminateComparison as exc:
        raise BranchIndeterminate(
            f"angle gap vs pi undecidable at precision {precision}: {exc}"
        ) from None
    if above is Ordering.GT or below is Ordering.LT:
        return lcf.add(a.r, b.r)
    return _chord_distance(a, b, dz, order, precision)


def _chord_distance(a, b, dz, order, precision) -> LeviCivitaNumber:
    cos_dz = lcf.cos_enclosure(dz, order, precision)
    cross = lcf.scale(lcf.mul(lcf.mul(a.r, b.r), cos_dz), -2)
    squared = lcf.add(lcf.add(lcf.mul(a.r, a.r), lcf.mul(b.r, b.r)), cross)
    if squared.is_zero:
        return lcf.zero()
    return lcf.sqrt(squared, order, precision)


def completion_distance(
    a: CoverPoint | None,
    b: CoverPoint | None,
    order=DEFAULT_ORDER,
    precision: int = DEFAULT_PRECISION,
) -> LeviCivitaNumber:
    """Distance on the completion: the cover plus a restored origin (None)."""
    if a is None and b is None:
        return lcf.zero()
    if a is None:
        return b.r
    if b is None:
        return a.r
    return cover_distance(a, b, order, precision)


# ---------------------------------------------------------------------------
# bounds and certificates
# ---------------------------------------------------------------------------

def three_leg_upper_bound(
    a: CoverPoint, eps: LeviCivitaNumber, order=DEFAULT_ORDER
) -> LeviCivitaNumber:
    """Exact length of the path (1, z) -> (1/z^2, z) -> (1/z^2, 0) -> (eps, 0).

    For infinite z this is (1 - 1/z^2) + (1/z^2) z + |1/z^2 - eps|, an upper
    bound on the distance from (1, z) to (eps, 0) with standard part 1.
    Requires r = 1 exactly, z infinite, eps a positive infinitesimal.
    """
    if lcf.compare(a.r, lcf.one()) is not Ordering.EQ:
        raise PreconditionViolated("path chain is stated for radial coordinate 1")
    if lcf.classify_magnitude(a.zeta) is not Magnitude.INFINITE:
        raise PreconditionViolated("angle coordinate must be infinite")
    if lcf.classify_magnitude(eps) is not Magnitude.INFINITESIMAL or lcf.sign(eps) <= 0:
        raise PreconditionViolated("eps must be a positive infinitesimal")
    inv_z2 = lcf.inverse(lcf.mul(a.zeta, a.zeta), order)
    leg1 = lcf.sub(lcf.one(), inv_z2)          # radial descent to r = 1/z^2
    leg2 = lcf.mul(inv_z2, lcf.abs_value(a.zeta))  # unwind the angle down at tiny r
    leg3 = lcf.abs_value(lcf.sub(inv_z2, eps))     # radial hop to (eps, 0)
    return lcf.add(lcf.add(leg1, leg2), leg3)


def separation_certificate(center: CoverPoint) -> SeparationCertificate:
    """Rectangle certificate that `center` is far from every finite-angle point.

    Applicable when st(center.r) is certainly positive (appreciable r) and
    center.zeta is infinite.  With rho the lower bound of st(center.r), any
    path leaving [rho/2, 2*hi] x [zeta +- 1] pays at least rho/2: crossing an
    angular side costs >= (rho/2)*1, a radial side >= the radial margin.
    """
    if lcf.classify_magnitude(center.zeta) is not Magnitude.INFINITE:
        raise NotApplicable("certificate requires an infinite angle coordinate")
    if lcf.classify_magnitude(center.r) is not Magnitude.APPRECIABLE:
        raise NotApplicable("certificate requires an appreciable radial coordinate")
    st_r = lcf.standard_part(center.r)
    rho = st_r.lo
    if rho <= 0:
        raise NotApplicable("radial standard part not certainly positive")
    return SeparationCertificate(
        center=center,
        r_lo=rho / 2,
        r_hi=2 * st_r.hi,
        zeta_halfwidth=Fraction(1),
        ball_radius=rho / 2,
    )


def inapproachability_lower_bound(center: CoverPoint, q: CoverPoint) -> Fraction:
    """Certified lower bound on the distance from `center` to any finite-angle
    point `q`, via the separation rectangle.  Independent of `q` beyond the
    finiteness of its angle."""
    certificate = separation_certificate(center)
    if lcf.classify_magnitude(q.zeta) not in (
        Magnitude.INFINITESIMAL,
        Magnitude.APPRECIABLE,
    ):
        raise NotApplicable("witness point must have a finite angle coordinate")
    return certificate.ball_radius


def origin_path_bound(a: CoverPoint) -> LeviCivitaNumber:
    """Length bound for reaching an origin representative from `a`:
    descend to r'' = t^m, unwind the angle there, for m large enough that
    r''*|zeta| is infinitesimal.  Infinitesimal whenever a.r is."""
    lead_r = a.r.lead_exponent
    lead_z = a.zeta.lead_exponent
    m = max(Fraction(0), lead_r, -(lead_z if lead_z is not None else Fraction(0))) + 1
    r_mid = lcf.t_power(m)
    if lcf.sign(lcf.sub(a.r, r_mid)) <= 0:
        raise NotApplicable("intermediate radius not below the starting radius")
    descent = lcf.sub(a.r, r_mid)
    swing = lcf.mul(r_mid, lcf.magnitude_bound(a.zeta))
    return lcf.add(descent, swing)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def classify_point(a: CoverPoint) -> CoverClassification:
    """Locate `a` relative to the standard cover, its completion, and beyond.

    infinite r        -> outside_galaxy
    infinitesimal r   -> origin_halo (a short path to (eps, 0) always exists)
    appreciable r     -> nearstandard for finite zeta, else finite_inapproachable
    """
    mr = lcf.classify_magnitude(a.r)
    if mr is Magnitude.INFINITE:
        return CoverClassification(Verdict.OUTSIDE_GALAXY)
    if mr is Magnitude.INFINITESIMAL:
        return CoverClassification(Verdict.ORIGIN_HALO)
    if mr is Magnitude.APPRECIABLE:
        mz = lcf.classify_magnitude(a.zeta)
        if mz in (Magnitude.INFINITESIMAL, Magnitude.APPRECIABLE):
            return CoverClassification(
                Verdict.NEARSTANDARD,
                (lcf.standard_part(a.r), lcf.standard_part(a.zeta)),
            )
        if mz is Magnitude.INFINITE:
            return CoverClassification(Verdict.FINITE_INAPPROACHABLE)
    return CoverClassification(Verdict.UNKNOWN)


# ---------------------------------------------------------------------------
# non-compactness witness and covering map
# ---------------------------------------------------------------------------

def separated_net(n: int) -> list[CoverPoint]:
    """n points (1, 4k) on the unit circle of the completion, pairwise
    distance exactly 2 (each gap 4 > pi forces the through-origin branch).
    An arbitrarily large 2-separated set in a closed ball: the ball is not
    totally bounded, so the completion is not Heine-Borel."""
    if n < 2:
        raise ValueError("a separated net needs at least 2 points")
    return [point(1, 4 * k) for k in range(n)]


def covering_map(
    a: CoverPoint, precision: int = DEFAULT_PRECISION
) -> tuple[Fraction, Interval]:
    """Project to the punctured plane: (r, zeta) -> (r, zeta mod 2*pi).

    Requires exact standard coordinates; the reduced angle is an enclosure
    in [0, 2*pi) since the reduction subtracts an enclosure of 2*pi*k.
    """
    r = _exact_standard_value(a.r)
    z = _exact_standard_value(a.zeta)
    working = precision
    while True:
        two_pi = two_pi_interval(working)
        k = _floor_quotient(z, two_pi)
        if k is not None:
            theta = Interval.point(z) - two_pi.scale(k)
            return r, theta
        working *= 2
        if working > 1 << 20:  # pragma: no cover - z rational, always decidable
            raise NotStandard("angle reduction did not converge")


def _exact_standard_value(x: LeviCivitaNumber) -> Fraction:
    if not x.is_exact or any(q != 0 for q, _ in x.terms):
        raise NotStandard("exact standard coordinates required")
    return x.coefficient(0).lo


def _floor_quotient(z: Fraction, divisor: Interval) -> int | None:
    """The integer k with divisor*k <= z < divisor*(k+1), if certifiable."""
    guess = int(z / divisor.midpoint)
    for k in (guess - 1, guess, guess + 1):
        lo_ok = (divisor.hi * k <= z) if k >= 0 else (divisor.lo * k <= z)
        up = k + 1
        hi_ok = (z < divisor.lo * up) if up >= 0 else (z < divisor.hi * up)
        if lo_ok and hi_ok:
            return k
    return None

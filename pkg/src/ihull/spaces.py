"""The registered metric spaces and their decision oracles.

Four spaces exercise every branch of the harnesses:

============== ========= ============ ==================================
space           complete  completion   role
                          Heine-Borel
============== ========= ============ ==================================
rationals-line  no        yes          incomplete, hull = completion
euclidean-plane yes       yes          complete and Heine-Borel
cover           no        no           hull strictly larger than completion
cover-completion yes      no           complete but not Heine-Borel
============== ========= ============ ==================================

Soundness of the oracles:

* rationals-line: every finite hyperrational is approachable (rationals are
  dense at standard scales); a point is nearstandard iff its standard part
  is an exact rational, since an interval-valued standard part arises only
  from enclosures of irrationals (sqrt, cos), which no rational matches.
* euclidean-plane: every finite point is approachable and nearstandard (its
  standard part, coordinatewise, is the standard point).
* cover / cover-completion: delegated to the cover classification; the
  inapproachable verdict is backed by the separation-rectangle certificate,
  the origin-halo verdict by the explicit short path to (eps, 0).
"""

from __future__ import annotations

from . import cover as cover_mod
from . import lcf
from .cover import CoverPoint, Verdict, classify_point
from .errors import NotFinite
from .hull import ExtendedPoint, SpaceDescriptor
from .lcf import (
    DEFAULT_ORDER,
    DEFAULT_PRECISION,
    LeviCivitaNumber,
    Magnitude,
    Ternary,
)

SPACE_NAMES = ("rationals-line", "euclidean-plane", "cover", "cover-completion")


def get_space(
    name: str, order=DEFAULT_ORDER, precision: int = DEFAULT_PRECISION
) -> SpaceDescriptor:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(
            f"unknown space {name!r}; registered: {', '.join(SPACE_NAMES)}"
        ) from None
    return builder(order, precision)


# ---------------------------------------------------------------------------
# rationals-line
# ---------------------------------------------------------------------------

def _finite_ternary(x: LeviCivitaNumber) -> Ternary:
    if lcf.is_surely_finite(x):
        return Ternary.TRUE
    if lcf.classify_magnitude(x) is Magnitude.INFINITE:
        return Ternary.FALSE
    return Ternary.UNKNOWN


def _rationals_line(order, precision) -> SpaceDescriptor:
    def distance(a: ExtendedPoint, b: ExtendedPoint) -> LeviCivitaNumber:
        return lcf.abs_value(lcf.sub(a.coords[0], b.coords[0]))

    def approachable(a: ExtendedPoint) -> Ternary:
        # finite => approachable: the completion of the rationals is the
        # whole real line, so standard rationals sit arbitrarily close.
        return _finite_ternary(a.coords[0])

    def nearstandard(a: ExtendedPoint) -> ExtendedPoint | None:
        try:
            st = lcf.standard_part(a.coords[0])
        except NotFinite:
            return None
        if not st.is_exact:
            return None  # irrational-valued enclosure: no rational matches
        return ExtendedPoint("rationals-line", (lcf.from_rational(st.lo),))

    return SpaceDescriptor(
        space_id="rationals-line",
        dimension=1,
        basepoint=ExtendedPoint("rationals-line", (lcf.zero(),)),
        distance=distance,
        approachable=approachable,
        nearstandard=nearstandard,
        is_complete=False,
        completion_is_HB=True,
    )


# ---------------------------------------------------------------------------
# euclidean-plane
# ---------------------------------------------------------------------------

def _euclidean_plane(order, precision) -> SpaceDescriptor:
    def distance(a: ExtendedPoint, b: ExtendedPoint) -> LeviCivitaNumber:
        dx = lcf.sub(a.coords[0], b.coords[0])
        dy = lcf.sub(a.coords[1], b.coords[1])
        squared = lcf.add(lcf.mul(dx, dx), lcf.mul(dy, dy))
        if squared.is_zero:
            return lcf.zero()
        return lcf.sqrt(squared, order, precision)

    def approachable(a: ExtendedPoint) -> Ternary:
        verdicts = [_finite_ternary(c) for c in a.coords]
        if Ternary.FALSE in verdicts:
            return Ternary.FALSE
        if Ternary.UNKNOWN in verdicts:
            return Ternary.UNKNOWN
        return Ternary.TRUE

    def nearstandard(a: ExtendedPoint) -> ExtendedPoint | None:
        # The plane is complete: the coordinatewise standard part is the
        # standard point, exact or not.
        try:
            parts = [lcf.standard_part(c) for c in a.coords]
        except NotFinite:
            return None
        return ExtendedPoint(
            "euclidean-plane", tuple(lcf.from_interval(p) for p in parts)
        )

    return SpaceDescriptor(
        space_id="euclidean-plane",
        dimension=2,
        basepoint=ExtendedPoint("euclidean-plane", (lcf.zero(), lcf.zero())),
        distance=distance,
        approachable=approachable,
        nearstandard=nearstandard,
        is_complete=True,
        completion_is_HB=True,
    )


# ---------------------------------------------------------------------------
# cover and its completion
# ---------------------------------------------------------------------------

def _as_cover_point(a: ExtendedPoint) -> CoverPoint:
    return CoverPoint(a.coords[0], a.coords[1])


def _as_completion_point(a: ExtendedPoint) -> CoverPoint | None:
    r = a.coords[0]
    if r.is_zero:
        return None  # the restored origin
    return CoverPoint(r, a.coords[1])


def _cover(order, precision) -> SpaceDescriptor:
    def distance(a: ExtendedPoint, b: ExtendedPoint) -> LeviCivitaNumber:
        return cover_mod.cover_distance(
            _as_cover_point(a), _as_cover_point(b), order, precision
        )

    def approachable(a: ExtendedPoint) -> Ternary:
        verdict = classify_point(_as_cover_point(a)).verdict
        if verdict in (Verdict.NEARSTANDARD, Verdict.ORIGIN_HALO):
            return Ternary.TRUE
        if verdict in (Verdict.FINITE_INAPPROACHABLE, Verdict.OUTSIDE_GALAXY):
            return Ternary.FALSE
        return Ternary.UNKNOWN

    def nearstandard(a: ExtendedPoint) -> ExtendedPoint | None:
        classified = classify_point(_as_cover_point(a))
        if classified.verdict is not Verdict.NEARSTANDARD:
            return None  # the origin halo has no standard point *in* the cover
        st_r, st_z = classified.standard_point
        return ExtendedPoint(
            "cover", (lcf.from_interval(st_r), lcf.from_interval(st_z))
        )

    return SpaceDescriptor(
        space_id="cover",
        dimension=2,
        basepoint=ExtendedPoint("cover", (lcf.one(), lcf.zero())),
        distance=distance,
        approachable=approachable,
        nearstandard=nearstandard,
        is_complete=False,
        completion_is_HB=False,
    )


def _cover_completion(order, precision) -> SpaceDescriptor:
    def distance(a: ExtendedPoint, b: ExtendedPoint) -> LeviCivitaNumber:
        return cover_mod.completion_distance(
            _as_completion_point(a), _as_completion_point(b), order, precision
        )

    def _classify(a: ExtendedPoint):
        p = _as_completion_point(a)
        if p is None:
            return None
        return classify_point(p)

    def approachable(a: ExtendedPoint) -> Ternary:
        classified = _classify(a)
        if classified is None:  # the origin itself
            return Ternary.TRUE
        if classified.verdict in (Verdict.NEARSTANDARD, Verdict.ORIGIN_HALO):
            return Ternary.TRUE
        if classified.verdict in (Verdict.FINITE_INAPPROACHABLE, Verdict.OUTSIDE_GALAXY):
            return Ternary.FALSE
        return Ternary.UNKNOWN

    def nearstandard(a: ExtendedPoint) -> ExtendedPoint | None:
        classified = _classify(a)
        origin = ExtendedPoint("cover-completion", (lcf.zero(), lcf.zero()))
        if classified is None:
            return origin
        if classified.verdict is Verdict.ORIGIN_HALO:
            return origin  # the restored origin is a standard completion point
        if classified.verdict is Verdict.NEARSTANDARD:
            st_r, st_z = classified.standard_point
            return ExtendedPoint(
                "cover-completion",
                (lcf.from_interval(st_r), lcf.from_interval(st_z)),
            )
        return None

    return SpaceDescriptor(
        space_id="cover-completion",
        dimension=2,
        basepoint=ExtendedPoint("cover-completion", (lcf.one(), lcf.zero())),
        distance=distance,
        approachable=approachable,
        nearstandard=nearstandard,
        is_complete=True,
        completion_is_HB=False,
    )


_BUILDERS = {
    "rationals-line": _rationals_line,
    "euclidean-plane": _euclidean_plane,
    "cover": _cover,
    "cover-completion": _cover_completion,
}


# ---------------------------------------------------------------------------
# named witness probes
# ---------------------------------------------------------------------------

def incompleteness_witness(
    space: SpaceDescriptor, precision: int = DEFAULT_PRECISION
) -> ExtendedPoint | None:
    """An approachable probe with no standard point infinitely close,
    for the incomplete spaces."""
    if space.space_id == "rationals-line":
        root2 = lcf.sqrt(lcf.from_rational(2), DEFAULT_ORDER, precision)
        return space.point(lcf.add(root2, lcf.T))
    if space.space_id == "cover":
        return space.point(lcf.T, lcf.zero())
    return None


def inapproachability_witness(space: SpaceDescriptor) -> ExtendedPoint | None:
    """A finite probe with no standard points nearby at standard scales,
    for the spaces whose completion is not Heine-Borel."""
    if space.space_id in ("cover", "cover-completion"):
        return space.point(lcf.one(), lcf.T_INVERSE)
    return None

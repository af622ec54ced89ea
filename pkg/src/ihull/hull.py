"""Halos, galaxies, and hull distances over registered metric spaces.

A registered space supplies its distance on extended points (coordinates in
the truncated-series field), a basepoint, and two oracles: approachability
(are there standard points arbitrarily close, at standard scales?) and
nearstandardness (a standard point infinitely close, if any).  On top of
those this module builds the hull: points at finite distance from the
basepoint, identified when their distance is infinitesimal, with the
distance between classes the standard part of the extended distance.

The two theorem harnesses check, on finite probe sets:

* every approachable point is nearstandard  <=>  the space is complete;
* every finite point is approachable  <=>  the completion is Heine-Borel
  <=>  the completion already fills the hull.

Probe sets make these property tests, not proofs; unknown oracle verdicts
are reported, never silently counted as pass or fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import lcf
from .errors import NotFinite, SpaceMismatch
from .intervals import Interval
from .lcf import IndeterminateComparison, LeviCivitaNumber, Magnitude, Ordering, Ternary


@dataclass(frozen=True)
class ExtendedPoint:
    """A point of a space's extension: one series-valued coordinate per axis."""

    space_id: str
    coords: tuple[LeviCivitaNumber, ...]

    def __str__(self) -> str:
        from .parsing import format_number, format_point

        if len(self.coords) == 1:
            return format_number(self.coords[0])
        return format_point(self.coords)


@dataclass(frozen=True)
class HaloRef:
    """A hull point, named by one representative of its halo."""

    representative: ExtendedPoint

    @property
    def space_id(self) -> str:
        return self.representative.space_id


@dataclass(frozen=True)
class SpaceDescriptor:
    """A registered metric space with its extension and decision oracles.

    `distance` must be symmetric, nonnegative, and satisfy the triangle
    inequality; the test suite probes these on random triples rather than
    trusting registrations.  The oracles are space-specific: approachability
    has no generic decision procedure.
    """

    space_id: str
    dimension: int
    basepoint: ExtendedPoint
    distance: Callable[[ExtendedPoint, ExtendedPoint], LeviCivitaNumber]
    approachable: Callable[[ExtendedPoint], Ternary]
    nearstandard: Callable[[ExtendedPoint], ExtendedPoint | None]
    is_complete: bool
    completion_is_HB: bool

    def point(self, *coords) -> ExtendedPoint:
        nums = tuple(
            c if isinstance(c, LeviCivitaNumber) else lcf.from_rational(c)
            for c in coords
        )
        if len(nums) != self.dimension:
            raise SpaceMismatch(
                f"{self.space_id} needs {self.dimension} coordinates, got {len(nums)}"
            )
        return ExtendedPoint(self.space_id, nums)


def _check_membership(s: SpaceDescriptor, *points: ExtendedPoint) -> None:
    for p in points:
        if p.space_id != s.space_id:
            raise SpaceMismatch(f"point of {p.space_id!r} used with {s.space_id!r}")


# ---------------------------------------------------------------------------
# point-level operations
# ---------------------------------------------------------------------------

def extended_distance(
    s: SpaceDescriptor, a: ExtendedPoint, b: ExtendedPoint
) -> LeviCivitaNumber:
    """The space's distance on extended points (>= 0 by registration)."""
    _check_membership(s, a, b)
    return s.distance(a, b)


def in_galaxy(s: SpaceDescriptor, a: ExtendedPoint) -> Ternary:
    """Is `a` at finite distance from the basepoint?"""
    d = extended_distance(s, a, s.basepoint)
    if lcf.is_surely_finite(d):
        return Ternary.TRUE
    if lcf.classify_magnitude(d) is Magnitude.INFINITE:
        return Ternary.FALSE
    return Ternary.UNKNOWN


def halo(s: SpaceDescriptor, a: ExtendedPoint) -> HaloRef:
    _check_membership(s, a)
    return HaloRef(a)


def same_halo(s: SpaceDescriptor, x: HaloRef, y: HaloRef) -> Ternary:
    """Whether the representatives are infinitely close."""
    d = extended_distance(s, x.representative, y.representative)
    m = lcf.classify_magnitude(d)
    if m is Magnitude.INFINITESIMAL:
        return Ternary.TRUE
    if m is Magnitude.UNKNOWN:
        return Ternary.UNKNOWN
    return Ternary.FALSE


def hull_distance(s: SpaceDescriptor, x: HaloRef, y: HaloRef) -> Interval:
    """Distance between hull points: st of the extended distance.

    Well-defined on halos: replacing a representative by an infinitely close
    point moves the extended distance by an infinitesimal, which st ignores.
    """
    for ref in (x, y):
        if in_galaxy(s, ref.representative) is Ternary.FALSE:
            raise NotFinite(f"representative {ref.representative} outside the galaxy")
    d = extended_distance(s, x.representative, y.representative)
    return lcf.standard_part(d)


def is_approachable(s: SpaceDescriptor, a: ExtendedPoint) -> Ternary:
    _check_membership(s, a)
    return s.approachable(a)


def is_nearstandard(s: SpaceDescriptor, a: ExtendedPoint) -> ExtendedPoint | None:
    _check_membership(s, a)
    return s.nearstandard(a)


def in_closed_ball(s: SpaceDescriptor, a: ExtendedPoint, n) -> Ternary:
    """Is d(a, basepoint) <= n?  (The transferred closed ball of radius n.)"""
    d = extended_distance(s, a, s.basepoint)
    try:
        verdict = lcf.compare(d, lcf.from_rational(Fraction(n)))
    except IndeterminateComparison:
        return Ternary.UNKNOWN
    return Ternary.FALSE if verdict is Ordering.GT else Ternary.TRUE


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class ProbeRow:
    probe: str
    finite: str
    approachable: str
    nearstandard: str | None

    def to_dict(self) -> dict:
        return {
            "probe": self.probe,
            "finite": self.finite,
            "approachable": self.approachable,
            "nearstandard": self.nearstandard,
        }


@dataclass
class Clause:
    name: str
    holds: bool | None
    note: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "note": self.note}


@dataclass
class HarnessReport:
    space_id: str
    claim: str
    clauses: list[Clause] = field(default_factory=list)
    probes: list[ProbeRow] = field(default_factory=list)
    passed: bool = False
    unknown_count: int = 0

    def to_dict(self) -> dict:
        return {
            "space": self.space_id,
            "claim": self.claim,
            "clauses": [c.to_dict() for c in self.clauses],
            "probes": [p.to_dict() for p in self.probes],
            "passed": self.passed,
            "unknown_count": self.unknown_count,
        }

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = f", {self.unknown_count} unknown" if self.unknown_count else ""
        return f"[{status}] {self.space_id}: {self.claim}{extra}"


def _probe_rows(
    s: SpaceDescriptor, probes: list[ExtendedPoint]
) -> tuple[list[ProbeRow], list[tuple[Ternary, Ternary, ExtendedPoint | None]], int]:
    rows = []
    verdicts = []
    unknown = 0
    for p in probes:
        fin = in_galaxy(s, p)
        app = is_approachable(s, p)
        near = is_nearstandard(s, p)
        if Ternary.UNKNOWN in (fin, app):
            unknown += 1
        rows.append(
            ProbeRow(str(p), fin.value, app.value, str(near) if near else None)
        )
        verdicts.append((fin, app, near))
    return rows, verdicts, unknown


def check_proposition_a(
    s: SpaceDescriptor, probes: list[ExtendedPoint]
) -> HarnessReport:
    """Completeness <=> every approachable probe is nearstandard.

    Complete spaces must show no approachable-but-not-nearstandard probe;
    incomplete spaces must exhibit at least one (the supplied witness).
    """
    rows, verdicts, unknown = _probe_rows(s, probes)
    gaps = [
        i
        for i, (_, app, near) in enumerate(verdicts)
        if app is Ternary.TRUE and near is None
    ]
    if s.is_complete:
        passed = not gaps
        note = (
            "no approachable probe lacks a standard point"
            if passed
            else f"approachable but not nearstandard: {rows[gaps[0]].probe}"
        )
        clauses = [
            Clause("space is complete", True, "registered metadata"),
            Clause("every approachable probe is nearstandard", passed, note),
        ]
    else:
        passed = bool(gaps)
        note = (
            f"witness: {rows[gaps[0]].probe}"
            if gaps
            else "expected an approachable, non-nearstandard witness probe"
        )
        clauses = [
            Clause("space is incomplete", True, "registered metadata"),
            Clause("some approachable probe is not nearstandard", passed, note),
        ]
    return HarnessReport(
        space_id=s.space_id,
        claim="approachable => nearstandard iff complete",
        clauses=clauses,
        probes=rows,
        passed=passed,
        unknown_count=unknown,
    )


def check_theorem_b(s: SpaceDescriptor, probes: list[ExtendedPoint]) -> HarnessReport:
    """Heine-Borel completion <=> every finite probe approachable <=> the
    completion fills the hull.

    The three clauses are reported together and can never be certified in
    contradictory combinations: the probe evidence fixes one boolean.
    """
    rows, verdicts, unknown = _probe_rows(s, probes)
    witnesses = [
        i
        for i, (fin, app, _) in enumerate(verdicts)
        if fin is Ternary.TRUE and app is Ternary.FALSE
    ]
    all_approachable = not witnesses
    if s.completion_is_HB:
        passed = all_approachable
        note = (
            "all finite probes approachable"
            if passed
            else f"finite inapproachable probe: {rows[witnesses[0]].probe}"
        )
    else:
        passed = bool(witnesses)
        note = (
            f"finite inapproachable witness: {rows[witnesses[0]].probe}"
            if witnesses
            else "expected a finite inapproachable witness probe"
        )
    clauses = [
        Clause(
            "every finite probe is approachable",
            all_approachable,
            note,
        ),
        Clause(
            "completion is Heine-Borel",
            s.completion_is_HB,
            "registered metadata",
        ),
        Clause(
            "completion fills the hull (no extra points)",
            all_approachable,
            "equivalent to the first clause on probe evidence",
        ),
    ]
    return HarnessReport(
        space_id=s.space_id,
        claim="finite => approachable iff completion Heine-Borel",
        clauses=clauses,
        probes=rows,
        passed=passed,
        unknown_count=unknown,
    )

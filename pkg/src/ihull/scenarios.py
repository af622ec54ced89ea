"""Named verification scenarios behind the CLI `verify` command.

Each scenario returns ``{"scenario": name, "checks": [{"name", "verdict",
"details"}]}`` with verdict one of pass / fail / unknown.  Checks are exact
where the arithmetic is exact; probe-based checks are deterministic given
the seed.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from . import cover, hull, lcf, probes, spaces
from .errors import IndeterminateComparison
from .lcf import (
    DEFAULT_ORDER,
    DEFAULT_PRECISION,
    LeviCivitaNumber,
    Magnitude,
    Ordering,
    Ternary,
)

SCENARIO_NAMES = (
    "theorem-1.1",
    "cover-inapproachable",
    "proposition-a",
    "theorem-b",
    "hb-failure",
)


def run_scenario(
    name: str,
    seed: int = 0,
    order=DEFAULT_ORDER,
    precision: int = DEFAULT_PRECISION,
) -> dict:
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise KeyError(
            f"unknown scenario {name!r}; available: {', '.join(SCENARIO_NAMES)}"
        ) from None
    return {"scenario": name, "checks": runner(seed, order, precision)}


def _check(name: str, passed: bool, details: str) -> dict:
    return {"name": name, "verdict": "pass" if passed else "fail", "details": details}


def _unknown(name: str, details: str) -> dict:
    return {"name": name, "verdict": "unknown", "details": details}


# ---------------------------------------------------------------------------
# the standard-part morphism and its kernel
# ---------------------------------------------------------------------------

def _standard_part_morphism(seed: int, order, precision: int) -> list[dict]:
    rng = Random(seed)
    pairs = [(probes.random_finite(rng), probes.random_finite(rng)) for _ in range(500)]
    add_bad = mul_bad = 0
    for a, b in pairs:
        if lcf.standard_part(lcf.add(a, b)) != lcf.standard_part(a) + lcf.standard_part(b):
            add_bad += 1
        if lcf.standard_part(lcf.mul(a, b)) != lcf.standard_part(a) * lcf.standard_part(b):
            mul_bad += 1
    kernel_bad = 0
    for value in [v for pair in pairs for v in pair]:
        zero_part = lcf.standard_part(value).is_zero
        infinitesimal = lcf.classify_magnitude(value) is Magnitude.INFINITESIMAL
        if zero_part != infinitesimal:
            kernel_bad += 1
    approx_bad = 0
    for _ in range(100):
        y = probes.random_finite(rng)
        try:
            q = lcf.approximate_within(y, lcf.T)
        except IndeterminateComparison:
            approx_bad += 1
            continue
        if not q.is_exact or lcf.halo_equal(q, y) is not Ternary.TRUE:
            approx_bad += 1
    return [
        _check(
            "standard-part-additive",
            add_bad == 0,
            f"exact equality on {len(pairs)} random pairs ({add_bad} failures)",
        ),
        _check(
            "standard-part-multiplicative",
            mul_bad == 0,
            f"exact equality on {len(pairs)} random pairs ({mul_bad} failures)",
        ),
        _check(
            "kernel-is-infinitesimals",
            kernel_bad == 0,
            f"st(a) = 0 iff a infinitesimal on {2 * len(pairs)} values "
            f"({kernel_bad} failures)",
        ),
        _check(
            "rational-approximation",
            approx_bad == 0,
            f"q within t of y, q ~ y, for 100 random finite y ({approx_bad} failures)",
        ),
    ]


# ---------------------------------------------------------------------------
# the inapproachable hull point of the cover
# ---------------------------------------------------------------------------

def _cover_inapproachable(seed: int, order, precision: int) -> list[dict]:
    del seed
    center = cover.point(lcf.one(), lcf.T_INVERSE)
    origin_rep = cover.point(lcf.T, lcf.zero())
    distance = cover.cover_distance(center, origin_rep, order, precision)
    st = lcf.standard_part(distance)
    expected_bound = LeviCivitaNumber(
        ((Fraction(0), 1), (Fraction(1), 2), (Fraction(2), -2))
    )
    bound = cover.three_leg_upper_bound(center, lcf.T, order)
    checks = [
        _check(
            "distance-standard-part-one",
            st.is_exact and st.lo == 1,
            f"st d((1, t^-1), (t, 0)) = {st} (exact arithmetic)",
        ),
        _check(
            "three-leg-bound-exact",
            bound == expected_bound,
            f"path chain evaluates to {bound}",
        ),
        _check(
            "bound-dominates-distance",
            lcf.compare(distance, bound) is Ordering.LT,
            f"distance {distance} < bound {bound}",
        ),
        _check(
            "separation-ball-half",
            cover.inapproachability_lower_bound(center, cover.point(1, 0))
            == Fraction(1, 2)
            and cover.inapproachability_lower_bound(center, cover.point(7, 3))
            == Fraction(1, 2),
            "rectangle certificate gives radius 1/2 for any finite-angle point",
        ),
        _check(
            "classification",
            cover.classify_point(center).verdict is cover.Verdict.FINITE_INAPPROACHABLE,
            f"(1, t^-1) classifies as {cover.classify_point(center)}",
        ),
    ]
    space = spaces.get_space("cover", order, precision)
    galaxy = hull.in_galaxy(space, space.point(center.r, center.zeta))
    checks.append(
        _check(
            "in-hull",
            galaxy is Ternary.TRUE,
            "(1, t^-1) is at finite distance from the basepoint",
        )
    )
    return checks


# ---------------------------------------------------------------------------
# harness scenarios
# ---------------------------------------------------------------------------

def _proposition_a(seed: int, order, precision: int) -> list[dict]:
    rng = Random(seed)
    checks = []
    for name, count in (("euclidean-plane", 50), ("rationals-line", 50), ("cover", 50)):
        space = spaces.get_space(name, order, precision)
        probe_list = probes.finite_probes(space, rng, count)
        witness = spaces.incompleteness_witness(space, precision)
        if witness is not None:
            probe_list.append(witness)
        report = hull.check_proposition_a(space, probe_list)
        details = "; ".join(f"{c.name}: {c.note}" for c in report.clauses)
        if report.passed and report.unknown_count:
            checks.append(_unknown(f"proposition-a[{name}]", details))
        else:
            checks.append(_check(f"proposition-a[{name}]", report.passed, details))
    return checks


def _theorem_b(seed: int, order, precision: int) -> list[dict]:
    rng = Random(seed)
    checks = []
    plan = (
        ("rationals-line", 100),
        ("euclidean-plane", 100),
        ("cover", 50),
        ("cover-completion", 50),
    )
    contradictory = False
    for name, count in plan:
        space = spaces.get_space(name, order, precision)
        probe_list = probes.finite_probes(space, rng, count)
        witness = spaces.inapproachability_witness(space)
        if witness is not None:
            probe_list.append(witness)
        report = hull.check_theorem_b(space, probe_list)
        all_approachable = report.clauses[0].holds
        witness_found = not all_approachable
        if all_approachable and witness_found:  # pragma: no cover - impossible
            contradictory = True
        details = "; ".join(f"{c.name}: {c.note}" for c in report.clauses)
        if report.passed and report.unknown_count:
            checks.append(_unknown(f"theorem-b[{name}]", details))
        else:
            checks.append(_check(f"theorem-b[{name}]", report.passed, details))
    checks.append(
        _check(
            "no-contradictory-clauses",
            not contradictory,
            "no space certified both 'all finite approachable' and a witness",
        )
    )
    return checks


def _hb_failure(seed: int, order, precision: int) -> list[dict]:
    del seed
    net = cover.separated_net(10)
    unit_ok = all(
        (lambda d: d.is_exact and d.coefficient(0).lo == 1 and len(d.terms) == 1)(
            cover.completion_distance(None, p, order, precision)
        )
        for p in net
    )
    pair_count = 0
    pairs_ok = True
    for i in range(len(net)):
        for j in range(i + 1, len(net)):
            d = cover.cover_distance(net[i], net[j], order, precision)
            pair_count += 1
            if not (d.is_exact and d.coefficient(0).lo == 2 and len(d.terms) == 1):
                pairs_ok = False
    close_pair = cover.cover_distance(cover.point(1, 0), cover.point(1, 1), order, precision)
    control_ok = lcf.compare(close_pair, lcf.from_rational(2)) is Ordering.LT
    return [
        _check(
            "net-on-unit-sphere",
            unit_ok,
            "all 10 net points at completion-distance exactly 1 from the origin",
        ),
        _check(
            "net-2-separated",
            pairs_ok and pair_count == 45,
            f"{pair_count} pairwise distances, all exactly 2",
        ),
        _check(
            "sub-pi-control",
            control_ok,
            "points (1,0), (1,1) at spacing below pi are closer than 2",
        ),
    ]


_RUNNERS = {
    "theorem-1.1": _standard_part_morphism,
    "cover-inapproachable": _cover_inapproachable,
    "proposition-a": _proposition_a,
    "theorem-b": _theorem_b,
    "hb-failure": _hb_failure,
}

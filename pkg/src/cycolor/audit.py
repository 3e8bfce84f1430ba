"""Mechanical audit of the impossibility argument's arithmetic backbone.

For the hub-and-grid family with parameter m, suppose a valid coloring with
t0 = m^2 + k0 colors existed (0 <= k0 <= m^3 - m^2, since t0 can never
exceed the edge count m^3). The hub has degree m^2, so its palette is an
arc of length m^2, which a color rotation moves to [1, m^2]. Two hub edges
then carry colors 1 and mid = floor(m^2 / 2). Their far endpoints are grid
vertices, and some pair vertex is adjacent to both. The union of the three palettes (sizes m, 2m,
m, overlapping in the two shared edges) has at most 4m - 2 colors, contains
colors 1 and mid, and must itself be a cyclic arc. The audit checks, for
concrete (m, k0), every numeric inequality and set containment that turns
these facts into a contradiction:

    mid-color-bounds     4m - 1 <= mid <= m^2 + k0 - 4m + 3
    gap-width            m^2 + k0 - 4m + 4 > 4m - 2
    mid-color-in-gap     mid lies strictly between 4m - 2 and t0 - 4m + 4
    palette-union-bound  4m - 2 < t0
    arc-containment      every arc of length <= 4m - 2 through color 1
                         stays inside [1, lo] union [hi, t0], the target
                         built from the gap endpoints (checked exactly,
                         including the degenerate empty-gap case)
    incompatibility      the above force mid both inside and outside the
                         same gap — impossible

The bounds step is evaluated first and is the named culprit whenever the
audit fails: its lower inequality 4m - 1 <= floor(m^2 / 2) is free of k0
and holds exactly when m >= 8, which is the whole boundary story. (The
gap-width inequality is implied by the bounds, so ordering it later loses
nothing.)

All arithmetic is exact integer arithmetic; set memberships go through the
interval module's non-materializing membership test, so m up to 10^3
(t0 up to 10^9) audits in microseconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import AuditParamsError, CycolorError
from .intervals import CyclicIntervalSpec, intcyc_contains

STEP_BOUNDS = "mid-color-bounds"
STEP_GAP = "gap-width"
STEP_MEMBER = "mid-color-in-gap"
STEP_UNION = "palette-union-bound"
STEP_ARC = "arc-containment"
STEP_CLASH = "incompatibility"

STEP_ORDER = (STEP_BOUNDS, STEP_GAP, STEP_MEMBER, STEP_UNION, STEP_ARC, STEP_CLASH)

ASSUMPTIONS = (
    "hub palette is an arc of length m^2, rotated to [1, m^2] "
    "(color rotation preserves validity; exercised by the solver tests)",
    "hub edges carrying colors 1 and floor(m^2/2) end at two grid vertices",
    "some pair vertex is adjacent to both of those grid vertices "
    "(exhaustively tested family property)",
)

NOTES = (
    "union bound 4m-2 reads the three palettes of sizes m, 2m, m as sharing "
    "exactly the two edges from the pair vertex to the two grid vertices; "
    "this interpretation is flagged rather than assumed silently",
)


@dataclass(frozen=True)
class AuditParams:
    m: int
    k0: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 2:
            raise AuditParamsError(f"m must be an integer >= 2, got {self.m!r}")
        if not isinstance(self.k0, int) or isinstance(self.k0, bool):
            raise AuditParamsError(f"k0 must be an integer, got {self.k0!r}")
        if not 0 <= self.k0 <= self.m**3 - self.m**2:
            raise AuditParamsError(
                f"k0={self.k0} outside [0, {self.m**3 - self.m**2}] for m={self.m}"
            )

    @property
    def t0(self) -> int:
        return self.m**2 + self.k0


@dataclass(frozen=True)
class AuditStep:
    name: str
    statement: str
    holds: bool
    witnesses: dict[str, Union[int, bool, str]]


@dataclass(frozen=True)
class AuditReport:
    params: AuditParams
    steps: tuple[AuditStep, ...]
    passed: bool
    failing_step: Optional[str]
    assumptions: tuple[str, ...]
    notes: tuple[str, ...]


def _endpoints(params: AuditParams) -> tuple[int, int]:
    """The gap endpoints: lower 4m-2, upper t0 - 4m + 4."""
    return 4 * params.m - 2, params.t0 - 4 * params.m + 4


def _instantiable(params: AuditParams) -> bool:
    i1, i2 = _endpoints(params)
    return 1 <= i1 <= params.t0 and 1 <= i2 <= params.t0


def audit(params: AuditParams) -> AuditReport:
    m, k0, t0 = params.m, params.k0, params.t0
    mid = m**2 // 2
    i1, i2 = _endpoints(params)
    bound = 4 * m - 2
    inst = _instantiable(params)
    steps: list[AuditStep] = []

    lower_ok = 4 * m - 1 <= mid
    upper_ok = mid <= m**2 + k0 - 4 * m + 3
    steps.append(
        AuditStep(
            name=STEP_BOUNDS,
            statement=f"{4 * m - 1} <= {mid} <= {m**2 + k0 - 4 * m + 3}",
            holds=lower_ok and upper_ok,
            witnesses={
                "lower": 4 * m - 1,
                "mid": mid,
                "upper": m**2 + k0 - 4 * m + 3,
                "lower_holds": lower_ok,
                "upper_holds": upper_ok,
            },
        )
    )

    gap_ok = m**2 + k0 - 4 * m + 4 > 4 * m - 2
    steps.append(
        AuditStep(
            name=STEP_GAP,
            statement=f"{m**2 + k0 - 4 * m + 4} > {4 * m - 2}",
            holds=gap_ok,
            witnesses={"left": m**2 + k0 - 4 * m + 4, "right": 4 * m - 2},
        )
    )

    if inst:
        member_ok = intcyc_contains(
            CyclicIntervalSpec(j0=1, i1=i1, i2=i2, t=t0, closed=False), mid
        )
        member_stmt = f"{mid} strictly between {i1} and {i2} in [1, {t0}]"
        member_wit: dict[str, Union[int, bool, str]] = {"mid": mid, "i1": i1, "i2": i2}
    else:
        member_ok = False
        member_stmt = f"endpoints ({i1}, {i2}) fall outside [1, {t0}]: gap not even formable"
        member_wit = {"mid": mid, "i1": i1, "i2": i2, "instantiable": False}
    steps.append(
        AuditStep(name=STEP_MEMBER, statement=member_stmt, holds=member_ok, witnesses=member_wit)
    )

    union_ok = bound < t0
    steps.append(
        AuditStep(
            name=STEP_UNION,
            statement=(
                f"|union of palettes| <= {m} + {2 * m} + {m} - 2 = {bound} < {t0}"
            ),
            holds=union_ok,
            witnesses={"bound": bound, "t0": t0, "shared_edges": 2},
        )
    )

    # An arc of length L <= bound containing color 1 occupies at most
    # bound-1 colors after 1 and at most bound-1 before it, so the union of
    # all such arcs is exactly [1, min(bound, t0)] U [max(t0-bound+2, 1), t0].
    # Containment in [1, lo] U [hi, t0] therefore fails precisely when that
    # cover meets the gap interior {lo+1, ..., hi-1}: on an empty interior
    # the target is every color and containment is vacuous, and otherwise
    # the cover must stop at lo on the left and start no earlier than hi on
    # the right. The three-way form keeps the check exact rather than
    # merely sufficient, so brute-force arc enumeration agrees with it on
    # every instantiable parameter choice.
    lo_end, hi_end = (min(i1, i2), max(i1, i2)) if inst else (0, 0)
    gap_interior_empty = inst and hi_end - lo_end <= 1
    arc_ok = inst and (
        gap_interior_empty
        or (bound < t0 and bound <= lo_end and t0 - bound + 2 >= hi_end)
    )
    steps.append(
        AuditStep(
            name=STEP_ARC,
            statement=(
                (
                    f"target [1, {lo_end}] U [{hi_end}, {t0}] is every color; "
                    f"containment is vacuous"
                    if gap_interior_empty
                    else f"arcs of length <= {bound} through color 1 lie in "
                    f"[1, {bound}] U [{t0 - bound + 2}, {t0}] subset of "
                    f"[1, {lo_end}] U [{hi_end}, {t0}]"
                )
                if inst
                else "target arc-pair not formable"
            ),
            holds=arc_ok,
            witnesses={
                "bound": bound,
                "cover_lo": bound,
                "cover_hi": t0 - bound + 2,
                "target_lo": lo_end,
                "target_hi": hi_end,
                "gap_interior_empty": gap_interior_empty,
                "instantiable": inst,
            },
        )
    )

    # The clash: mid sits strictly inside the gap (mid-color-in-gap), yet
    # mid also sits in the union of the three palettes, which the previous
    # two steps confine to the complement of that gap's interior.
    outside_gap = inst and intcyc_contains(
        CyclicIntervalSpec(j0=2, i1=i1, i2=i2, t=t0, closed=True), mid
    )
    clash_ok = member_ok and union_ok and arc_ok and not outside_gap
    steps.append(
        AuditStep(
            name=STEP_CLASH,
            statement=(
                f"color {mid} must lie inside the gap interior and inside the "
                f"palette union confined to its complement — impossible"
            ),
            holds=clash_ok,
            witnesses={"mid": mid, "mid_in_complement": bool(outside_gap)},
        )
    )

    failing = next((s.name for s in steps if not s.holds), None)
    return AuditReport(
        params=params,
        steps=tuple(steps),
        passed=failing is None,
        failing_step=failing,
        assumptions=ASSUMPTIONS,
        notes=NOTES,
    )


@dataclass(frozen=True)
class RangeEntry:
    m: int
    k0_hi: int
    passed_lo: bool
    passed_hi: bool
    passed: bool
    failing_step: Optional[str]
    exhaustive_checked: bool
    report_lo: AuditReport
    report_hi: AuditReport


@dataclass(frozen=True)
class RangeSummary:
    m_lo: int
    m_hi: int
    entries: tuple[RangeEntry, ...]
    all_passed: bool


def audit_range(m_lo: int, m_hi: int, exhaustive_limit: int = 12) -> RangeSummary:
    """Audit every m in [m_lo, m_hi] at the two k0 endpoints.

    Every k0-dependent condition is nondecreasing in k0 and the decisive
    lower bound is k0-free, so the endpoints determine the whole k0 range;
    for m <= exhaustive_limit that argument is cross-checked by sweeping
    every k0 and insisting the passing set is exactly what the endpoints
    predict.
    """
    if not isinstance(m_lo, int) or not isinstance(m_hi, int) or not 2 <= m_lo <= m_hi:
        raise AuditParamsError(f"need 2 <= m_lo <= m_hi, got ({m_lo!r}, {m_hi!r})")
    entries: list[RangeEntry] = []
    for m in range(m_lo, m_hi + 1):
        k0_hi = m**3 - m**2
        rep_lo = audit(AuditParams(m=m, k0=0))
        rep_hi = audit(AuditParams(m=m, k0=k0_hi))
        if rep_lo.passed and not rep_hi.passed:
            raise CycolorError(
                f"monotonicity violated at m={m}: k0=0 passes but k0={k0_hi} fails"
            )
        exhaustive = m <= exhaustive_limit
        if exhaustive:
            results = [audit(AuditParams(m=m, k0=k0)).passed for k0 in range(k0_hi + 1)]
            for earlier, later in zip(results, results[1:]):
                if earlier and not later:
                    raise CycolorError(f"k0 sweep at m={m} is not upward-closed")
            if results[0] != rep_lo.passed or results[-1] != rep_hi.passed:
                raise CycolorError(f"k0 sweep endpoints disagree with reports at m={m}")
        passed = rep_lo.passed and rep_hi.passed
        entries.append(
            RangeEntry(
                m=m,
                k0_hi=k0_hi,
                passed_lo=rep_lo.passed,
                passed_hi=rep_hi.passed,
                passed=passed,
                failing_step=rep_lo.failing_step if not passed else None,
                exhaustive_checked=exhaustive,
                report_lo=rep_lo,
                report_hi=rep_hi,
            )
        )
    return RangeSummary(
        m_lo=m_lo,
        m_hi=m_hi,
        entries=tuple(entries),
        all_passed=all(e.passed for e in entries),
    )


# --- serialization ------------------------------------------------------------

def step_to_dict(step: AuditStep) -> dict:
    return {
        "name": step.name,
        "statement": step.statement,
        "holds": step.holds,
        "witnesses": dict(step.witnesses),
    }


def report_to_dict(report: AuditReport) -> dict:
    return {
        "m": report.params.m,
        "k0": report.params.k0,
        "t0": report.params.t0,
        "passed": report.passed,
        "failing_step": report.failing_step,
        "steps": [step_to_dict(s) for s in report.steps],
        "assumptions": list(report.assumptions),
        "notes": list(report.notes),
    }


def summary_to_dict(summary: RangeSummary) -> dict:
    return {
        "m_lo": summary.m_lo,
        "m_hi": summary.m_hi,
        "all_passed": summary.all_passed,
        "entries": [
            {
                "m": e.m,
                "k0_endpoints": [0, e.k0_hi],
                "passed": e.passed,
                "failing_step": e.failing_step,
                "exhaustive_k0_sweep": e.exhaustive_checked,
                "report_k0_lo": report_to_dict(e.report_lo),
                "report_k0_hi": report_to_dict(e.report_hi),
            }
            for e in summary.entries
        ],
    }

"""Unit tests for the impossibility-argument audit."""

from __future__ import annotations

import pytest

from cycolor.audit import (
    STEP_ARC,
    STEP_BOUNDS,
    STEP_CLASH,
    STEP_GAP,
    STEP_MEMBER,
    STEP_ORDER,
    STEP_UNION,
    AuditParams,
    audit,
    audit_range,
    report_to_dict,
    step_to_dict,
    summary_to_dict,
)
from cycolor.errors import AuditParamsError


def _step(report, name):
    return next(s for s in report.steps if s.name == name)


def test_params_validation():
    with pytest.raises(AuditParamsError):
        AuditParams(m=1, k0=0)
    with pytest.raises(AuditParamsError):
        AuditParams(m=2, k0=-1)
    with pytest.raises(AuditParamsError):
        AuditParams(m=2, k0=5)  # max is m^3 - m^2 = 4
    with pytest.raises(AuditParamsError):
        AuditParams(m="3", k0=0)
    with pytest.raises(AuditParamsError):
        AuditParams(m=3, k0=True)
    assert AuditParams(m=3, k0=5).t0 == 14
    assert AuditParams(m=2, k0=4).t0 == 8


def test_m8_k0_zero_passes_with_expected_witnesses():
    rep = audit(AuditParams(m=8, k0=0))
    assert rep.passed and rep.failing_step is None
    assert [s.name for s in rep.steps] == list(STEP_ORDER)
    assert all(s.holds for s in rep.steps)

    bounds = _step(rep, STEP_BOUNDS)
    assert bounds.witnesses == {
        "lower": 31,
        "mid": 32,
        "upper": 35,
        "lower_holds": True,
        "upper_holds": True,
    }

    gap = _step(rep, STEP_GAP)
    assert gap.witnesses == {"left": 36, "right": 30}

    member = _step(rep, STEP_MEMBER)
    assert member.witnesses == {"mid": 32, "i1": 30, "i2": 36}

    union = _step(rep, STEP_UNION)
    assert union.witnesses == {"bound": 30, "t0": 64, "shared_edges": 2}

    arc = _step(rep, STEP_ARC)
    assert arc.witnesses["bound"] == 30
    assert arc.witnesses["cover_hi"] == 36
    assert (arc.witnesses["target_lo"], arc.witnesses["target_hi"]) == (30, 36)
    assert arc.witnesses["instantiable"] is True
    assert arc.witnesses["gap_interior_empty"] is False

    clash = _step(rep, STEP_CLASH)
    assert clash.witnesses == {"mid": 32, "mid_in_complement": False}


def test_m7_fails_at_the_lower_mid_bound():
    rep = audit(AuditParams(m=7, k0=0))
    assert not rep.passed
    assert rep.failing_step == STEP_BOUNDS
    bounds = _step(rep, STEP_BOUNDS)
    assert bounds.witnesses["lower"] == 27
    assert bounds.witnesses["mid"] == 24
    assert bounds.witnesses["lower_holds"] is False
    assert bounds.witnesses["upper_holds"] is True


def test_m8_upper_k0_endpoint_passes():
    rep = audit(AuditParams(m=8, k0=448))
    assert rep.params.t0 == 512
    assert rep.passed


def test_small_m_always_fails_at_bounds():
    for m in range(2, 8):
        for k0 in (0, m**3 - m**2):
            rep = audit(AuditParams(m=m, k0=k0))
            assert not rep.passed
            assert rep.failing_step == STEP_BOUNDS


def test_large_m_spot_checks_pass():
    for m in (50, 333, 1000):
        for k0 in (0, m**3 - m**2):
            assert audit(AuditParams(m=m, k0=k0)).passed


def test_assumptions_and_notes_are_reported():
    rep = audit(AuditParams(m=8, k0=0))
    assert len(rep.assumptions) == 3
    assert any("rotation" in a for a in rep.assumptions)
    assert len(rep.notes) == 1
    assert "shar" in rep.notes[0]  # the union-bound reading is flagged


def test_arc_step_agrees_with_brute_force_enumeration():
    """The symbolic containment argument versus literally trying every arc."""
    for m in (2, 3):
        for k0 in range(0, m**3 - m**2 + 1):
            params = AuditParams(m=m, k0=k0)
            t0 = params.t0
            assert t0 <= 40
            bound = 4 * m - 2
            i1, i2 = 4 * m - 2, t0 - 4 * m + 4
            step = _step(audit(params), STEP_ARC)
            if not (1 <= i1 <= t0 and 1 <= i2 <= t0):
                assert step.holds is False
                assert step.witnesses["instantiable"] is False
                continue
            lo, hi = min(i1, i2), max(i1, i2)
            target = set(range(1, lo + 1)) | set(range(hi, t0 + 1))
            brute = True
            for length in range(1, min(bound, t0) + 1):
                for s in range(1, t0 + 1):
                    arc = {((s - 1 + i) % t0) + 1 for i in range(length)}
                    if 1 in arc and not arc <= target:
                        brute = False
            assert step.holds == brute, (m, k0)


def test_audit_range_over_the_boundary():
    summary = audit_range(2, 9)
    assert (summary.m_lo, summary.m_hi) == (2, 9)
    assert not summary.all_passed
    assert len(summary.entries) == 8
    for entry in summary.entries:
        assert entry.exhaustive_checked  # all m here are <= the default limit
        if entry.m <= 7:
            assert not entry.passed
            assert entry.failing_step == STEP_BOUNDS
        else:
            assert entry.passed
            assert entry.failing_step is None
            assert entry.passed_lo and entry.passed_hi


def test_audit_range_exhaustive_at_m8():
    summary = audit_range(8, 8)
    entry = summary.entries[0]
    assert entry.k0_hi == 448  # 449 audited cases, k0 = 0..448
    assert entry.exhaustive_checked
    assert summary.all_passed


def test_audit_range_beyond_exhaustive_limit():
    summary = audit_range(13, 14, exhaustive_limit=12)
    assert summary.all_passed
    assert all(not e.exhaustive_checked for e in summary.entries)


def test_audit_range_validation():
    with pytest.raises(AuditParamsError):
        audit_range(5, 4)
    with pytest.raises(AuditParamsError):
        audit_range(1, 3)
    with pytest.raises(AuditParamsError):
        audit_range("2", 3)


def test_serialization_shapes():
    rep = audit(AuditParams(m=8, k0=0))
    d = report_to_dict(rep)
    assert d["m"] == 8 and d["k0"] == 0 and d["t0"] == 64
    assert d["passed"] is True and d["failing_step"] is None
    assert [s["name"] for s in d["steps"]] == list(STEP_ORDER)
    assert len(d["assumptions"]) == 3 and len(d["notes"]) == 1

    sd = step_to_dict(rep.steps[0])
    assert set(sd) == {"name", "statement", "holds", "witnesses"}

    summary = summary_to_dict(audit_range(7, 8))
    assert summary["all_passed"] is False
    assert [e["m"] for e in summary["entries"]] == [7, 8]
    assert summary["entries"][0]["failing_step"] == STEP_BOUNDS
    assert summary["entries"][0]["k0_endpoints"] == [0, 294]
    assert summary["entries"][1]["report_k0_hi"]["t0"] == 512


def test_statements_are_instantiated_text():
    rep = audit(AuditParams(m=8, k0=0))
    assert _step(rep, STEP_BOUNDS).statement == "31 <= 32 <= 35"
    assert _step(rep, STEP_GAP).statement == "36 > 30"

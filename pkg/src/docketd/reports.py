"""Printable docket reports filtered by case type and remark, plus
received/disposed statistics over a period.

Reports are pure functions of a docket snapshot: identical inputs render
identical documents. Names appear masked even in the printable artifact,
since printed reports leave the access-controlled system.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime, timezone
from typing import Mapping, Optional, Sequence

from . import access, pdf
from .access import Action
from .crypto import mask_name
from .domain import (
    AuditEvent,
    CaseStatus,
    CaseType,
    Complaint,
    LaborCase,
    Role,
    TERMINAL_STATUSES,
)


class ReportError(Exception):
    """Base class for report failures."""


class InvalidPeriod(ReportError):
    """Period start is after its end."""


class Unauthorized(ReportError):
    """Requester may not generate this report."""


@dataclass(frozen=True)
class DocketSnapshot:
    """A committed view of the docket: cases, their complaints, and the audit log."""

    cases: tuple[LaborCase, ...]
    complaints: Mapping[str, Complaint]
    audit: tuple[AuditEvent, ...]


@dataclass(frozen=True)
class ReportRequest:
    case_type: CaseType
    remark: CaseStatus
    period_from: date
    period_to: date
    office_id: Optional[int]  # None means ALL offices (executive only)


@dataclass(frozen=True)
class ReportRow:
    case_number: str
    complainant: str  # masked
    respondent: str  # masked
    nature: str
    filed_on: date
    status_on: date


@dataclass(frozen=True)
class ReportDocument:
    header: dict
    rows: tuple[ReportRow, ...]
    total_count: int
    rendered: bytes


REPORT_TITLE = "NLRC Regional Arbitration Branch No. IV"

_STATUS_ACTIONS = frozenset({"docket", "update_status"})


def _utc_date(timestamp: int) -> date:
    return datetime.fromtimestamp(timestamp, tz=timezone.utc).date()


def status_entered_on(case: LaborCase, audit: Sequence[AuditEvent]) -> date:
    """Date the case entered its current status, from the audit trail.

    Falls back to the docketing timestamp when the trail has no status events
    for the dispute (a case is Docketed from birth).
    """
    latest: Optional[AuditEvent] = None
    for event in audit:
        if event.dispute_id == case.dispute_id and event.action in _STATUS_ACTIONS:
            if latest is None or (event.at, event.seq) > (latest.at, latest.seq):
                latest = event
    if latest is None:
        return _utc_date(case.raffle_history[0].at)
    return _utc_date(latest.at)


def _check_period(period_from: date, period_to: date) -> None:
    if period_from > period_to:
        raise InvalidPeriod(f"period {period_from} to {period_to} runs backwards")


def _check_scope(request: ReportRequest, role: Role, office: Optional[int]) -> None:
    if not access.is_allowed(role, Action.GENERATE_REPORT):
        raise Unauthorized(f"role {role.value} cannot generate reports")
    if role is Role.EXECUTIVE_LABOR_ARBITER:
        return
    if request.office_id is None:
        raise Unauthorized("all-offices reports are for the executive labor arbiter")
    if request.office_id != office:
        raise Unauthorized(
            f"office {request.office_id} is outside the requester's scope"
        )


def generate_report(
    request: ReportRequest,
    snapshot: DocketSnapshot,
    *,
    requester_role: Role,
    requester_office: Optional[int] = None,
) -> ReportDocument:
    """Build the printable report for one (case type, remark) cell.

    Rows are exactly the cases matching the type, remark, office scope, and
    whose status-change date falls inside the period; sorted by case number.
    """
    _check_period(request.period_from, request.period_to)
    _check_scope(request, requester_role, requester_office)

    rows = []
    for case in snapshot.cases:
        if case.case_type is not request.case_type or case.status is not request.remark:
            continue
        if request.office_id is not None and case.office_id != request.office_id:
            continue
        status_on = status_entered_on(case, snapshot.audit)
        if not (request.period_from <= status_on <= request.period_to):
            continue
        complaint = snapshot.complaints[case.dispute_id]
        rows.append(
            ReportRow(
                case_number=case.case_number,
                complainant=mask_name(complaint.complainant.full_name),
                respondent=mask_name(complaint.respondent.full_name),
                nature=complaint.nature.value,
                filed_on=complaint.filed_on,
                status_on=status_on,
            )
        )
    rows.sort(key=lambda r: r.case_number)

    scope = "all offices" if request.office_id is None else f"office {request.office_id}"
    header = {
        "branch": REPORT_TITLE,
        "office_scope": scope,
        "case_type": request.case_type.value,
        "remark": request.remark.value,
        "period_from": request.period_from.isoformat(),
        "period_to": request.period_to.isoformat(),
    }
    lines = [
        f"Docket Report - {request.case_type.value} cases, remark {request.remark.value}",
        f"Scope: {scope}",
        f"Period: {header['period_from']} to {header['period_to']}",
        "",
        "Case Number | Complainant | Respondent | Nature | Filed | Status Date",
    ]
    for row in rows:
        lines.append(
            f"{row.case_number} | {row.complainant} | {row.respondent} | "
            f"{row.nature} | {row.filed_on.isoformat()} | {row.status_on.isoformat()}"
        )
    lines.append("")
    lines.append(f"Total cases: {len(rows)}")

    return ReportDocument(
        header=header,
        rows=tuple(rows),
        total_count=len(rows),
        rendered=pdf.render_text_document(lines, title=REPORT_TITLE),
    )


def docket_statistics(
    snapshot: DocketSnapshot, period_from: date, period_to: date
) -> dict[str, int]:
    """Cases received (docketed) and disposed (entered a terminal status) in a period."""
    _check_period(period_from, period_to)
    received = sum(
        1
        for case in snapshot.cases
        if period_from <= _utc_date(case.raffle_history[0].at) <= period_to
    )
    terminal_values = {status.value for status in TERMINAL_STATUSES}
    disposed_disputes = {
        event.dispute_id
        for event in snapshot.audit
        if event.action == "update_status"
        and event.after in terminal_values
        and period_from <= _utc_date(event.at) <= period_to
    }
    return {"received": received, "disposed": len(disposed_disputes)}

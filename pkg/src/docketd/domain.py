"""Dispute lifecycle: complaint intake, SEnA conciliation, docketing with an
office raffle, status maintenance, and the append-only audit trail.

Everything here has value semantics: operations map input records to new
records and touch no shared state, so they are safe to call from any thread.
One dispute_id threads a dispute through all three stages, which is what makes
stage transitions lossless by construction. Persistence and serialization of
conflicting writes belong to the record store.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, replace
from datetime import date
from enum import Enum
from typing import Callable, Iterable, Mapping, Optional, Sequence


# ---------------------------------------------------------------------------
# errors

class DomainError(Exception):
    """Base class for lifecycle rule violations."""


class EmptyName(DomainError):
    """A party's full name is blank."""


class UnknownNature(DomainError):
    """Complaint nature outside the jurisdiction enumeration."""


class AlreadyAssigned(DomainError):
    """Complaint has already been handed to a SEnA officer."""


class WrongRole(DomainError):
    """The named user does not hold the role the operation requires."""


class AlreadyConcluded(DomainError):
    """SEnA outcome is set and immutable."""


class NotReferred(DomainError):
    """Only a SEnA referred to arbitration can be docketed."""


class AlreadyDocketed(DomainError):
    """A dispute carries at most one labor case."""


class NoActiveOffice(DomainError):
    """Raffle found no active office."""


class SameOffice(DomainError):
    """Re-raffle target equals the current office."""


class InactiveOffice(DomainError):
    """Re-raffle target is unknown or inactive."""


class CaseArchived(DomainError):
    """Archived cases accept no further changes."""


class IllegalTransition(DomainError):
    """Requested status change is not an edge of the status graph."""


class EmptyMinute(DomainError):
    """A minute entry needs non-empty text."""


# ---------------------------------------------------------------------------
# enumerations

class JurisdictionCategory(Enum):
    """Complaint natures a labor arbiter has jurisdiction over."""

    UNFAIR_LABOR_PRACTICE = "UnfairLaborPractice"
    TERMINATION_DISPUTE = "TerminationDispute"
    WAGES_AND_PAY = "WagesAndPay"
    HOURS_OF_WORK = "HoursOfWork"
    MONEY_CLAIMS = "MoneyClaims"
    OTHER_PROVIDED_BY_LAW = "OtherProvidedByLaw"


class Role(Enum):
    """Principal roles. Public is the unauthenticated default."""

    COMPLAINT_OFFICER = "ComplaintOfficer"
    SENA_OFFICER = "SenaOfficer"
    LABOR_ARBITER = "LaborArbiter"
    ARBITRATION_ASSOCIATE = "ArbitrationAssociate"
    EXECUTIVE_LABOR_ARBITER = "ExecutiveLaborArbiter"
    PUBLIC = "Public"


class ComplaintStage(Enum):
    FILED = "Filed"
    ASSIGNED_TO_SENA = "AssignedToSena"


class SenaOutcome(Enum):
    SETTLED = "Settled"
    REFERRED_TO_ARBITRATION = "ReferredToArbitration"


class CaseType(Enum):
    REGULAR = "Regular"
    OFW = "OFW"


class CaseStatus(Enum):
    DOCKETED = "Docketed"
    MANDATORY_CONFERENCE = "MandatoryConference"
    SUBMITTED_FOR_DECISION = "SubmittedForDecision"
    DECIDED = "Decided"
    SETTLED = "Settled"
    DISMISSED = "Dismissed"
    WITHDRAWN = "Withdrawn"
    ARCHIVED = "Archived"


# The complete status graph. MandatoryConference loops on itself because
# hearings recur until the case is submitted, settled, or dropped.
LEGAL_TRANSITIONS: dict[CaseStatus, frozenset[CaseStatus]] = {
    CaseStatus.DOCKETED: frozenset(
        {CaseStatus.MANDATORY_CONFERENCE, CaseStatus.DISMISSED, CaseStatus.WITHDRAWN}
    ),
    CaseStatus.MANDATORY_CONFERENCE: frozenset(
        {
            CaseStatus.MANDATORY_CONFERENCE,
            CaseStatus.SUBMITTED_FOR_DECISION,
            CaseStatus.SETTLED,
            CaseStatus.DISMISSED,
            CaseStatus.WITHDRAWN,
        }
    ),
    CaseStatus.SUBMITTED_FOR_DECISION: frozenset({CaseStatus.DECIDED}),
    CaseStatus.DECIDED: frozenset({CaseStatus.ARCHIVED}),
    CaseStatus.SETTLED: frozenset({CaseStatus.ARCHIVED}),
    CaseStatus.DISMISSED: frozenset({CaseStatus.ARCHIVED}),
    CaseStatus.WITHDRAWN: frozenset({CaseStatus.ARCHIVED}),
    CaseStatus.ARCHIVED: frozenset(),
}

# Statuses that dispose of a case (feed the received/disposed statistics).
TERMINAL_STATUSES = frozenset(
    {CaseStatus.DECIDED, CaseStatus.SETTLED, CaseStatus.DISMISSED, CaseStatus.WITHDRAWN}
)

# Statuses that count toward an office's open-case load for raffling.
OPEN_STATUSES = frozenset(
    {CaseStatus.DOCKETED, CaseStatus.MANDATORY_CONFERENCE, CaseStatus.SUBMITTED_FOR_DECISION}
)


def legal_next_statuses(status: CaseStatus) -> frozenset[CaseStatus]:
    return LEGAL_TRANSITIONS[status]


# ---------------------------------------------------------------------------
# records

@dataclass(frozen=True)
class PartyIdentity:
    """A complainant's or respondent's personal details.

    full_name is plaintext only in memory; the record store keeps it
    encrypted. Fields must survive every stage transition byte for byte.
    """

    full_name: str
    address: str
    contact: str


@dataclass(frozen=True)
class Office:
    office_id: int
    arbiter_name: str
    is_executive: bool = False
    active: bool = True


@dataclass(frozen=True)
class MinuteEntry:
    """One hearing-minutes entry; immutable once appended."""

    recorded_on: int  # UTC seconds
    author: str
    text: str


@dataclass(frozen=True)
class Complaint:
    dispute_id: str
    complainant: PartyIdentity
    respondent: PartyIdentity
    nature: JurisdictionCategory
    filed_on: date
    assigned_sena_officer: Optional[str] = None
    stage_status: ComplaintStage = ComplaintStage.FILED


@dataclass(frozen=True)
class SenaCase:
    dispute_id: str
    administering_officer: str
    conferences: tuple[MinuteEntry, ...] = ()
    outcome: Optional[SenaOutcome] = None


@dataclass(frozen=True)
class RaffleEntry:
    office_id: int
    at: int  # UTC seconds
    reason: str


@dataclass(frozen=True)
class LaborCase:
    case_number: str
    dispute_id: str
    office_id: int
    case_type: CaseType
    status: CaseStatus
    minutes: tuple[MinuteEntry, ...] = ()
    raffle_history: tuple[RaffleEntry, ...] = ()


@dataclass(frozen=True)
class AuditEvent:
    """One entry of the append-only audit trail.

    seq is 0 until the event is appended to a trail or store, which assigns
    the next sequence number; events are never rewritten afterwards.
    """

    seq: int
    actor: str
    action: str
    dispute_id: str
    before: Optional[str]
    after: Optional[str]
    at: int  # UTC seconds


@dataclass(frozen=True)
class UserAccount:
    user_id: str
    username: str
    role: Role
    office_id: Optional[int]
    password_digest: str
    active: bool = True


class AuditTrail:
    """In-memory append-only event log with strictly increasing sequence numbers."""

    def __init__(self) -> None:
        self._events: list[AuditEvent] = []
        self._lock = threading.Lock()

    def append(self, event: AuditEvent) -> AuditEvent:
        with self._lock:
            assigned = replace(event, seq=len(self._events) + 1)
            self._events.append(assigned)
            return assigned

    @property
    def events(self) -> tuple[AuditEvent, ...]:
        with self._lock:
            return tuple(self._events)


# ---------------------------------------------------------------------------
# operations

def _fresh_id() -> str:
    return uuid.uuid4().hex


def _now_or(at: Optional[int]) -> int:
    return int(time.time()) if at is None else int(at)


def _require_minute(minute: MinuteEntry) -> None:
    if not minute.text.strip():
        raise EmptyMinute("minute text must be non-empty")


def file_complaint(
    complainant: PartyIdentity,
    respondent: PartyIdentity,
    nature: JurisdictionCategory,
    filed_on: date,
    *,
    id_factory: Optional[Callable[[], str]] = None,
) -> Complaint:
    """Register a complaint. Returns a Filed complaint with a fresh dispute_id."""
    for label, party in (("complainant", complainant), ("respondent", respondent)):
        if not party.full_name.strip():
            raise EmptyName(f"{label} full_name is blank")
    if not isinstance(nature, JurisdictionCategory):
        raise UnknownNature(f"unknown complaint nature: {nature!r}")
    dispute_id = (id_factory or _fresh_id)()
    return Complaint(
        dispute_id=dispute_id,
        complainant=complainant,
        respondent=respondent,
        nature=nature,
        filed_on=filed_on,
    )


def assign_to_sena(
    complaint: Complaint, officer: str, officer_role: Role
) -> tuple[Complaint, SenaCase]:
    """Hand a Filed complaint to a SEnA officer.

    The SEnA record shares the complaint's dispute_id, so every party field
    carries over unchanged.
    """
    if complaint.stage_status is not ComplaintStage.FILED:
        raise AlreadyAssigned(f"complaint {complaint.dispute_id} is already assigned")
    if officer_role is not Role.SENA_OFFICER:
        raise WrongRole(f"user {officer} is not a SEnA officer")
    updated = replace(
        complaint,
        assigned_sena_officer=officer,
        stage_status=ComplaintStage.ASSIGNED_TO_SENA,
    )
    sena = SenaCase(dispute_id=complaint.dispute_id, administering_officer=officer)
    return updated, sena


def conclude_sena(
    sena: SenaCase, outcome: SenaOutcome, minute: MinuteEntry
) -> SenaCase:
    """Close a conciliation: Settled, or ReferredToArbitration for docketing."""
    if sena.outcome is not None:
        raise AlreadyConcluded(f"SEnA {sena.dispute_id} already concluded")
    if not isinstance(outcome, SenaOutcome):
        raise ValueError(f"unknown SEnA outcome: {outcome!r}")
    _require_minute(minute)
    return replace(sena, outcome=outcome, conferences=sena.conferences + (minute,))


def raffle_office(
    offices: Sequence[Office], loads: Mapping[int, int], seed: int
) -> int:
    """Pick the office for a new case: least open-case load first.

    Candidates are the active offices with minimal load, sorted by office_id
    ascending; the winner is candidates[seed mod len(candidates)]. Identical
    (offices, loads, seed) always selects the same office.
    """
    if seed < 0:
        raise ValueError("raffle seed must be non-negative")
    active = [office for office in offices if office.active]
    if not active:
        raise NoActiveOffice("all offices are inactive")
    load_by_id = {office.office_id: loads.get(office.office_id, 0) for office in active}
    minimal = min(load_by_id.values())
    candidates = sorted(oid for oid, load in load_by_id.items() if load == minimal)
    return candidates[seed % len(candidates)]


def format_case_number(docketed_on: date, sequence: int, case_type: CaseType) -> str:
    """RAB-IV-<MM>-<NNNNN>-<YY>, with -OFW appended for OFW cases."""
    if sequence < 1:
        raise ValueError("case sequence starts at 1")
    number = (
        f"RAB-IV-{docketed_on.month:02d}-{sequence:05d}-{docketed_on.year % 100:02d}"
    )
    if case_type is CaseType.OFW:
        number += "-OFW"
    return number


def docket_case(
    sena: SenaCase,
    case_type: CaseType,
    offices: Sequence[Office],
    seed: int,
    loads: Mapping[int, int],
    *,
    docketed_on: date,
    sequence: int,
    actor: str,
    at: Optional[int] = None,
) -> tuple[LaborCase, AuditEvent]:
    """Convert a referred SEnA into a numbered labor case at a raffled office.

    docketed_on and sequence come from the caller (the store owns the per-year
    counter); the returned audit event still needs its seq assigned.
    """
    if sena.outcome is not SenaOutcome.REFERRED_TO_ARBITRATION:
        raise NotReferred(
            f"SEnA {sena.dispute_id} outcome is {sena.outcome.value if sena.outcome else 'absent'}"
        )
    office_id = raffle_office(offices, loads, seed)
    at = _now_or(at)
    case = LaborCase(
        case_number=format_case_number(docketed_on, sequence, case_type),
        dispute_id=sena.dispute_id,
        office_id=office_id,
        case_type=case_type,
        status=CaseStatus.DOCKETED,
        minutes=(),
        raffle_history=(RaffleEntry(office_id=office_id, at=at, reason="initial raffle"),),
    )
    event = AuditEvent(
        seq=0,
        actor=actor,
        action="docket",
        dispute_id=sena.dispute_id,
        before=None,
        after=CaseStatus.DOCKETED.value,
        at=at,
    )
    return case, event


def re_raffle(
    case: LaborCase,
    new_office: int,
    reason: str,
    actor: str,
    offices: Sequence[Office],
    *,
    at: Optional[int] = None,
) -> tuple[LaborCase, AuditEvent]:
    """Transfer a case to another active office.

    Only office_id and raffle_history change; parties, minutes, status and
    case_number carry over untouched. The audit event records the move.
    """
    if case.status is CaseStatus.ARCHIVED:
        raise CaseArchived(f"case {case.case_number} is archived")
    if new_office == case.office_id:
        raise SameOffice(f"case {case.case_number} is already at office {new_office}")
    target = next((o for o in offices if o.office_id == new_office), None)
    if target is None or not target.active:
        raise InactiveOffice(f"office {new_office} is not an active office")
    at = _now_or(at)
    updated = replace(
        case,
        office_id=new_office,
        raffle_history=case.raffle_history
        + (RaffleEntry(office_id=new_office, at=at, reason=reason),),
    )
    event = AuditEvent(
        seq=0,
        actor=actor,
        action="re_raffle",
        dispute_id=case.dispute_id,
        before=str(case.office_id),
        after=str(new_office),
        at=at,
    )
    return updated, event


def update_status(
    case: LaborCase, new_status: CaseStatus, minute: MinuteEntry, actor: str
) -> tuple[LaborCase, AuditEvent]:
    """Move a case along one edge of the status graph, appending the minute."""
    _require_minute(minute)
    if new_status not in LEGAL_TRANSITIONS[case.status]:
        raise IllegalTransition(
            f"no edge {case.status.value} -> {new_status.value}"
        )
    updated = replace(case, status=new_status, minutes=case.minutes + (minute,))
    event = AuditEvent(
        seq=0,
        actor=actor,
        action="update_status",
        dispute_id=case.dispute_id,
        before=case.status.value,
        after=new_status.value,
        at=minute.recorded_on,
    )
    return updated, event


def open_case_loads(
    cases: Iterable[LaborCase], offices: Sequence[Office]
) -> dict[int, int]:
    """Open-case count per office, for feeding the raffle."""
    loads = {office.office_id: 0 for office in offices}
    for case in cases:
        if case.status in OPEN_STATUSES and case.office_id in loads:
            loads[case.office_id] += 1
    return loads


def default_offices() -> list[Office]:
    """The default deployment: eight arbiter offices, office 1 executive."""
    return [
        Office(
            office_id=n,
            arbiter_name=f"Labor Arbiter Office {n}",
            is_executive=(n == 1),
        )
        for n in range(1, 9)
    ]

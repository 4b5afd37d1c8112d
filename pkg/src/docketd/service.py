"""Application service: sessions, authorization, and the workflow operations
behind the HTTP API.

Every mutation funnels through the record store's single-writer discipline
and leaves an audit event. The public surface is exactly login and case
tracking; everything else needs a live session whose role the access matrix
allows.
"""

from __future__ import annotations

import secrets
import threading
import time
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable, Optional

from . import access, crypto, domain, reports
from .access import Action
from .crypto import mask_name
from .domain import (
    AuditEvent,
    CaseStatus,
    CaseType,
    Complaint,
    JurisdictionCategory,
    LaborCase,
    MinuteEntry,
    Office,
    PartyIdentity,
    Role,
    SenaCase,
    SenaOutcome,
    UserAccount,
)
from .reports import DocketSnapshot, ReportDocument, ReportRequest
from .store import NotFound, RecordKind, RecordStore

DEFAULT_SESSION_TTL_MIN = 30


class ServiceError(Exception):
    """Base class for request-level failures."""


class BadCredentials(ServiceError):
    """Unknown user or wrong password; the two are indistinguishable."""


class AccountDisabled(ServiceError):
    """Credentials are right but the account is switched off."""


class ExpiredToken(ServiceError):
    """Missing, unknown, or idle-expired session token."""


class AuthorizationDenied(ServiceError):
    """The session's role or office scope does not allow the action."""


class CaseNotFound(ServiceError):
    """Public tracker lookup missed; one uniform message, no detail."""


@dataclass
class Session:
    token: str
    user_id: str
    username: str
    role: Role
    office_id: Optional[int]
    last_seen: float


# Burned when login hits an unknown username, so the response time does not
# reveal whether the account exists.
_DUMMY_DIGEST = crypto.hash_password("timing-equalizer")


def create_user(
    store: RecordStore,
    username: str,
    password: str,
    role: Role,
    office_id: Optional[int] = None,
) -> UserAccount:
    """Register an account (admin CLI path; not reachable over HTTP)."""
    if store.user_by_username(username) is not None:
        raise ValueError(f"username {username!r} is taken")
    user = UserAccount(
        user_id=uuid.uuid4().hex,
        username=username,
        role=role,
        office_id=office_id,
        password_digest=crypto.hash_password(password),
    )
    store.put(user, 0)
    return user


class DocketService:
    """One deployment's workflow operations over a record store."""

    def __init__(
        self,
        store: RecordStore,
        *,
        session_ttl_min: float = DEFAULT_SESSION_TTL_MIN,
        clock: Callable[[], float] = time.time,
        id_factory: Optional[Callable[[], str]] = None,
    ) -> None:
        self._store = store
        self._ttl_seconds = session_ttl_min * 60
        self._clock = clock
        self._id_factory = id_factory
        self._sessions: dict[str, Session] = {}
        self._sessions_lock = threading.Lock()

    @property
    def store(self) -> RecordStore:
        return self._store

    # -- sessions and authorization

    def login(self, username: str, password: str) -> Session:
        user = self._store.user_by_username(username)
        if user is None:
            crypto.verify_password(password, _DUMMY_DIGEST)
            raise BadCredentials("invalid credentials")
        if not crypto.verify_password(password, user.password_digest):
            raise BadCredentials("invalid credentials")
        if not user.active:
            raise AccountDisabled("account disabled")
        session = Session(
            token=secrets.token_urlsafe(32),
            user_id=user.user_id,
            username=user.username,
            role=user.role,
            office_id=user.office_id,
            last_seen=self._clock(),
        )
        with self._sessions_lock:
            self._sessions[session.token] = session
        return session

    def _session(self, token: Optional[str]) -> Session:
        if not token:
            raise ExpiredToken("authentication required")
        now = self._clock()
        with self._sessions_lock:
            session = self._sessions.get(token)
            if session is None:
                raise ExpiredToken("authentication required")
            if now - session.last_seen > self._ttl_seconds:
                del self._sessions[token]
                raise ExpiredToken("authentication required")
            session.last_seen = now
            return session

    def validate_token(self, token: Optional[str]) -> Session:
        """Resolve a token to its live session; ExpiredToken otherwise."""
        return self._session(token)

    def authorize(
        self, token: Optional[str], action: Action, target_office: Optional[int] = None
    ) -> bool:
        """The allow/deny decision for a live session. ExpiredToken if stale."""
        session = self._session(token)
        return access.authorize(session.role, action, session.office_id, target_office)

    def _require(
        self, token: Optional[str], action: Action, target_office: Optional[int] = None
    ) -> Session:
        session = self._session(token)
        if not access.authorize(session.role, action, session.office_id, target_office):
            raise AuthorizationDenied("forbidden")
        return session

    def _audit(
        self,
        session: Session,
        action: str,
        dispute_id: str,
        before: Optional[str] = None,
        after: Optional[str] = None,
    ) -> None:
        self._store.append_audit(
            AuditEvent(
                seq=0,
                actor=session.user_id,
                action=action,
                dispute_id=dispute_id,
                before=before,
                after=after,
                at=int(self._clock()),
            )
        )

    # -- complaints folder

    def file_complaint(
        self,
        token: Optional[str],
        complainant: PartyIdentity,
        respondent: PartyIdentity,
        nature: JurisdictionCategory,
        filed_on,
    ) -> Complaint:
        session = self._require(token, Action.FILE_COMPLAINT)
        complaint = domain.file_complaint(
            complainant, respondent, nature, filed_on, id_factory=self._id_factory
        )
        self._store.put(complaint, 0)
        self._audit(
            session, "file_complaint", complaint.dispute_id,
            after=complaint.stage_status.value,
        )
        return complaint

    def list_complaints(self, token: Optional[str]) -> list[Complaint]:
        self._require(token, Action.ASSIGN_SENA)
        return self._store.complaints()

    def list_officers(self, token: Optional[str], role: Role) -> list[UserAccount]:
        """Active accounts holding a role, for assignment pick lists."""
        self._require(token, Action.ASSIGN_SENA)
        return [u for u in self._store.users() if u.role is role and u.active]

    def assign_complaint(
        self, token: Optional[str], dispute_id: str, officer_id: str
    ) -> tuple[Complaint, SenaCase]:
        session = self._require(token, Action.ASSIGN_SENA)
        complaint, version = self._store.fetch(RecordKind.COMPLAINT, dispute_id)
        try:
            officer = self._store.get(RecordKind.USER, officer_id)
        except NotFound:
            raise domain.WrongRole(f"no such user: {officer_id}") from None
        updated, sena = domain.assign_to_sena(complaint, officer.user_id, officer.role)
        self._store.put(updated, version)
        self._store.put(sena, 0)
        self._audit(
            session, "assign_sena", dispute_id,
            before=complaint.stage_status.value, after=updated.stage_status.value,
        )
        return updated, sena

    # -- SEnA page

    def sena_for_officer(self, token: Optional[str]) -> list[SenaCase]:
        session = self._require(token, Action.MANAGE_SENA)
        return [
            s for s in self._store.sena_cases()
            if s.administering_officer == session.user_id
        ]

    def _own_sena(self, session: Session, dispute_id: str) -> tuple[SenaCase, int]:
        sena, version = self._store.fetch(RecordKind.SENA, dispute_id)
        if sena.administering_officer != session.user_id:
            raise AuthorizationDenied("not the administering officer")
        return sena, version

    def conclude_sena(
        self,
        token: Optional[str],
        dispute_id: str,
        outcome: SenaOutcome,
        minute_text: str,
    ) -> SenaCase:
        session = self._require(token, Action.MANAGE_SENA)
        sena, version = self._own_sena(session, dispute_id)
        minute = MinuteEntry(
            recorded_on=int(self._clock()), author=session.user_id, text=minute_text
        )
        updated = domain.conclude_sena(sena, outcome, minute)
        self._store.put(updated, version)
        self._audit(
            session, "conclude_sena", dispute_id, after=outcome.value,
        )
        return updated

    # -- docketing and case maintenance

    def docket_case(
        self,
        token: Optional[str],
        dispute_id: str,
        case_type: CaseType,
        seed: Optional[int] = None,
    ) -> LaborCase:
        session = self._require(token, Action.MANAGE_SENA)
        sena, _ = self._own_sena(session, dispute_id)
        if any(c.dispute_id == dispute_id for c in self._store.cases()):
            raise domain.AlreadyDocketed(f"dispute {dispute_id} already has a case")
        if sena.outcome is not SenaOutcome.REFERRED_TO_ARBITRATION:
            raise domain.NotReferred(
                f"SEnA {dispute_id} outcome is "
                f"{sena.outcome.value if sena.outcome else 'absent'}"
            )
        offices = self._store.offices()
        if not any(o.active for o in offices):
            raise domain.NoActiveOffice("all offices are inactive")
        loads = domain.open_case_loads(self._store.cases(), offices)
        now = int(self._clock())
        docketed_on = datetime.fromtimestamp(now, tz=timezone.utc).date()
        sequence = self._store.next_case_sequence(docketed_on.year)
        case, event = domain.docket_case(
            sena,
            case_type,
            offices,
            seed if seed is not None else secrets.randbelow(2**32),
            loads,
            docketed_on=docketed_on,
            sequence=sequence,
            actor=session.user_id,
            at=now,
        )
        self._store.put(case, 0)
        self._store.append_audit(event)
        return case

    def cases_for_office(
        self, token: Optional[str], office_id: Optional[int]
    ) -> list[LaborCase]:
        """Cases at one office; office_id None means all offices (executive only)."""
        self._require(token, Action.VIEW_OFFICE_CASES, target_office=office_id)
        if office_id is None:
            return self._store.cases()
        return self._store.query_by_office(office_id)

    def get_case(self, token: Optional[str], case_number: str) -> LaborCase:
        case = self._store.query_by_case_number(case_number)
        self._require(token, Action.VIEW_OFFICE_CASES, target_office=case.office_id)
        return case

    def update_case_status(
        self,
        token: Optional[str],
        case_number: str,
        new_status: CaseStatus,
        minute_text: str,
    ) -> LaborCase:
        session = self._session(token)
        case, version = self._store.fetch(RecordKind.CASE, case_number)
        if not access.authorize(
            session.role, Action.UPDATE_CASE_STATUS, session.office_id, case.office_id
        ):
            raise AuthorizationDenied("forbidden")
        minute = MinuteEntry(
            recorded_on=int(self._clock()), author=session.user_id, text=minute_text
        )
        updated, event = domain.update_status(case, new_status, minute, session.user_id)
        self._store.put(updated, version)
        self._store.append_audit(event)
        return updated

    def re_raffle_case(
        self, token: Optional[str], case_number: str, new_office: int, reason: str
    ) -> LaborCase:
        session = self._require(token, Action.RE_RAFFLE)
        case, version = self._store.fetch(RecordKind.CASE, case_number)
        updated, event = domain.re_raffle(
            case, new_office, reason, session.user_id, self._store.offices(),
            at=int(self._clock()),
        )
        self._store.put(updated, version)
        self._store.append_audit(event)
        return updated

    def list_offices(self, token: Optional[str]) -> list[Office]:
        session = self._session(token)
        if not access.authorize(
            session.role, Action.VIEW_OFFICE_CASES, session.office_id, session.office_id
        ):
            raise AuthorizationDenied("forbidden")
        return self._store.offices()

    # -- reports and audit

    def snapshot(self) -> DocketSnapshot:
        return DocketSnapshot(
            cases=tuple(self._store.cases()),
            complaints={c.dispute_id: c for c in self._store.complaints()},
            audit=tuple(self._store.audit_events()),
        )

    def generate_report(
        self, token: Optional[str], request: ReportRequest
    ) -> ReportDocument:
        session = self._session(token)
        return reports.generate_report(
            request,
            self.snapshot(),
            requester_role=session.role,
            requester_office=session.office_id,
        )

    def audit_log(self, token: Optional[str]) -> list[AuditEvent]:
        self._require(token, Action.ADMIN_USERS)
        return self._store.audit_events()

    # -- public tracker

    def track_status(self, case_number: str) -> dict:
        """Public lookup: masked parties, current status, last update date only."""
        try:
            case = self._store.query_by_case_number(case_number)
            complaint = self._store.get(RecordKind.COMPLAINT, case.dispute_id)
        except NotFound:
            raise CaseNotFound("case not found") from None
        last_change = max(
            (e.at for e in self._store.audit_events() if e.dispute_id == case.dispute_id),
            default=case.raffle_history[-1].at,
        )
        return {
            "case_number": case.case_number,
            "complainant": mask_name(complaint.complainant.full_name),
            "respondent": mask_name(complaint.respondent.full_name),
            "status": case.status.value,
            "last_update": datetime.fromtimestamp(last_change, tz=timezone.utc)
            .date()
            .isoformat(),
        }

"""HTTP layer over the docket service.

Every /api path except POST /api/login demands a valid session token before
the router even looks at the path, so unauthenticated probes learn nothing
about which resources exist. GET /track/{case_number} is the one public
lookup; static frontend assets, when configured, are served under /.
"""

from __future__ import annotations

import json
import re
from datetime import date
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any, Optional
from urllib.parse import parse_qs, urlparse

from . import crypto, domain, reports, store as store_mod
from .domain import (
    AuditEvent,
    CaseStatus,
    CaseType,
    Complaint,
    JurisdictionCategory,
    LaborCase,
    Office,
    PartyIdentity,
    Role,
    SenaCase,
    SenaOutcome,
)
from .reports import ReportRequest
from .service import (
    AccountDisabled,
    AuthorizationDenied,
    BadCredentials,
    CaseNotFound,
    DocketService,
    ExpiredToken,
)

_STATIC_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


class BadRequest(Exception):
    """Unparseable request body or query."""


# ---------------------------------------------------------------------------
# response shapes

def party_json(party: PartyIdentity) -> dict:
    return {"full_name": party.full_name, "address": party.address, "contact": party.contact}


def complaint_json(complaint: Complaint) -> dict:
    return {
        "dispute_id": complaint.dispute_id,
        "complainant": party_json(complaint.complainant),
        "respondent": party_json(complaint.respondent),
        "nature": complaint.nature.value,
        "filed_on": complaint.filed_on.isoformat(),
        "assigned_sena_officer": complaint.assigned_sena_officer,
        "stage_status": complaint.stage_status.value,
    }


def minute_json(minute: domain.MinuteEntry) -> dict:
    return {"recorded_on": minute.recorded_on, "author": minute.author, "text": minute.text}


def sena_json(sena: SenaCase, complaint: Optional[Complaint] = None) -> dict:
    body = {
        "dispute_id": sena.dispute_id,
        "administering_officer": sena.administering_officer,
        "conferences": [minute_json(m) for m in sena.conferences],
        "outcome": sena.outcome.value if sena.outcome else None,
    }
    if complaint is not None:
        body["complaint"] = complaint_json(complaint)
    return body


def case_json(case: LaborCase, complaint: Optional[Complaint] = None) -> dict:
    body = {
        "case_number": case.case_number,
        "dispute_id": case.dispute_id,
        "office_id": case.office_id,
        "case_type": case.case_type.value,
        "status": case.status.value,
        "minutes": [minute_json(m) for m in case.minutes],
        "raffle_history": [
            {"office_id": r.office_id, "at": r.at, "reason": r.reason}
            for r in case.raffle_history
        ],
        "legal_next_statuses": sorted(
            s.value for s in domain.legal_next_statuses(case.status)
        ),
    }
    if complaint is not None:
        body["complaint"] = complaint_json(complaint)
    return body


def audit_json(event: AuditEvent) -> dict:
    return {
        "seq": event.seq,
        "actor": event.actor,
        "action": event.action,
        "dispute_id": event.dispute_id,
        "before": event.before,
        "after": event.after,
        "at": event.at,
    }


def office_json(office: Office) -> dict:
    return {
        "office_id": office.office_id,
        "arbiter_name": office.arbiter_name,
        "is_executive": office.is_executive,
        "active": office.active,
    }


# ---------------------------------------------------------------------------
# request parsing helpers

def _need(body: dict, field: str) -> Any:
    if not isinstance(body, dict) or field not in body:
        raise BadRequest(f"missing field: {field}")
    return body[field]


def _parse_party(raw: Any, label: str) -> PartyIdentity:
    if not isinstance(raw, dict):
        raise BadRequest(f"{label} must be an object")
    try:
        return PartyIdentity(
            full_name=str(raw["full_name"]),
            address=str(raw.get("address", "")),
            contact=str(raw.get("contact", "")),
        )
    except KeyError as exc:
        raise BadRequest(f"{label} is missing {exc.args[0]}") from None


def _parse_enum(enum_cls, value, label: str):
    try:
        return enum_cls(value)
    except ValueError:
        raise BadRequest(f"unknown {label}: {value!r}") from None


def _parse_date(value, label: str) -> date:
    try:
        return date.fromisoformat(str(value))
    except ValueError:
        raise BadRequest(f"{label} must be an ISO date") from None


# ---------------------------------------------------------------------------

class DocketHTTPServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address, docket_service: DocketService, web_root=None) -> None:
        self.service = docket_service
        self.web_root = Path(web_root).resolve() if web_root else None
        super().__init__(address, DocketRequestHandler)


class DocketRequestHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server: DocketHTTPServer

    # Routes behind authentication: (method, pattern, handler name).
    API_ROUTES = [
        ("GET", re.compile(r"^/api/complaints$"), "ep_list_complaints"),
        ("POST", re.compile(r"^/api/complaints$"), "ep_file_complaint"),
        ("POST", re.compile(r"^/api/complaints/(?P<id>[^/]+)/assign$"), "ep_assign"),
        ("GET", re.compile(r"^/api/sena$"), "ep_list_sena"),
        ("POST", re.compile(r"^/api/sena/(?P<id>[^/]+)/conclude$"), "ep_conclude"),
        ("GET", re.compile(r"^/api/cases$"), "ep_list_cases"),
        ("POST", re.compile(r"^/api/cases$"), "ep_docket"),
        ("POST", re.compile(r"^/api/cases/(?P<no>[^/]+)/status$"), "ep_status"),
        ("POST", re.compile(r"^/api/cases/(?P<no>[^/]+)/reraffle$"), "ep_reraffle"),
        ("POST", re.compile(r"^/api/reports$"), "ep_report"),
        ("GET", re.compile(r"^/api/audit$"), "ep_audit"),
        ("GET", re.compile(r"^/api/offices$"), "ep_offices"),
        ("GET", re.compile(r"^/api/officers$"), "ep_officers"),
    ]
    _TRACK = re.compile(r"^/track/(?P<no>[^/]+)$")

    def log_message(self, format: str, *args) -> None:  # no request logging; stays PII-free
        pass

    def do_GET(self) -> None:
        self._handle("GET")

    def do_POST(self) -> None:
        self._handle("POST")

    def _handle(self, method: str) -> None:
        url = urlparse(self.path)
        path = url.path
        try:
            if path.startswith("/api"):
                self._handle_api(method, path, url)
            elif method == "GET" and (match := self._TRACK.match(path)):
                body = self.server.service.track_status(match.group("no"))
                self._send_json(200, body)
            elif method == "GET":
                self._serve_static(path)
            else:
                self._send_json(404, {"error": "not found"})
        except Exception as exc:  # every failure maps to one JSON error shape
            status, message = _error_response(exc)
            self._send_json(status, {"error": message})

    def _handle_api(self, method: str, path: str, url) -> None:
        svc = self.server.service
        if method == "POST" and path == "/api/login":
            body = self._read_json()
            session = svc.login(str(_need(body, "username")), str(_need(body, "password")))
            self._send_json(
                200,
                {
                    "token": session.token,
                    "user_id": session.user_id,
                    "username": session.username,
                    "role": session.role.value,
                    "office_id": session.office_id,
                },
            )
            return
        # Any other /api path: a live session comes before route matching, so
        # unauthenticated probes cannot tell real endpoints from missing ones.
        token = self._bearer_token()
        svc.validate_token(token)
        for route_method, pattern, handler_name in self.API_ROUTES:
            if route_method == method and (match := pattern.match(path)):
                query = parse_qs(url.query)
                getattr(self, handler_name)(svc, token, match, query)
                return
        self._send_json(404, {"error": "not found"})

    # -- endpoint handlers

    def ep_list_complaints(self, svc, token, match, query) -> None:
        complaints = svc.list_complaints(token)
        self._send_json(200, [complaint_json(c) for c in complaints])

    def ep_file_complaint(self, svc, token, match, query) -> None:
        body = self._read_json()
        complaint = svc.file_complaint(
            token,
            _parse_party(_need(body, "complainant"), "complainant"),
            _parse_party(_need(body, "respondent"), "respondent"),
            _parse_enum(JurisdictionCategory, _need(body, "nature"), "nature"),
            _parse_date(_need(body, "filed_on"), "filed_on"),
        )
        self._send_json(201, complaint_json(complaint))

    def ep_assign(self, svc, token, match, query) -> None:
        body = self._read_json()
        complaint, sena = svc.assign_complaint(
            token, match.group("id"), str(_need(body, "officer"))
        )
        self._send_json(200, {"complaint": complaint_json(complaint), "sena": sena_json(sena)})

    def ep_list_sena(self, svc, token, match, query) -> None:
        officer = query.get("officer", ["me"])[0]
        if officer != "me":
            raise BadRequest("only officer=me is supported")
        items = svc.sena_for_officer(token)
        complaints = {c.dispute_id: c for c in svc.store.complaints()}
        self._send_json(
            200, [sena_json(s, complaints.get(s.dispute_id)) for s in items]
        )

    def ep_conclude(self, svc, token, match, query) -> None:
        body = self._read_json()
        sena = svc.conclude_sena(
            token,
            match.group("id"),
            _parse_enum(SenaOutcome, _need(body, "outcome"), "outcome"),
            str(_need(body, "minute")),
        )
        self._send_json(200, sena_json(sena))

    def ep_list_cases(self, svc, token, match, query) -> None:
        office_raw = query.get("office", [None])[0]
        office_id: Optional[int] = None
        if office_raw is not None:
            try:
                office_id = int(office_raw)
            except ValueError:
                raise BadRequest("office must be an integer") from None
        cases = svc.cases_for_office(token, office_id)
        complaints = {c.dispute_id: c for c in svc.store.complaints()}
        self._send_json(
            200, [case_json(c, complaints.get(c.dispute_id)) for c in cases]
        )

    def ep_docket(self, svc, token, match, query) -> None:
        body = self._read_json()
        seed = body.get("seed")
        if seed is not None and (not isinstance(seed, int) or seed < 0):
            raise BadRequest("seed must be a non-negative integer")
        case = svc.docket_case(
            token,
            str(_need(body, "dispute_id")),
            _parse_enum(CaseType, _need(body, "case_type"), "case_type"),
            seed,
        )
        self._send_json(201, case_json(case))

    def ep_status(self, svc, token, match, query) -> None:
        body = self._read_json()
        case = svc.update_case_status(
            token,
            match.group("no"),
            _parse_enum(CaseStatus, _need(body, "status"), "status"),
            str(_need(body, "minute")),
        )
        self._send_json(200, case_json(case))

    def ep_reraffle(self, svc, token, match, query) -> None:
        body = self._read_json()
        office_id = _need(body, "office_id")
        if not isinstance(office_id, int):
            raise BadRequest("office_id must be an integer")
        case = svc.re_raffle_case(
            token, match.group("no"), office_id, str(_need(body, "reason"))
        )
        self._send_json(200, case_json(case))

    def ep_report(self, svc, token, match, query) -> None:
        body = self._read_json()
        office_raw = _need(body, "office")
        if office_raw == "ALL":
            office_id = None
        elif isinstance(office_raw, int):
            office_id = office_raw
        else:
            raise BadRequest('office must be an integer or "ALL"')
        request = ReportRequest(
            case_type=_parse_enum(CaseType, _need(body, "case_type"), "case_type"),
            remark=_parse_enum(CaseStatus, _need(body, "remark"), "remark"),
            period_from=_parse_date(_need(body, "from"), "from"),
            period_to=_parse_date(_need(body, "to"), "to"),
            office_id=office_id,
        )
        document = svc.generate_report(token, request)
        payload = document.rendered
        self.send_response(200)
        self.send_header("Content-Type", "application/pdf")
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("X-Total-Count", str(document.total_count))
        self.end_headers()
        self.wfile.write(payload)

    def ep_audit(self, svc, token, match, query) -> None:
        events = svc.audit_log(token)
        self._send_json(200, [audit_json(e) for e in events])

    def ep_offices(self, svc, token, match, query) -> None:
        self._send_json(200, [office_json(o) for o in svc.list_offices(token)])

    def ep_officers(self, svc, token, match, query) -> None:
        role = _parse_enum(Role, query.get("role", ["SenaOfficer"])[0], "role")
        officers = svc.list_officers(token, role)
        self._send_json(
            200, [{"user_id": u.user_id, "username": u.username} for u in officers]
        )

    # -- plumbing

    def _bearer_token(self) -> Optional[str]:
        header = self.headers.get("Authorization", "")
        if header.startswith("Bearer "):
            return header[len("Bearer "):].strip() or None
        return None

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length", 0) or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise BadRequest("request body required")
        try:
            body = json.loads(raw)
        except ValueError:
            raise BadRequest("request body is not valid JSON") from None
        if not isinstance(body, dict):
            raise BadRequest("request body must be a JSON object")
        return body

    def _send_json(self, status: int, body: Any) -> None:
        payload = json.dumps(body).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def _serve_static(self, path: str) -> None:
        root = self.server.web_root
        if root is None:
            self._send_json(404, {"error": "not found"})
            return
        relative = path.lstrip("/") or "index.html"
        target = (root / relative).resolve()
        if not target.is_relative_to(root) or not target.is_file():
            # Unknown paths fall back to the SPA shell for client-side routing.
            target = root / "index.html"
            if not target.is_file():
                self._send_json(404, {"error": "not found"})
                return
        payload = target.read_bytes()
        self.send_response(200)
        self.send_header(
            "Content-Type", _STATIC_TYPES.get(target.suffix, "application/octet-stream")
        )
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)


def _error_response(exc: Exception) -> tuple[int, str]:
    if isinstance(exc, BadCredentials):
        return 401, "invalid credentials"
    if isinstance(exc, ExpiredToken):
        return 401, "authentication required"
    if isinstance(exc, AccountDisabled):
        return 403, "account disabled"
    if isinstance(exc, (AuthorizationDenied, reports.Unauthorized)):
        return 403, "forbidden"
    if isinstance(exc, CaseNotFound):
        return 404, "case not found"
    if isinstance(exc, store_mod.NotFound):
        return 404, "not found"
    if isinstance(
        exc,
        (
            domain.AlreadyAssigned,
            domain.AlreadyConcluded,
            domain.AlreadyDocketed,
            domain.NotReferred,
            domain.SameOffice,
            domain.InactiveOffice,
            domain.CaseArchived,
            domain.IllegalTransition,
            domain.NoActiveOffice,
            store_mod.VersionConflict,
        ),
    ):
        return 409, str(exc)
    if isinstance(
        exc,
        (
            BadRequest,
            domain.EmptyName,
            domain.UnknownNature,
            domain.EmptyMinute,
            domain.WrongRole,
            reports.InvalidPeriod,
            crypto.CryptoError,
            ValueError,
        ),
    ):
        return 400, str(exc)
    if isinstance(exc, store_mod.StoreCorrupt):
        return 500, "internal storage error"
    return 500, "internal error"


def make_server(
    docket_service: DocketService,
    host: str = "127.0.0.1",
    port: int = 0,
    web_root=None,
) -> DocketHTTPServer:
    return DocketHTTPServer((host, port), docket_service, web_root=web_root)

"""Durable single-file record store with write-ahead journaling.

Records live in docket.db (a JSON snapshot) plus docket.wal (one JSON line
per committed write, fsynced before the in-memory state changes). Opening a
store loads the snapshot and replays the journal, so a crash between
checkpoints loses nothing that was acknowledged.

Party full names are encrypted to hex before any byte reaches disk and
decrypted on read; scanning the store files for a stored name finds nothing.
Writes are optimistic: callers pass the version they read, and a stale
version raises VersionConflict instead of clobbering.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, replace
from datetime import date
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Union

from . import crypto, domain
from .crypto import XorKey
from .domain import (
    AuditEvent,
    CaseStatus,
    CaseType,
    Complaint,
    ComplaintStage,
    JurisdictionCategory,
    LaborCase,
    MinuteEntry,
    Office,
    PartyIdentity,
    RaffleEntry,
    Role,
    SenaCase,
    SenaOutcome,
    UserAccount,
)

SCHEMA_VERSION = 1
DB_FILENAME = "docket.db"
WAL_FILENAME = "docket.wal"
_CHECKPOINT_EVERY = 512  # WAL entries between automatic snapshots


class StoreError(Exception):
    """Base class for record store failures."""


class VersionConflict(StoreError):
    """Write carried a stale expected version."""


class NotFound(StoreError):
    """No record under that kind and id."""


class StoreCorrupt(StoreError):
    """Payload failed decryption or parsing, or a store file is damaged."""


class RecordKind(Enum):
    COMPLAINT = "Complaint"
    SENA = "Sena"
    CASE = "Case"
    USER = "User"
    AUDIT = "Audit"


@dataclass(frozen=True)
class StoredRecord:
    kind: RecordKind
    record_id: str
    version: int
    payload: dict


DomainRecord = Union[Complaint, SenaCase, LaborCase, UserAccount]


# ---------------------------------------------------------------------------
# payload codecs (stable field order comes from sort_keys on dump)

def _encode_party(party: PartyIdentity, key: XorKey) -> dict:
    return {
        "full_name": crypto.encrypt_name(party.full_name, key),
        "address": party.address,
        "contact": party.contact,
    }


def _decode_party(payload: dict, key: XorKey) -> PartyIdentity:
    return PartyIdentity(
        full_name=crypto.decrypt_name(payload["full_name"], key),
        address=payload["address"],
        contact=payload["contact"],
    )


def _encode_minute(minute: MinuteEntry) -> dict:
    return {"recorded_on": minute.recorded_on, "author": minute.author, "text": minute.text}


def _decode_minute(payload: dict) -> MinuteEntry:
    return MinuteEntry(
        recorded_on=payload["recorded_on"], author=payload["author"], text=payload["text"]
    )


def _encode_complaint(complaint: Complaint, key: XorKey) -> dict:
    return {
        "dispute_id": complaint.dispute_id,
        "complainant": _encode_party(complaint.complainant, key),
        "respondent": _encode_party(complaint.respondent, key),
        "nature": complaint.nature.value,
        "filed_on": complaint.filed_on.isoformat(),
        "assigned_sena_officer": complaint.assigned_sena_officer,
        "stage_status": complaint.stage_status.value,
    }


def _decode_complaint(payload: dict, key: XorKey) -> Complaint:
    return Complaint(
        dispute_id=payload["dispute_id"],
        complainant=_decode_party(payload["complainant"], key),
        respondent=_decode_party(payload["respondent"], key),
        nature=JurisdictionCategory(payload["nature"]),
        filed_on=date.fromisoformat(payload["filed_on"]),
        assigned_sena_officer=payload["assigned_sena_officer"],
        stage_status=ComplaintStage(payload["stage_status"]),
    )


def _encode_sena(sena: SenaCase) -> dict:
    return {
        "dispute_id": sena.dispute_id,
        "administering_officer": sena.administering_officer,
        "conferences": [_encode_minute(m) for m in sena.conferences],
        "outcome": sena.outcome.value if sena.outcome else None,
    }


def _decode_sena(payload: dict) -> SenaCase:
    return SenaCase(
        dispute_id=payload["dispute_id"],
        administering_officer=payload["administering_officer"],
        conferences=tuple(_decode_minute(m) for m in payload["conferences"]),
        outcome=SenaOutcome(payload["outcome"]) if payload["outcome"] else None,
    )


def _encode_case(case: LaborCase) -> dict:
    return {
        "case_number": case.case_number,
        "dispute_id": case.dispute_id,
        "office_id": case.office_id,
        "case_type": case.case_type.value,
        "status": case.status.value,
        "minutes": [_encode_minute(m) for m in case.minutes],
        "raffle_history": [
            {"office_id": r.office_id, "at": r.at, "reason": r.reason}
            for r in case.raffle_history
        ],
    }


def _decode_case(payload: dict) -> LaborCase:
    return LaborCase(
        case_number=payload["case_number"],
        dispute_id=payload["dispute_id"],
        office_id=payload["office_id"],
        case_type=CaseType(payload["case_type"]),
        status=CaseStatus(payload["status"]),
        minutes=tuple(_decode_minute(m) for m in payload["minutes"]),
        raffle_history=tuple(
            RaffleEntry(office_id=r["office_id"], at=r["at"], reason=r["reason"])
            for r in payload["raffle_history"]
        ),
    )


def _encode_user(user: UserAccount) -> dict:
    return {
        "user_id": user.user_id,
        "username": user.username,
        "role": user.role.value,
        "office_id": user.office_id,
        "password_digest": user.password_digest,
        "active": user.active,
    }


def _decode_user(payload: dict) -> UserAccount:
    return UserAccount(
        user_id=payload["user_id"],
        username=payload["username"],
        role=Role(payload["role"]),
        office_id=payload["office_id"],
        password_digest=payload["password_digest"],
        active=payload["active"],
    )


def _encode_audit(event: AuditEvent) -> dict:
    return {
        "seq": event.seq,
        "actor": event.actor,
        "action": event.action,
        "dispute_id": event.dispute_id,
        "before": event.before,
        "after": event.after,
        "at": event.at,
    }


def _decode_audit(payload: dict) -> AuditEvent:
    return AuditEvent(
        seq=payload["seq"],
        actor=payload["actor"],
        action=payload["action"],
        dispute_id=payload["dispute_id"],
        before=payload["before"],
        after=payload["after"],
        at=payload["at"],
    )


def _encode_office(office: Office) -> dict:
    return {
        "office_id": office.office_id,
        "arbiter_name": office.arbiter_name,
        "is_executive": office.is_executive,
        "active": office.active,
    }


def _decode_office(payload: dict) -> Office:
    return Office(
        office_id=payload["office_id"],
        arbiter_name=payload["arbiter_name"],
        is_executive=payload["is_executive"],
        active=payload["active"],
    )


# ---------------------------------------------------------------------------

class RecordStore:
    """Embedded store for one deployment's complaints, cases, users and audit log.

    All access is serialized through one lock; callers observe their own
    writes immediately. Close (or checkpoint) before discarding the instance
    to fold the journal into the snapshot; an unclean stop only means the next
    open replays the journal.
    """

    def __init__(self, data_dir: Union[str, Path], key: XorKey) -> None:
        self._dir = Path(data_dir)
        self._dir.mkdir(parents=True, exist_ok=True)
        self._db_path = self._dir / DB_FILENAME
        self._wal_path = self._dir / WAL_FILENAME
        self._key = key
        self._lock = threading.RLock()
        self._records: dict[tuple[RecordKind, str], StoredRecord] = {}
        self._audit: list[AuditEvent] = []
        self._meta: dict[str, Any] = {
            "offices": [_encode_office(o) for o in domain.default_offices()],
            "case_seq": {},
        }
        self._wal_entries = 0
        self._load()
        self._wal_fh = open(self._wal_path, "a", encoding="utf-8")

    # -- lifecycle

    def _load(self) -> None:
        if self._db_path.exists():
            try:
                snapshot = json.loads(self._db_path.read_text(encoding="utf-8"))
            except (ValueError, OSError) as exc:
                raise StoreCorrupt(f"snapshot unreadable: {exc}") from exc
            if snapshot.get("schema") != SCHEMA_VERSION:
                raise StoreCorrupt(f"unsupported schema: {snapshot.get('schema')!r}")
            self._meta = snapshot["meta"]
            for raw in snapshot["records"]:
                record = StoredRecord(
                    kind=RecordKind(raw["kind"]),
                    record_id=raw["id"],
                    version=raw["version"],
                    payload=raw["payload"],
                )
                self._records[(record.kind, record.record_id)] = record
        if self._wal_path.exists():
            self._replay_wal()
        self._audit = sorted(
            (
                _decode_audit(rec.payload)
                for (kind, _), rec in self._records.items()
                if kind is RecordKind.AUDIT
            ),
            key=lambda e: e.seq,
        )

    def _replay_wal(self) -> None:
        lines = self._wal_path.read_text(encoding="utf-8").splitlines()
        for n, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                entry = json.loads(line)
            except ValueError as exc:
                if n == len(lines) - 1:
                    break  # torn final write from a crash; everything before it committed
                raise StoreCorrupt(f"journal line {n + 1} unreadable: {exc}") from exc
            self._apply(entry)
            self._wal_entries += 1

    def _apply(self, entry: dict) -> None:
        kind = entry["t"]
        if kind == "put":
            record = StoredRecord(
                kind=RecordKind(entry["kind"]),
                record_id=entry["id"],
                version=entry["version"],
                payload=entry["payload"],
            )
            self._records[(record.kind, record.record_id)] = record
        elif kind == "meta":
            self._meta = entry["meta"]
        else:
            raise StoreCorrupt(f"unknown journal entry type: {kind!r}")

    def _append_wal(self, entry: dict) -> None:
        self._wal_fh.write(json.dumps(entry, sort_keys=True) + "\n")
        self._wal_fh.flush()
        os.fsync(self._wal_fh.fileno())
        self._wal_entries += 1

    def checkpoint(self) -> None:
        """Fold the journal into the snapshot file atomically."""
        with self._lock:
            snapshot = {
                "schema": SCHEMA_VERSION,
                "meta": self._meta,
                "records": [
                    {
                        "kind": rec.kind.value,
                        "id": rec.record_id,
                        "version": rec.version,
                        "payload": rec.payload,
                    }
                    for rec in self._records.values()
                ],
            }
            tmp_path = self._db_path.with_suffix(".tmp")
            with open(tmp_path, "w", encoding="utf-8") as fh:
                json.dump(snapshot, fh, sort_keys=True)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp_path, self._db_path)
            self._wal_fh.close()
            self._wal_fh = open(self._wal_path, "w", encoding="utf-8")
            self._wal_entries = 0

    def close(self) -> None:
        with self._lock:
            self.checkpoint()
            self._wal_fh.close()

    def __enter__(self) -> "RecordStore":
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()

    # -- codecs

    def _encode(self, obj: DomainRecord) -> tuple[RecordKind, str, dict]:
        if isinstance(obj, Complaint):
            return RecordKind.COMPLAINT, obj.dispute_id, _encode_complaint(obj, self._key)
        if isinstance(obj, SenaCase):
            return RecordKind.SENA, obj.dispute_id, _encode_sena(obj)
        if isinstance(obj, LaborCase):
            return RecordKind.CASE, obj.case_number, _encode_case(obj)
        if isinstance(obj, UserAccount):
            return RecordKind.USER, obj.user_id, _encode_user(obj)
        raise TypeError(f"cannot store object of type {type(obj).__name__}")

    def _decode(self, record: StoredRecord) -> Any:
        try:
            if record.kind is RecordKind.COMPLAINT:
                return _decode_complaint(record.payload, self._key)
            if record.kind is RecordKind.SENA:
                return _decode_sena(record.payload)
            if record.kind is RecordKind.CASE:
                return _decode_case(record.payload)
            if record.kind is RecordKind.USER:
                return _decode_user(record.payload)
            if record.kind is RecordKind.AUDIT:
                return _decode_audit(record.payload)
        except (KeyError, ValueError, crypto.CryptoError) as exc:
            raise StoreCorrupt(
                f"{record.kind.value}/{record.record_id} failed to decode: {exc}"
            ) from exc
        raise StoreCorrupt(f"unknown record kind: {record.kind!r}")

    # -- record operations

    def put(self, obj: DomainRecord, expected_version: int) -> int:
        """Write a record, optimistic-checked against expected_version.

        Pass 0 when creating; the stored version increments by exactly one per
        successful write. Returns the new version.
        """
        kind, record_id, payload = self._encode(obj)
        with self._lock:
            current = self._records.get((kind, record_id))
            current_version = current.version if current else 0
            if expected_version != current_version:
                raise VersionConflict(
                    f"{kind.value}/{record_id}: expected version "
                    f"{expected_version}, store has {current_version}"
                )
            version = current_version + 1
            self._append_wal(
                {"t": "put", "kind": kind.value, "id": record_id, "version": version, "payload": payload}
            )
            self._records[(kind, record_id)] = StoredRecord(kind, record_id, version, payload)
            self._maybe_checkpoint()
            return version

    def get(self, kind: RecordKind, record_id: str) -> Any:
        """Fetch and decode one record; NotFound if absent."""
        with self._lock:
            record = self._records.get((kind, record_id))
            if record is None:
                raise NotFound(f"{kind.value}/{record_id}")
            return self._decode(record)

    def fetch(self, kind: RecordKind, record_id: str) -> tuple[Any, int]:
        """Like get, but also returns the version for a later optimistic put."""
        with self._lock:
            record = self._records.get((kind, record_id))
            if record is None:
                raise NotFound(f"{kind.value}/{record_id}")
            return self._decode(record), record.version

    def query_by_office(self, office_id: int) -> list[LaborCase]:
        """Cases currently assigned to the given office, by case number."""
        with self._lock:
            cases = [
                self._decode(rec)
                for (kind, _), rec in self._records.items()
                if kind is RecordKind.CASE and rec.payload["office_id"] == office_id
            ]
        return sorted(cases, key=lambda c: c.case_number)

    def query_by_case_number(self, case_number: str) -> LaborCase:
        return self.get(RecordKind.CASE, case_number)

    def append_audit(self, event: AuditEvent) -> int:
        """Assign the next sequence number and persist the event. Returns the seq."""
        with self._lock:
            seq = self._audit[-1].seq + 1 if self._audit else 1
            assigned = replace(event, seq=seq)
            payload = _encode_audit(assigned)
            self._append_wal(
                {"t": "put", "kind": RecordKind.AUDIT.value, "id": str(seq), "version": 1, "payload": payload}
            )
            self._records[(RecordKind.AUDIT, str(seq))] = StoredRecord(
                RecordKind.AUDIT, str(seq), 1, payload
            )
            self._audit.append(assigned)
            self._maybe_checkpoint()
            return seq

    def audit_events(self) -> list[AuditEvent]:
        with self._lock:
            return list(self._audit)

    def _list(self, kind: RecordKind) -> list[Any]:
        with self._lock:
            return [
                self._decode(rec) for (k, _), rec in self._records.items() if k is kind
            ]

    def complaints(self) -> list[Complaint]:
        return sorted(self._list(RecordKind.COMPLAINT), key=lambda c: c.dispute_id)

    def sena_cases(self) -> list[SenaCase]:
        return sorted(self._list(RecordKind.SENA), key=lambda s: s.dispute_id)

    def cases(self) -> list[LaborCase]:
        return sorted(self._list(RecordKind.CASE), key=lambda c: c.case_number)

    def users(self) -> list[UserAccount]:
        return sorted(self._list(RecordKind.USER), key=lambda u: u.user_id)

    def user_by_username(self, username: str) -> Optional[UserAccount]:
        for user in self._list(RecordKind.USER):
            if user.username == username:
                return user
        return None

    # -- meta: offices and the per-year case number counter

    def offices(self) -> list[Office]:
        with self._lock:
            return sorted(
                (_decode_office(o) for o in self._meta["offices"]),
                key=lambda o: o.office_id,
            )

    def replace_offices(self, offices: list[Office]) -> None:
        with self._lock:
            self._meta = dict(self._meta, offices=[_encode_office(o) for o in offices])
            self._append_wal({"t": "meta", "meta": self._meta})

    def set_office_active(self, office_id: int, active: bool) -> None:
        offices = [
            replace(o, active=active) if o.office_id == office_id else o
            for o in self.offices()
        ]
        self.replace_offices(offices)

    def next_case_sequence(self, year: int) -> int:
        """Advance and return the per-year docket sequence (starts at 1)."""
        with self._lock:
            counters = dict(self._meta["case_seq"])
            value = counters.get(str(year), 0) + 1
            counters[str(year)] = value
            self._meta = dict(self._meta, case_seq=counters)
            self._append_wal({"t": "meta", "meta": self._meta})
            return value

    def _maybe_checkpoint(self) -> None:
        if self._wal_entries >= _CHECKPOINT_EVERY:
            self.checkpoint()

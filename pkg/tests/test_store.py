import json
from datetime import date

import pytest

from docketd.domain import (
    AuditEvent,
    CaseStatus,
    CaseType,
    Complaint,
    ComplaintStage,
    JurisdictionCategory,
    LaborCase,
    MinuteEntry,
    PartyIdentity,
    RaffleEntry,
    Role,
    SenaCase,
    SenaOutcome,
    UserAccount,
)
from docketd.store import (
    NotFound,
    RecordKind,
    RecordStore,
    StoreCorrupt,
    VersionConflict,
)


def sample_complaint(dispute_id="disp-1"):
    return Complaint(
        dispute_id=dispute_id,
        complainant=PartyIdentity("Juan Dela Cruz", "12 Rizal St", "0917-555-0000"),
        respondent=PartyIdentity("Acme Corp", "1 Industrial Ave", "049-545-0000"),
        nature=JurisdictionCategory.TERMINATION_DISPUTE,
        filed_on=date(2022, 6, 1),
        assigned_sena_officer="sena-1",
        stage_status=ComplaintStage.ASSIGNED_TO_SENA,
    )


def sample_case(case_number="RAB-IV-06-00001-22", office_id=1):
    return LaborCase(
        case_number=case_number,
        dispute_id="disp-1",
        office_id=office_id,
        case_type=CaseType.REGULAR,
        status=CaseStatus.MANDATORY_CONFERENCE,
        minutes=(MinuteEntry(1_654_070_400, "arb-1", "first conference"),),
        raffle_history=(RaffleEntry(office_id, 1_654_070_000, "initial raffle"),),
    )


def sample_event(at=1_654_070_400):
    return AuditEvent(0, "user-1", "update_status", "disp-1", "Docketed",
                      "MandatoryConference", at)


class TestRoundTrips:
    def test_complaint(self, store):
        complaint = sample_complaint()
        assert store.put(complaint, 0) == 1
        assert store.get(RecordKind.COMPLAINT, "disp-1") == complaint

    def test_sena(self, store):
        sena = SenaCase(
            dispute_id="disp-1",
            administering_officer="sena-1",
            conferences=(MinuteEntry(1_654_070_400, "sena-1", "settled"),),
            outcome=SenaOutcome.SETTLED,
        )
        store.put(sena, 0)
        assert store.get(RecordKind.SENA, "disp-1") == sena

    def test_case(self, store):
        case = sample_case()
        store.put(case, 0)
        assert store.query_by_case_number(case.case_number) == case

    def test_user(self, store):
        user = UserAccount("u-1", "arbiter2", Role.LABOR_ARBITER, 2, "pbkdf2$fake", True)
        store.put(user, 0)
        assert store.get(RecordKind.USER, "u-1") == user
        assert store.user_by_username("arbiter2") == user
        assert store.user_by_username("ghost") is None


class TestVersioning:
    def test_version_increments_by_one(self, store):
        complaint = sample_complaint()
        assert store.put(complaint, 0) == 1
        assert store.put(complaint, 1) == 2
        assert store.fetch(RecordKind.COMPLAINT, "disp-1")[1] == 2

    def test_stale_write_conflicts(self, store):
        complaint = sample_complaint()
        store.put(complaint, 0)
        store.put(complaint, 1)
        with pytest.raises(VersionConflict):
            store.put(complaint, 1)

    def test_create_requires_zero(self, store):
        with pytest.raises(VersionConflict):
            store.put(sample_complaint(), 3)

    def test_get_missing(self, store):
        with pytest.raises(NotFound):
            store.get(RecordKind.COMPLAINT, "nope")


class TestQueries:
    def test_query_by_office_exact_filter(self, store):
        layout = {"c1": 1, "c2": 2, "c3": 2, "c4": 3}
        for number, office in layout.items():
            store.put(sample_case(case_number=number, office_id=office), 0)
        hits = store.query_by_office(2)
        # Brute-force oracle over the fixture.
        assert sorted(c.case_number for c in hits) == ["c2", "c3"]
        union = {c.case_number for o in (1, 2, 3) for c in store.query_by_office(o)}
        assert union == set(layout)


class TestAudit:
    def test_sequences_are_gapless(self, store):
        for n in range(5):
            assert store.append_audit(sample_event(at=n)) == n + 1
        assert [e.seq for e in store.audit_events()] == [1, 2, 3, 4, 5]

    def test_sequences_survive_reopen(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        for n in range(3):
            store.append_audit(sample_event(at=n))
        store.close()
        reopened = RecordStore(tmp_path / "d", xor_key)
        assert reopened.append_audit(sample_event()) == 4
        assert [e.seq for e in reopened.audit_events()] == [1, 2, 3, 4]
        reopened.close()


class TestDurability:
    def test_round_trip_after_clean_restart(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        complaint = sample_complaint()
        case = sample_case()
        store.put(complaint, 0)
        store.put(case, 0)
        store.close()
        reopened = RecordStore(tmp_path / "d", xor_key)
        assert reopened.get(RecordKind.COMPLAINT, "disp-1") == complaint
        assert reopened.get(RecordKind.CASE, case.case_number) == case
        reopened.close()

    def test_journal_replay_after_unclean_stop(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        store.put(sample_complaint(), 0)
        store.append_audit(sample_event())
        # No close(): simulates a crash before any checkpoint.
        reopened = RecordStore(tmp_path / "d", xor_key)
        assert reopened.get(RecordKind.COMPLAINT, "disp-1") == sample_complaint()
        assert len(reopened.audit_events()) == 1
        reopened.close()

    def test_torn_final_journal_line_is_dropped(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        store.put(sample_complaint(), 0)
        wal = tmp_path / "d" / "docket.wal"
        with open(wal, "a", encoding="utf-8") as fh:
            fh.write('{"t": "put", "kind": "Complaint", "id": "half')
        reopened = RecordStore(tmp_path / "d", xor_key)
        assert reopened.get(RecordKind.COMPLAINT, "disp-1") == sample_complaint()
        reopened.close()


class TestEncryptionBoundary:
    def test_no_plaintext_names_on_disk(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        store.put(sample_complaint(), 0)
        store.close()
        blob = b"".join(p.read_bytes() for p in (tmp_path / "d").iterdir())
        assert b"Juan Dela Cruz" not in blob
        assert b"Acme Corp" not in blob

    def test_tampered_ciphertext_is_reported_corrupt(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        store.put(sample_complaint(), 0)
        store.close()
        db = tmp_path / "d" / "docket.db"
        snapshot = json.loads(db.read_text())
        for record in snapshot["records"]:
            if record["kind"] == "Complaint":
                record["payload"]["complainant"]["full_name"] = "zzz"
        db.write_text(json.dumps(snapshot))
        reopened = RecordStore(tmp_path / "d", xor_key)
        with pytest.raises(StoreCorrupt):
            reopened.get(RecordKind.COMPLAINT, "disp-1")
        reopened.close()


class TestMeta:
    def test_default_offices(self, store):
        offices = store.offices()
        assert len(offices) == 8
        assert sum(1 for o in offices if o.is_executive) == 1

    def test_office_deactivation_persists(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        store.set_office_active(5, False)
        store.close()
        reopened = RecordStore(tmp_path / "d", xor_key)
        assert [o.office_id for o in reopened.offices() if not o.active] == [5]
        reopened.close()

    def test_case_sequence_is_per_year_and_durable(self, tmp_path, xor_key):
        store = RecordStore(tmp_path / "d", xor_key)
        assert store.next_case_sequence(2022) == 1
        assert store.next_case_sequence(2022) == 2
        assert store.next_case_sequence(2023) == 1
        store.close()
        reopened = RecordStore(tmp_path / "d", xor_key)
        assert reopened.next_case_sequence(2022) == 3
        reopened.close()

import random
import threading
from dataclasses import replace
from datetime import date

import pytest

from docketd import domain
from docketd.domain import (
    AlreadyAssigned,
    AlreadyConcluded,
    AuditEvent,
    AuditTrail,
    CaseArchived,
    CaseStatus,
    CaseType,
    Complaint,
    ComplaintStage,
    EmptyMinute,
    EmptyName,
    IllegalTransition,
    InactiveOffice,
    LaborCase,
    MinuteEntry,
    NoActiveOffice,
    NotReferred,
    Office,
    PartyIdentity,
    RaffleEntry,
    Role,
    SameOffice,
    SenaOutcome,
    UnknownNature,
    WrongRole,
    assign_to_sena,
    conclude_sena,
    docket_case,
    file_complaint,
    format_case_number,
    raffle_office,
    re_raffle,
    update_status,
)

JUAN = PartyIdentity("Juan Dela Cruz", "12 Rizal St, Calamba", "0917-555-0000")
ACME = PartyIdentity("Acme Corp", "1 Industrial Ave", "049-545-0000")

OFFICES = [Office(n, f"Arbiter {n}", is_executive=(n == 1)) for n in range(1, 4)]


def minute(text="conference held", at=1_654_070_400):
    return MinuteEntry(recorded_on=at, author="user-1", text=text)


def make_referred_sena(dispute_id="disp-1"):
    complaint = file_complaint(JUAN, ACME, domain.JurisdictionCategory.TERMINATION_DISPUTE,
                               date(2022, 6, 1), id_factory=lambda: dispute_id)
    _, sena = assign_to_sena(complaint, "sena-1", Role.SENA_OFFICER)
    return conclude_sena(sena, SenaOutcome.REFERRED_TO_ARBITRATION, minute())


def make_case(status=CaseStatus.DOCKETED, office_id=1, case_number="RAB-IV-06-00001-22"):
    return LaborCase(
        case_number=case_number,
        dispute_id="disp-1",
        office_id=office_id,
        case_type=CaseType.REGULAR,
        status=status,
        minutes=(),
        raffle_history=(RaffleEntry(office_id, 1_654_070_400, "initial raffle"),),
    )


class TestFileComplaint:
    def test_construction(self):
        complaint = file_complaint(
            JUAN, ACME, domain.JurisdictionCategory.TERMINATION_DISPUTE, date(2022, 6, 1)
        )
        assert complaint.stage_status is ComplaintStage.FILED
        assert complaint.assigned_sena_officer is None
        assert complaint.complainant == JUAN
        assert complaint.filed_on == date(2022, 6, 1)

    def test_blank_name_rejected(self):
        nobody = PartyIdentity("", "somewhere", "none")
        with pytest.raises(EmptyName):
            file_complaint(nobody, ACME, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1))
        with pytest.raises(EmptyName):
            file_complaint(JUAN, replace(ACME, full_name="   "),
                           domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1))

    def test_unknown_nature_rejected(self):
        with pytest.raises(UnknownNature):
            file_complaint(JUAN, ACME, "NotACategory", date(2022, 6, 1))

    def test_fresh_ids(self):
        first = file_complaint(JUAN, ACME, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1))
        second = file_complaint(JUAN, ACME, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1))
        assert first.dispute_id != second.dispute_id


class TestAssignToSena:
    def test_construction(self):
        complaint = file_complaint(JUAN, ACME, domain.JurisdictionCategory.WAGES_AND_PAY, date(2022, 6, 1))
        updated, sena = assign_to_sena(complaint, "S1", Role.SENA_OFFICER)
        assert updated.stage_status is ComplaintStage.ASSIGNED_TO_SENA
        assert updated.assigned_sena_officer == "S1"
        assert sena.administering_officer == "S1"
        assert sena.outcome is None
        assert sena.dispute_id == complaint.dispute_id

    def test_already_assigned(self):
        complaint = file_complaint(JUAN, ACME, domain.JurisdictionCategory.WAGES_AND_PAY, date(2022, 6, 1))
        updated, _ = assign_to_sena(complaint, "S1", Role.SENA_OFFICER)
        with pytest.raises(AlreadyAssigned):
            assign_to_sena(updated, "S2", Role.SENA_OFFICER)

    def test_wrong_role(self):
        complaint = file_complaint(JUAN, ACME, domain.JurisdictionCategory.WAGES_AND_PAY, date(2022, 6, 1))
        with pytest.raises(WrongRole):
            assign_to_sena(complaint, "A1", Role.LABOR_ARBITER)

    def test_transfer_keeps_every_party_field(self):
        rng = random.Random(5)
        alphabet = "abcdefgh éñXYZ"
        for _ in range(100):
            def word():
                return "x" + "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 20)))
            complainant = PartyIdentity(word(), word(), word())
            respondent = PartyIdentity(word(), word(), word())
            complaint = file_complaint(
                complainant, respondent, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1)
            )
            updated, sena = assign_to_sena(complaint, "S1", Role.SENA_OFFICER)
            assert sena.dispute_id == complaint.dispute_id
            for before, after in ((complaint.complainant, updated.complainant),
                                  (complaint.respondent, updated.respondent)):
                assert before.full_name.encode() == after.full_name.encode()
                assert before.address.encode() == after.address.encode()
                assert before.contact.encode() == after.contact.encode()


class TestConcludeSena:
    def test_settled(self):
        sena = assign_to_sena(
            file_complaint(JUAN, ACME, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1)),
            "S1", Role.SENA_OFFICER,
        )[1]
        concluded = conclude_sena(sena, SenaOutcome.SETTLED, minute())
        assert concluded.outcome is SenaOutcome.SETTLED
        assert len(concluded.conferences) == 1

    def test_already_concluded(self):
        sena = make_referred_sena()
        with pytest.raises(AlreadyConcluded):
            conclude_sena(sena, SenaOutcome.SETTLED, minute())

    def test_empty_minute(self):
        sena = assign_to_sena(
            file_complaint(JUAN, ACME, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1)),
            "S1", Role.SENA_OFFICER,
        )[1]
        with pytest.raises(EmptyMinute):
            conclude_sena(sena, SenaOutcome.SETTLED, minute(text="  "))

    def test_referred_enables_docketing(self):
        sena = make_referred_sena()
        case, _ = docket_case(
            sena, CaseType.REGULAR, OFFICES, seed=0, loads={},
            docketed_on=date(2022, 6, 1), sequence=1, actor="clerk",
        )
        assert case.status is CaseStatus.DOCKETED


class TestRaffle:
    def test_unique_minimum_wins_for_any_seed(self):
        for seed in range(20):
            assert raffle_office(OFFICES, {1: 3, 2: 1, 3: 2}, seed) == 2

    def test_seeded_tie_break(self):
        offices = [Office(1, "A"), Office(2, "B")]
        # candidates sorted [1, 2]; 7 mod 2 = 1 -> office 2
        assert raffle_office(offices, {1: 1, 2: 1}, 7) == 2

    def test_inactive_offices_excluded(self):
        offices = [Office(1, "A", active=False), Office(2, "B")]
        assert raffle_office(offices, {1: 0, 2: 9}, 0) == 2

    def test_no_active_office(self):
        with pytest.raises(NoActiveOffice):
            raffle_office([Office(1, "A", active=False)], {}, 0)

    def test_deterministic(self):
        rng = random.Random(11)
        for _ in range(200):
            offices = [Office(n, f"O{n}", active=rng.random() > 0.2) for n in range(1, rng.randrange(2, 9))]
            if not any(o.active for o in offices):
                offices[0] = replace(offices[0], active=True)
            loads = {o.office_id: rng.randrange(0, 4) for o in offices}
            seed = rng.randrange(0, 1000)
            first = raffle_office(offices, loads, seed)
            assert raffle_office(list(offices), dict(loads), seed) == first
            active_loads = {o.office_id: loads[o.office_id] for o in offices if o.active}
            assert active_loads[first] == min(active_loads.values())


class TestCaseNumber:
    def test_format(self):
        assert format_case_number(date(2022, 6, 1), 1, CaseType.REGULAR) == "RAB-IV-06-00001-22"

    def test_ofw_suffix(self):
        assert format_case_number(date(2023, 12, 5), 123, CaseType.OFW) == "RAB-IV-12-00123-23-OFW"

    def test_sequence_padding(self):
        assert format_case_number(date(2022, 1, 31), 98765, CaseType.REGULAR) == "RAB-IV-01-98765-22"


class TestDocketCase:
    def test_docket_from_referred(self):
        case, event = docket_case(
            make_referred_sena(), CaseType.OFW, OFFICES, seed=4, loads={1: 1, 2: 1, 3: 1},
            docketed_on=date(2022, 6, 15), sequence=7, actor="clerk", at=1_654_100_000,
        )
        assert case.case_number == "RAB-IV-06-00007-22-OFW"
        assert case.status is CaseStatus.DOCKETED
        assert len(case.raffle_history) == 1
        assert case.raffle_history[0].office_id == case.office_id
        assert event.action == "docket"
        assert event.dispute_id == case.dispute_id

    def test_settled_sena_not_docketable(self):
        sena = assign_to_sena(
            file_complaint(JUAN, ACME, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1)),
            "S1", Role.SENA_OFFICER,
        )[1]
        settled = conclude_sena(sena, SenaOutcome.SETTLED, minute())
        with pytest.raises(NotReferred):
            docket_case(settled, CaseType.REGULAR, OFFICES, seed=0, loads={},
                        docketed_on=date(2022, 6, 1), sequence=1, actor="clerk")

    def test_open_sena_not_docketable(self):
        sena = assign_to_sena(
            file_complaint(JUAN, ACME, domain.JurisdictionCategory.MONEY_CLAIMS, date(2022, 6, 1)),
            "S1", Role.SENA_OFFICER,
        )[1]
        with pytest.raises(NotReferred):
            docket_case(sena, CaseType.REGULAR, OFFICES, seed=0, loads={},
                        docketed_on=date(2022, 6, 1), sequence=1, actor="clerk")


class TestReRaffle:
    def test_moves_office_and_appends_history(self):
        case = make_case(office_id=1)
        moved, event = re_raffle(case, 3, "inhibition", "ela", OFFICES, at=1_654_200_000)
        assert moved.office_id == 3
        assert moved.raffle_history[-1] == RaffleEntry(3, 1_654_200_000, "inhibition")
        assert moved.case_number == case.case_number
        assert (event.before, event.after) == ("1", "3")

    def test_same_office_rejected(self):
        with pytest.raises(SameOffice):
            re_raffle(make_case(office_id=1), 1, "why", "ela", OFFICES)

    def test_inactive_target_rejected(self):
        offices = [Office(1, "A"), Office(2, "B", active=False)]
        with pytest.raises(InactiveOffice):
            re_raffle(make_case(office_id=1), 2, "why", "ela", offices)
        with pytest.raises(InactiveOffice):
            re_raffle(make_case(office_id=1), 99, "why", "ela", offices)

    def test_archived_rejected(self):
        case = make_case(status=CaseStatus.ARCHIVED)
        with pytest.raises(CaseArchived):
            re_raffle(case, 2, "why", "ela", OFFICES)

    def test_everything_else_is_untouched(self):
        rng = random.Random(3)
        statuses = [s for s in CaseStatus if s is not CaseStatus.ARCHIVED]
        for _ in range(200):
            case = LaborCase(
                case_number=f"RAB-IV-06-{rng.randrange(1, 99999):05d}-22",
                dispute_id=f"disp-{rng.randrange(1000)}",
                office_id=1,
                case_type=rng.choice(list(CaseType)),
                status=rng.choice(statuses),
                minutes=tuple(minute(f"m{i}") for i in range(rng.randrange(0, 4))),
                raffle_history=(RaffleEntry(1, 1_654_070_400, "initial raffle"),),
            )
            moved, _ = re_raffle(case, 3, "transfer", "ela", OFFICES)
            assert replace(moved, office_id=case.office_id,
                           raffle_history=case.raffle_history) == case


class TestUpdateStatus:
    def test_legal_edge(self):
        case = make_case()
        updated, event = update_status(case, CaseStatus.MANDATORY_CONFERENCE, minute(), "arb")
        assert updated.status is CaseStatus.MANDATORY_CONFERENCE
        assert len(updated.minutes) == 1
        assert (event.before, event.after) == ("Docketed", "MandatoryConference")

    def test_illegal_edge_names_the_edge(self):
        with pytest.raises(IllegalTransition, match="Docketed -> Decided"):
            update_status(make_case(), CaseStatus.DECIDED, minute(), "arb")

    def test_empty_minute(self):
        with pytest.raises(EmptyMinute):
            update_status(make_case(), CaseStatus.MANDATORY_CONFERENCE, minute(text=""), "arb")

    def test_exhaustive_edge_set(self):
        # Independent statement of the legal edges, straight from the contract.
        allowed = {
            ("Docketed", "MandatoryConference"),
            ("Docketed", "Dismissed"),
            ("Docketed", "Withdrawn"),
            ("MandatoryConference", "MandatoryConference"),
            ("MandatoryConference", "SubmittedForDecision"),
            ("MandatoryConference", "Settled"),
            ("MandatoryConference", "Dismissed"),
            ("MandatoryConference", "Withdrawn"),
            ("SubmittedForDecision", "Decided"),
            ("Decided", "Archived"),
            ("Settled", "Archived"),
            ("Dismissed", "Archived"),
            ("Withdrawn", "Archived"),
        }
        observed = set()
        for source in CaseStatus:
            for target in CaseStatus:
                case = make_case(status=source)
                try:
                    update_status(case, target, minute(), "arb")
                except IllegalTransition:
                    continue
                observed.add((source.value, target.value))
        assert observed == allowed

    def test_every_status_reachable_from_docketed(self):
        reachable = {CaseStatus.DOCKETED}
        frontier = [CaseStatus.DOCKETED]
        while frontier:
            nxt = domain.LEGAL_TRANSITIONS[frontier.pop()] - reachable
            reachable |= nxt
            frontier.extend(nxt)
        assert reachable == set(CaseStatus)

    def test_archived_is_absorbing(self):
        assert domain.LEGAL_TRANSITIONS[CaseStatus.ARCHIVED] == frozenset()


class TestAuditTrail:
    def test_sequences_strictly_increase(self):
        trail = AuditTrail()
        for n in range(10):
            event = trail.append(AuditEvent(0, "u", "act", "d", None, None, at=n))
            assert event.seq == n + 1
        seqs = [e.seq for e in trail.events]
        assert seqs == list(range(1, 11))

    def test_concurrent_appends_never_reuse_a_sequence(self):
        trail = AuditTrail()

        def worker():
            for _ in range(100):
                trail.append(AuditEvent(0, "u", "act", "d", None, None, at=0))

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        seqs = [e.seq for e in trail.events]
        assert seqs == list(range(1, 801))


class TestOpenCaseLoads:
    def test_counts_only_open_statuses(self):
        offices = [Office(1, "A"), Office(2, "B")]
        cases = [
            make_case(status=CaseStatus.DOCKETED, office_id=1, case_number="c1"),
            make_case(status=CaseStatus.DECIDED, office_id=1, case_number="c2"),
            make_case(status=CaseStatus.MANDATORY_CONFERENCE, office_id=2, case_number="c3"),
            make_case(status=CaseStatus.ARCHIVED, office_id=2, case_number="c4"),
        ]
        assert domain.open_case_loads(cases, offices) == {1: 1, 2: 1}


class TestDefaultOffices:
    def test_eight_offices_one_executive(self):
        offices = domain.default_offices()
        assert len(offices) == 8
        assert sum(1 for o in offices if o.is_executive) == 1
        assert all(o.active for o in offices)

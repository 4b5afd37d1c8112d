"""Deterministic demo docket: one account per role and eight disputes spanning
every lifecycle stage.

Seeding drives the real application service with a fixed clock, fixed ids,
and fixed raffle seeds, so repeated seedings of a fresh store produce the
same case numbers, offices, and statuses. Used by the UI and by tests.
"""

from __future__ import annotations

import itertools
from datetime import date

from .domain import CaseStatus, CaseType, JurisdictionCategory, PartyIdentity, Role, SenaOutcome
from .service import DocketService, create_user
from .store import RecordStore

# 2022-06-01T08:00:00Z; every clock draw ticks ten seconds, which keeps the
# whole script inside one morning and well inside the session idle timeout.
DEMO_EPOCH = 1_654_070_400

DEMO_USERS = [
    # (username, password, role, office_id)
    ("ela", "executive-2022", Role.EXECUTIVE_LABOR_ARBITER, 1),
    ("complaints1", "front-desk-2022", Role.COMPLAINT_OFFICER, None),
    ("sena1", "single-entry-2022", Role.SENA_OFFICER, None),
    ("arbiter2", "arbiter-two-2022", Role.LABOR_ARBITER, 2),
    ("arbiter3", "arbiter-three-2022", Role.LABOR_ARBITER, 3),
    ("laa2", "associate-two-2022", Role.ARBITRATION_ASSOCIATE, 2),
]

_PARTIES = [
    ("Juan Dela Cruz", "Acme Manufacturing Corporation"),
    ("Maria Clara Santos", "Golden Harvest Foods Incorporated"),
    ("Jose Protacio Mercado", "Horizon Logistics Corporation"),
    ("Andres Bonifacio", "Katipunan Textile Mills"),
    ("Gabriela Silang", "Ilocos Trading Company"),
    ("Emilio Jacinto", "Tondo Shipyard Services"),
    ("Melchora Aquino", "Balintawak Bakery Corporation"),
    ("Apolinario Mabini", "Laguna Copra Millers Incorporated"),
]

_NATURES = [
    JurisdictionCategory.TERMINATION_DISPUTE,
    JurisdictionCategory.WAGES_AND_PAY,
    JurisdictionCategory.MONEY_CLAIMS,
    JurisdictionCategory.UNFAIR_LABOR_PRACTICE,
    JurisdictionCategory.TERMINATION_DISPUTE,
    JurisdictionCategory.HOURS_OF_WORK,
    JurisdictionCategory.MONEY_CLAIMS,
    JurisdictionCategory.OTHER_PROVIDED_BY_LAW,
]

# Every full name the demo writes; tests scan the store files for these.
DEMO_PARTY_NAMES = [name for pair in _PARTIES for name in pair]


class _Ticker:
    def __init__(self, start: int) -> None:
        self._now = start

    def __call__(self) -> float:
        self._now += 10
        return float(self._now)


def seed_demo(store: RecordStore) -> dict:
    """Populate a fresh store with the demo docket. Returns a summary."""
    if store.user_by_username("ela") is not None:
        raise ValueError("store already holds demo data")

    counter = itertools.count(1)
    svc = DocketService(
        store,
        clock=_Ticker(DEMO_EPOCH),
        id_factory=lambda: f"D{next(counter):04d}",
    )
    for username, password, role, office_id in DEMO_USERS:
        create_user(store, username, password, role, office_id)
    tokens = {
        username: svc.login(username, password).token
        for username, password, _, _ in DEMO_USERS
    }
    sena_id = store.user_by_username("sena1").user_id

    complaints = []
    for index, ((complainant, respondent), nature) in enumerate(zip(_PARTIES, _NATURES)):
        complaints.append(
            svc.file_complaint(
                tokens["complaints1"],
                PartyIdentity(complainant, f"{100 + index} Real Street, Calamba", "0917-555-01{:02d}".format(index)),
                PartyIdentity(respondent, f"{index + 1} Industrial Park Avenue", "049-545-10{:02d}".format(index)),
                nature,
                date(2022, 5, 9 + index),
            )
        )

    # Dispute 1 stays Filed. Disputes 2..8 go to conciliation.
    for complaint in complaints[1:]:
        svc.assign_complaint(tokens["complaints1"], complaint.dispute_id, sena_id)

    # Dispute 3 settles amicably; 4..8 get referred to arbitration.
    svc.conclude_sena(
        tokens["sena1"], complaints[2].dispute_id, SenaOutcome.SETTLED,
        "Parties reached an amicable settlement at the second conference.",
    )
    for complaint in complaints[3:]:
        svc.conclude_sena(
            tokens["sena1"], complaint.dispute_id, SenaOutcome.REFERRED_TO_ARBITRATION,
            "Conciliation failed after two conferences; referred for arbitration.",
        )

    # Seeds chosen against the deterministic raffle: offices 2, 3, 1, 4.
    docket_plan = [
        (complaints[3], CaseType.REGULAR, 1),
        (complaints[4], CaseType.OFW, 1),
        (complaints[5], CaseType.REGULAR, 0),
        (complaints[6], CaseType.REGULAR, 0),
    ]
    cases = [
        svc.docket_case(tokens["sena1"], complaint.dispute_id, case_type, seed)
        for complaint, case_type, seed in docket_plan
    ]

    # Executive moves the office-1 case to office 2.
    cases[2] = svc.re_raffle_case(
        tokens["ela"], cases[2].case_number, 2, "arbiter inhibition"
    )

    def advance(token: str, case, status: CaseStatus, minute: str):
        return svc.update_case_status(token, case.case_number, status, minute)

    cases[0] = advance(
        tokens["arbiter2"], cases[0], CaseStatus.MANDATORY_CONFERENCE,
        "Initial mandatory conference set; notices served on both parties.",
    )
    cases[1] = advance(
        tokens["arbiter3"], cases[1], CaseStatus.MANDATORY_CONFERENCE,
        "First conference held; position papers required within ten days.",
    )
    cases[1] = advance(
        tokens["arbiter3"], cases[1], CaseStatus.SUBMITTED_FOR_DECISION,
        "Position papers received from both parties; submitted for decision.",
    )
    cases[1] = advance(
        tokens["arbiter3"], cases[1], CaseStatus.DECIDED,
        "Decision rendered in favor of the complainant with monetary award.",
    )
    cases[2] = advance(
        tokens["laa2"], cases[2], CaseStatus.MANDATORY_CONFERENCE,
        "Conference rescheduled after transfer; parties re-notified.",
    )
    cases[3] = advance(
        tokens["ela"], cases[3], CaseStatus.DISMISSED,
        "Dismissed for lack of merit upon review of the filed complaint.",
    )

    return {
        "users": [
            {"username": u, "password": p, "role": r.value, "office_id": o}
            for u, p, r, o in DEMO_USERS
        ],
        "case_numbers": [case.case_number for case in cases],
        "tracker_example": cases[0].case_number,
        "dispute_ids": [complaint.dispute_id for complaint in complaints],
    }

"""Role-based access control: the (role, action) matrix and office scoping.

Deny by default: any pair absent from the matrix is denied. Arbiter-side
actions are additionally scoped to the session's own office unless the role
is ExecutiveLaborArbiter, who acts across all offices.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .domain import Role


class Action(Enum):
    FILE_COMPLAINT = "FileComplaint"
    ASSIGN_SENA = "AssignSena"
    MANAGE_SENA = "ManageSena"
    VIEW_OFFICE_CASES = "ViewOfficeCases"
    UPDATE_CASE_STATUS = "UpdateCaseStatus"
    RE_RAFFLE = "ReRaffle"
    GENERATE_REPORT = "GenerateReport"
    TRACK_STATUS = "TrackStatus"
    ADMIN_USERS = "AdminUsers"


_ARBITER_ACTIONS = frozenset(
    {Action.VIEW_OFFICE_CASES, Action.UPDATE_CASE_STATUS, Action.GENERATE_REPORT}
)

ACCESS_MATRIX: dict[Role, frozenset[Action]] = {
    Role.COMPLAINT_OFFICER: frozenset({Action.FILE_COMPLAINT, Action.ASSIGN_SENA}),
    Role.SENA_OFFICER: frozenset({Action.MANAGE_SENA}),
    Role.LABOR_ARBITER: _ARBITER_ACTIONS,
    Role.ARBITRATION_ASSOCIATE: _ARBITER_ACTIONS,
    Role.EXECUTIVE_LABOR_ARBITER: _ARBITER_ACTIONS
    | frozenset({Action.RE_RAFFLE, Action.ADMIN_USERS}),
    Role.PUBLIC: frozenset({Action.TRACK_STATUS}),
}

# Actions whose targets are confined to the session's own office.
OFFICE_SCOPED_ACTIONS = _ARBITER_ACTIONS


def is_allowed(role: Role, action: Action) -> bool:
    """The raw matrix decision, ignoring office scope."""
    return action in ACCESS_MATRIX.get(role, frozenset())


def authorize(
    role: Role,
    action: Action,
    session_office: Optional[int] = None,
    target_office: Optional[int] = None,
) -> bool:
    """Full decision: matrix plus office scoping.

    For office-scoped actions a non-executive role must name a target office
    equal to its own; the executive labor arbiter may target any office,
    including none (meaning all offices).
    """
    if not is_allowed(role, action):
        return False
    if action in OFFICE_SCOPED_ACTIONS and role is not Role.EXECUTIVE_LABOR_ARBITER:
        return target_office is not None and target_office == session_office
    return True

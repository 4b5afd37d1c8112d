from docketd.access import ACCESS_MATRIX, Action, authorize, is_allowed
from docketd.domain import Role

# Independent statement of the whole matrix: one row per role, the exact
# allowed set, everything else denied.
EXPECTED = {
    Role.COMPLAINT_OFFICER: {"FileComplaint", "AssignSena"},
    Role.SENA_OFFICER: {"ManageSena"},
    Role.LABOR_ARBITER: {"ViewOfficeCases", "UpdateCaseStatus", "GenerateReport"},
    Role.ARBITRATION_ASSOCIATE: {"ViewOfficeCases", "UpdateCaseStatus", "GenerateReport"},
    Role.EXECUTIVE_LABOR_ARBITER: {
        "ViewOfficeCases",
        "UpdateCaseStatus",
        "GenerateReport",
        "ReRaffle",
        "AdminUsers",
    },
    Role.PUBLIC: {"TrackStatus"},
}


def test_matrix_is_exactly_the_specified_table():
    for role in Role:
        for action in Action:
            expected = action.value in EXPECTED[role]
            assert is_allowed(role, action) == expected, (role, action)


def test_matrix_dimensions():
    assert len(list(Role)) == 6
    assert len(list(Action)) == 9
    assert set(ACCESS_MATRIX) == set(Role)


def test_office_scope_confines_arbiters():
    assert authorize(Role.LABOR_ARBITER, Action.VIEW_OFFICE_CASES, 2, 2)
    assert not authorize(Role.LABOR_ARBITER, Action.VIEW_OFFICE_CASES, 2, 3)
    assert not authorize(Role.LABOR_ARBITER, Action.VIEW_OFFICE_CASES, 2, None)
    assert authorize(Role.ARBITRATION_ASSOCIATE, Action.UPDATE_CASE_STATUS, 4, 4)
    assert not authorize(Role.ARBITRATION_ASSOCIATE, Action.UPDATE_CASE_STATUS, 4, 1)


def test_executive_crosses_offices():
    assert authorize(Role.EXECUTIVE_LABOR_ARBITER, Action.VIEW_OFFICE_CASES, 1, 7)
    assert authorize(Role.EXECUTIVE_LABOR_ARBITER, Action.GENERATE_REPORT, 1, None)
    assert authorize(Role.EXECUTIVE_LABOR_ARBITER, Action.RE_RAFFLE, 1, None)


def test_unscoped_actions_ignore_offices():
    assert authorize(Role.COMPLAINT_OFFICER, Action.FILE_COMPLAINT, None, None)
    assert authorize(Role.SENA_OFFICER, Action.MANAGE_SENA, None, 5)


def test_deny_by_default_examples():
    assert not authorize(Role.SENA_OFFICER, Action.UPDATE_CASE_STATUS, 2, 2)
    assert not authorize(Role.PUBLIC, Action.VIEW_OFFICE_CASES, None, 1)
    assert not authorize(Role.EXECUTIVE_LABOR_ARBITER, Action.FILE_COMPLAINT, 1, None)

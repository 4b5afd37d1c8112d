import { ApiClient, ApiError, LaborCase, Office } from '../api';
import { el, textCell } from '../dom';
import { renderAccessDenied } from './denied';

export interface CaseMaintenanceModel {
  cases: LaborCase[];
  // Present only for the executive, who may re-raffle across offices.
  offices?: Office[];
}

export interface CaseMaintenanceActions {
  updateStatus(caseNumber: string, status: string, minute: string): void;
  reRaffle?(caseNumber: string, officeId: number, reason: string): void;
}

function statusForm(labor: LaborCase, actions: CaseMaintenanceActions): HTMLElement {
  const select = el('select', { 'data-role': 'status-pick' });
  // Only the legal next statuses the server advertises; nothing else is
  // selectable, so illegal transitions are impossible by construction.
  for (const status of labor.legal_next_statuses) {
    select.append(el('option', { value: status }, [status]));
  }
  const minute = el('textarea', {
    'data-role': 'minute-text',
    placeholder: 'Minutes of the hearing (required)',
  });
  const submit = el('button', { type: 'submit', 'data-role': 'status-submit' }, [
    'Update status',
  ]) as HTMLButtonElement;
  submit.disabled = true;
  minute.addEventListener('input', () => {
    submit.disabled = minute.value.trim().length === 0;
  });
  const form = el('form', { class: 'status-form' }, [select, minute, submit]);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    if (minute.value.trim().length === 0) return;
    actions.updateStatus(labor.case_number, select.value, minute.value);
  });
  if (labor.legal_next_statuses.length === 0) {
    return el('p', { class: 'terminal-note' }, ['Archived: no further changes.']);
  }
  return form;
}

function reRaffleForm(
  labor: LaborCase,
  offices: Office[],
  actions: CaseMaintenanceActions,
): HTMLElement {
  const pick = el('select', { 'data-role': 'office-pick' });
  for (const office of offices) {
    if (!office.active || office.office_id === labor.office_id) continue;
    pick.append(
      el('option', { value: String(office.office_id) }, [
        `Office ${office.office_id} (${office.arbiter_name})`,
      ]),
    );
  }
  const reason = el('input', { placeholder: 'Reason for re-raffle' });
  const button = el('button', { type: 'button' }, ['Re-raffle']);
  button.addEventListener('click', () => {
    if (pick.value && reason.value.trim()) {
      actions.reRaffle?.(labor.case_number, Number(pick.value), reason.value);
    }
  });
  return el('div', { class: 'reraffle-form' }, [pick, reason, button]);
}

function minutesList(labor: LaborCase): HTMLElement {
  const items = labor.minutes.map((minute) =>
    el('li', {}, [
      `${new Date(minute.recorded_on * 1000).toISOString().slice(0, 10)}: ${minute.text}`,
    ]),
  );
  return items.length
    ? el('ul', { class: 'minutes' }, items)
    : el('p', { class: 'minutes-empty' }, ['No minutes recorded yet.']);
}

function caseRow(
  labor: LaborCase,
  model: CaseMaintenanceModel,
  actions: CaseMaintenanceActions,
): HTMLElement {
  const details = [
    textCell(labor.case_number),
    textCell(String(labor.office_id)),
    textCell(labor.case_type),
    textCell(labor.status),
    textCell(labor.complaint ? labor.complaint.complainant.full_name : ''),
    textCell(labor.complaint ? labor.complaint.respondent.full_name : ''),
  ];
  const controls = el('td', {}, [statusForm(labor, actions)]);
  if (actions.reRaffle && model.offices && labor.status !== 'Archived') {
    controls.append(reRaffleForm(labor, model.offices, actions));
  }
  const row = el('tr', { 'data-case': labor.case_number, 'data-office': String(labor.office_id) },
    [...details, el('td', {}, [minutesList(labor)]), controls]);
  return row;
}

export function renderCaseMaintenance(
  model: CaseMaintenanceModel,
  actions: CaseMaintenanceActions,
): HTMLElement {
  const header = el('tr', {}, [
    ...['Case number', 'Office', 'Type', 'Status', 'Complainant', 'Respondent', 'Minutes', 'Actions'].map(
      (label) => el('th', {}, [label]),
    ),
  ]);
  const body = el('tbody', {});
  for (const labor of model.cases) body.append(caseRow(labor, model, actions));
  return el('section', { class: 'card', 'data-page': 'cases' }, [
    el('h2', {}, ['Case Maintenance']),
    el('table', {}, [el('thead', {}, [header]), body]),
  ]);
}

// Fixture flow entry point. Arbiters see their own office; the executive
// passes officeId undefined to see everything plus re-raffle controls.
export async function caseMaintenanceView(
  client: ApiClient,
  officeId: number | undefined,
  executive: boolean,
  onRefresh?: (view: HTMLElement) => void,
): Promise<HTMLElement> {
  let cases: LaborCase[];
  let offices: Office[] | undefined;
  try {
    cases = await client.listCases(officeId);
    offices = executive ? await client.listOffices() : undefined;
  } catch (error) {
    if (error instanceof ApiError && (error.status === 403 || error.status === 401)) {
      return renderAccessDenied(error.message);
    }
    throw error;
  }
  const refresh = async () => {
    onRefresh?.(await caseMaintenanceView(client, officeId, executive, onRefresh));
  };
  const actions: CaseMaintenanceActions = {
    updateStatus: async (caseNumber, status, minute) => {
      await client.updateStatus(caseNumber, status, minute);
      await refresh();
    },
    reRaffle: executive
      ? async (caseNumber, target, reason) => {
          await client.reRaffle(caseNumber, target, reason);
          await refresh();
        }
      : undefined,
  };
  return renderCaseMaintenance({ cases, offices }, actions);
}

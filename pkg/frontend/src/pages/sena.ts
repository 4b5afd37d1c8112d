import { ApiClient, ApiError, SenaCase } from '../api';
import { el, textCell } from '../dom';
import { renderAccessDenied } from './denied';

export interface SenaListActions {
  conclude(disputeId: string, outcome: string, minute: string): void;
  docket(disputeId: string, caseType: 'Regular' | 'OFW'): void;
}

function concludeForm(sena: SenaCase, actions: SenaListActions): HTMLElement {
  const outcome = el('select', { 'data-role': 'outcome-pick' }, []);
  outcome.append(el('option', { value: 'Settled' }, ['Settled']));
  outcome.append(el('option', { value: 'ReferredToArbitration' }, ['Referred to arbitration']));
  const minute = el('textarea', { placeholder: 'Conference minutes (required)' });
  const submit = el('button', { type: 'submit' }, ['Conclude']) as HTMLButtonElement;
  submit.disabled = true;
  minute.addEventListener('input', () => {
    submit.disabled = minute.value.trim().length === 0;
  });
  const form = el('form', { class: 'conclude-form' }, [outcome, minute, submit]);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    if (minute.value.trim()) actions.conclude(sena.dispute_id, outcome.value, minute.value);
  });
  return form;
}

function docketControls(sena: SenaCase, actions: SenaListActions): HTMLElement {
  const typePick = el('select', { 'data-role': 'case-type-pick' }, []);
  typePick.append(el('option', { value: 'Regular' }, ['Regular']));
  typePick.append(el('option', { value: 'OFW' }, ['OFW']));
  const button = el('button', { type: 'button' }, ['Docket as labor case']);
  button.addEventListener('click', () => {
    actions.docket(sena.dispute_id, typePick.value as 'Regular' | 'OFW');
  });
  return el('span', { class: 'docket-controls' }, [typePick, button]);
}

function senaRow(sena: SenaCase, actions: SenaListActions): HTMLElement {
  let action: HTMLElement;
  if (sena.outcome === null) {
    action = concludeForm(sena, actions);
  } else if (sena.outcome === 'ReferredToArbitration') {
    action = docketControls(sena, actions);
  } else {
    action = el('span', {}, ['Settled; no further action.']);
  }
  return el('tr', { 'data-dispute': sena.dispute_id }, [
    textCell(sena.dispute_id),
    textCell(sena.complaint ? sena.complaint.complainant.full_name : ''),
    textCell(sena.complaint ? sena.complaint.respondent.full_name : ''),
    textCell(sena.complaint ? sena.complaint.nature : ''),
    textCell(String(sena.conferences.length)),
    textCell(sena.outcome ?? 'open'),
    el('td', {}, [action]),
  ]);
}

export function renderSenaList(senaCases: SenaCase[], actions: SenaListActions): HTMLElement {
  const header = el('tr', {}, [
    ...['Dispute', 'Complainant', 'Respondent', 'Nature', 'Conferences', 'Outcome', 'Action'].map(
      (label) => el('th', {}, [label]),
    ),
  ]);
  const body = el('tbody', {});
  for (const sena of senaCases) body.append(senaRow(sena, actions));
  return el('section', { class: 'card', 'data-page': 'sena' }, [
    el('h2', {}, ['SEnA Conciliations']),
    el('table', {}, [el('thead', {}, [header]), body]),
  ]);
}

export async function senaListView(
  client: ApiClient,
  onRefresh?: (view: HTMLElement) => void,
): Promise<HTMLElement> {
  let senaCases: SenaCase[];
  try {
    senaCases = await client.mySena();
  } catch (error) {
    if (error instanceof ApiError && (error.status === 403 || error.status === 401)) {
      return renderAccessDenied(error.message);
    }
    throw error;
  }
  const refresh = async () => {
    onRefresh?.(await senaListView(client, onRefresh));
  };
  return renderSenaList(senaCases, {
    conclude: async (disputeId, outcome, minute) => {
      await client.concludeSena(disputeId, outcome, minute);
      await refresh();
    },
    docket: async (disputeId, caseType) => {
      await client.docketCase(disputeId, caseType);
      await refresh();
    },
  });
}

import { ApiClient, ApiError, Complaint, OfficerRef } from '../api';
import { el, textCell } from '../dom';
import { renderAccessDenied } from './denied';

export interface ComplaintsFolderModel {
  complaints: Complaint[];
  officers: OfficerRef[];
}

export interface ComplaintsFolderActions {
  assign(disputeId: string, officerId: string): void;
  file(input: {
    complainant: { full_name: string; address: string; contact: string };
    respondent: { full_name: string; address: string; contact: string };
    nature: string;
    filed_on: string;
  }): void;
}

const NATURES = [
  'UnfairLaborPractice',
  'TerminationDispute',
  'WagesAndPay',
  'HoursOfWork',
  'MoneyClaims',
  'OtherProvidedByLaw',
];

function officerName(officers: OfficerRef[], userId: string | null): string {
  if (!userId) return 'unassigned';
  const hit = officers.find((o) => o.user_id === userId);
  return hit ? hit.username : userId;
}

function assignControls(
  complaint: Complaint,
  officers: OfficerRef[],
  actions: ComplaintsFolderActions,
): HTMLElement {
  const select = el('select', { 'data-role': 'officer-pick' });
  for (const officer of officers) {
    select.append(el('option', { value: officer.user_id }, [officer.username]));
  }
  const button = el('button', { type: 'button' }, ['Assign to SEnA']);
  button.addEventListener('click', () => {
    if (select.value) actions.assign(complaint.dispute_id, select.value);
  });
  return el('span', { class: 'assign-controls' }, [select, button]);
}

function complaintRow(
  complaint: Complaint,
  officers: OfficerRef[],
  actions: ComplaintsFolderActions,
): HTMLTableRowElement {
  const assignment =
    complaint.stage_status === 'Filed'
      ? assignControls(complaint, officers, actions)
      : el('span', { 'data-role': 'assigned-officer' }, [
          officerName(officers, complaint.assigned_sena_officer),
        ]);
  const row = el('tr', { 'data-dispute': complaint.dispute_id }, [
    textCell(complaint.dispute_id),
    textCell(complaint.complainant.full_name),
    textCell(complaint.respondent.full_name),
    textCell(complaint.nature),
    textCell(complaint.filed_on),
    textCell(complaint.stage_status),
    el('td', {}, [assignment]),
  ]);
  return row;
}

function fileComplaintForm(actions: ComplaintsFolderActions): HTMLElement {
  const complainant = el('input', { placeholder: 'Complainant full name', 'data-role': 'complainant-name' });
  const complainantAddress = el('input', { placeholder: 'Complainant address' });
  const complainantContact = el('input', { placeholder: 'Complainant contact' });
  const respondent = el('input', { placeholder: 'Respondent full name', 'data-role': 'respondent-name' });
  const respondentAddress = el('input', { placeholder: 'Respondent address' });
  const respondentContact = el('input', { placeholder: 'Respondent contact' });
  const nature = el('select', { 'data-role': 'nature' });
  for (const value of NATURES) nature.append(el('option', { value }, [value]));
  const filedOn = el('input', { type: 'date', 'data-role': 'filed-on' });
  const submit = el('button', { type: 'submit' }, ['File complaint']);

  const form = el('form', { class: 'file-complaint' }, [
    el('h3', {}, ['File a new complaint']),
    complainant, complainantAddress, complainantContact,
    respondent, respondentAddress, respondentContact,
    nature, filedOn, submit,
  ]);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    actions.file({
      complainant: {
        full_name: complainant.value,
        address: complainantAddress.value,
        contact: complainantContact.value,
      },
      respondent: {
        full_name: respondent.value,
        address: respondentAddress.value,
        contact: respondentContact.value,
      },
      nature: nature.value,
      filed_on: filedOn.value,
    });
  });
  return form;
}

export function renderComplaintsFolder(
  model: ComplaintsFolderModel,
  actions: ComplaintsFolderActions,
): HTMLElement {
  const header = el('tr', {}, [
    ...['Dispute', 'Complainant', 'Respondent', 'Nature', 'Filed', 'Stage', 'SEnA officer'].map(
      (label) => el('th', {}, [label]),
    ),
  ]);
  const body = el('tbody', {});
  for (const complaint of model.complaints) {
    body.append(complaintRow(complaint, model.officers, actions));
  }
  return el('section', { class: 'card', 'data-page': 'complaints' }, [
    el('h2', {}, ['Complaints Folder']),
    el('table', {}, [el('thead', {}, [header]), body]),
    fileComplaintForm(actions),
  ]);
}

// Fixture flow entry point: fetch, render, and wire re-fetching mutations.
export async function complaintsFolderView(
  client: ApiClient,
  onRefresh?: (view: HTMLElement) => void,
): Promise<HTMLElement> {
  let complaints: Complaint[];
  let officers: OfficerRef[];
  try {
    [complaints, officers] = await Promise.all([
      client.listComplaints(),
      client.listOfficers('SenaOfficer'),
    ]);
  } catch (error) {
    if (error instanceof ApiError && (error.status === 403 || error.status === 401)) {
      return renderAccessDenied(error.message);
    }
    throw error;
  }
  const actions: ComplaintsFolderActions = {
    assign: async (disputeId, officerId) => {
      await client.assignComplaint(disputeId, officerId);
      onRefresh?.(await complaintsFolderView(client, onRefresh));
    },
    file: async (input) => {
      await client.fileComplaint(input);
      onRefresh?.(await complaintsFolderView(client, onRefresh));
    },
  };
  return renderComplaintsFolder({ complaints, officers }, actions);
}

import { ApiClient, ApiError } from '../api';
import { el } from '../dom';
import { renderAccessDenied } from './denied';

const REMARKS = [
  'Docketed',
  'MandatoryConference',
  'SubmittedForDecision',
  'Decided',
  'Settled',
  'Dismissed',
  'Withdrawn',
  'Archived',
];

export interface ReportsFormOptions {
  executive: boolean;
  officeId: number | null;
}

// POSTs the filters and hands the PDF bytes to the browser as a download.
export function renderReportsForm(client: ApiClient, options: ReportsFormOptions): HTMLElement {
  const caseType = el('select', { 'data-role': 'type-pick' }, []);
  caseType.append(el('option', { value: 'Regular' }, ['Regular']));
  caseType.append(el('option', { value: 'OFW' }, ['OFW']));
  const remark = el('select', { 'data-role': 'remark-pick' });
  for (const value of REMARKS) remark.append(el('option', { value }, [value]));
  const from = el('input', { type: 'date', 'data-role': 'from' });
  const to = el('input', { type: 'date', 'data-role': 'to' });
  const submit = el('button', { type: 'submit' }, ['Generate PDF']);
  const note = el('p', { class: 'report-note' }, ['']);

  const scope = el('select', { 'data-role': 'scope-pick' });
  if (options.executive) {
    scope.append(el('option', { value: 'ALL' }, ['All offices']));
  }
  if (options.officeId !== null) {
    scope.append(el('option', { value: String(options.officeId) }, [`Office ${options.officeId}`]));
  }

  const form = el('form', { class: 'reports-form' }, [caseType, remark, from, to, scope, submit, note]);
  form.addEventListener('submit', async (event) => {
    event.preventDefault();
    if (!from.value || !to.value) {
      note.textContent = 'Pick both period dates.';
      return;
    }
    try {
      const blob = await client.downloadReport({
        case_type: caseType.value as 'Regular' | 'OFW',
        remark: remark.value,
        from: from.value,
        to: to.value,
        office: scope.value === 'ALL' ? 'ALL' : Number(scope.value),
      });
      const link = el('a', {
        href: URL.createObjectURL(blob),
        download: `docket-report-${caseType.value}-${remark.value}.pdf`,
      });
      document.body.append(link);
      link.click();
      link.remove();
      note.textContent = 'Report downloaded.';
    } catch (error) {
      if (error instanceof ApiError) {
        note.textContent = `Report failed: ${error.message}`;
      } else {
        throw error;
      }
    }
  });
  return el('section', { class: 'card', 'data-page': 'reports' }, [
    el('h2', {}, ['Generate Report']),
    form,
  ]);
}

export async function reportsView(
  client: ApiClient,
  options: ReportsFormOptions,
): Promise<HTMLElement> {
  if (!options.executive && options.officeId === null) {
    return renderAccessDenied('reports need an arbiter-side account');
  }
  return renderReportsForm(client, options);
}

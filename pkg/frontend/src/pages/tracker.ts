import { ApiClient, TrackResult } from '../api';
import { el } from '../dom';

// The public page: no login, masked names only, friendly miss card.

export function renderTrackerCard(result: TrackResult): HTMLElement {
  return el('section', { class: 'card tracker-card', 'data-page': 'tracker' }, [
    el('h2', {}, ['Case Status']),
    el('dl', {}, [
      el('dt', {}, ['Case number']),
      el('dd', { 'data-role': 'case-number' }, [result.case_number]),
      el('dt', {}, ['Complainant']),
      el('dd', { 'data-role': 'complainant' }, [result.complainant]),
      el('dt', {}, ['Respondent']),
      el('dd', { 'data-role': 'respondent' }, [result.respondent]),
      el('dt', {}, ['Current status']),
      el('dd', { 'data-role': 'status' }, [result.status]),
      el('dt', {}, ['Last update']),
      el('dd', { 'data-role': 'last-update' }, [result.last_update]),
    ]),
  ]);
}

export function renderTrackerMiss(caseNumber: string): HTMLElement {
  return el('section', { class: 'card tracker-miss', 'data-page': 'tracker' }, [
    el('h2', {}, ['Case Status']),
    el('p', {}, [
      `No case was found under "${caseNumber}". Check the number on your filing receipt and try again.`,
    ]),
  ]);
}

export function renderTrackerSearch(onSearch: (caseNumber: string) => void): HTMLElement {
  const input = el('input', {
    placeholder: 'e.g. RAB-IV-06-00001-22',
    'data-role': 'tracker-input',
  });
  const button = el('button', { type: 'submit' }, ['Track case']);
  const form = el('form', { class: 'tracker-search' }, [input, button]);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    if (input.value.trim()) onSearch(input.value.trim());
  });
  return el('section', { class: 'card', 'data-page': 'tracker-search' }, [
    el('h2', {}, ['Track your case']),
    el('p', {}, ['Enter the case number to see its current status. No sign-in needed.']),
    form,
  ]);
}

// Fixture flow entry point: look a number up and render hit or miss.
export async function publicTrackerView(
  client: ApiClient,
  caseNumber: string,
): Promise<HTMLElement> {
  const result = await client.track(caseNumber);
  return result === null ? renderTrackerMiss(caseNumber) : renderTrackerCard(result);
}

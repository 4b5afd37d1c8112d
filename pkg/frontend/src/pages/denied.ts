import { el } from '../dom';

// Shown when the server answers 403 for a page's data. The server is the
// authority; the UI only reports the refusal.
export function renderAccessDenied(detail: string): HTMLElement {
  return el('section', { class: 'card denied', 'data-page': 'denied' }, [
    el('h2', {}, ['Access denied']),
    el('p', {}, [`Your account is not allowed to open this page (${detail}).`]),
  ]);
}

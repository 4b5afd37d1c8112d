import { describe, expect, it } from 'vitest';

import { publicTrackerView } from '../src/pages/tracker';
import { DEMO_FULL_NAMES, publicClient } from './helpers';

describe('public tracker', () => {
  it('renders a status card for a seeded case number', async () => {
    const view = await publicTrackerView(publicClient(), 'RAB-IV-06-00001-22');
    expect(view.classList.contains('tracker-card')).toBe(true);
    expect(view.querySelector('[data-role="case-number"]')?.textContent).toBe(
      'RAB-IV-06-00001-22',
    );
    expect(view.querySelector('[data-role="status"]')?.textContent).toBe(
      'MandatoryConference',
    );
    expect(view.querySelector('[data-role="complainant"]')?.textContent).toMatch(/^A\*+ B\*+$/);
    expect(view.querySelector('[data-role="last-update"]')?.textContent).toMatch(
      /^\d{4}-\d{2}-\d{2}$/,
    );
  });

  it('renders a friendly not-found card for garbage input', async () => {
    const view = await publicTrackerView(publicClient(), 'TOTAL-GARBAGE-42');
    expect(view.classList.contains('tracker-miss')).toBe(true);
    expect(view.textContent).toContain('No case was found');
  });

  it('never shows an unmasked name anywhere in the page', async () => {
    const client = publicClient();
    for (const caseNumber of [
      'RAB-IV-06-00001-22',
      'RAB-IV-06-00002-22-OFW',
      'RAB-IV-06-00003-22',
      'RAB-IV-06-00004-22',
    ]) {
      const view = await publicTrackerView(client, caseNumber);
      document.body.append(view);
      const text = document.body.textContent ?? '';
      const html = document.body.innerHTML;
      for (const name of DEMO_FULL_NAMES) {
        expect(text).not.toContain(name);
        expect(html).not.toContain(name);
      }
      // Words survive only as first-letter-plus-stars.
      expect(text).toMatch(/\w\*+/);
      view.remove();
    }
  });
});

import { describe, expect, it } from 'vitest';

import { complaintsFolderView } from '../src/pages/complaints';
import { DEMO_PASSWORDS, loginAs } from './helpers';

describe('complaints folder', () => {
  it('lists every filed complaint as a row for the complaint officer', async () => {
    const client = await loginAs('complaints1', DEMO_PASSWORDS.complaints1);
    const view = await complaintsFolderView(client);
    const rows = view.querySelectorAll('tbody tr');
    const complaints = await client.listComplaints();
    expect(rows.length).toBe(complaints.length);
    expect(rows.length).toBeGreaterThanOrEqual(8);
    const firstRow = view.querySelector('tr[data-dispute="D0001"]');
    expect(firstRow?.textContent).toContain('Juan Dela Cruz');
  });

  it('shows the access denied view to a SEnA officer', async () => {
    const client = await loginAs('sena1', DEMO_PASSWORDS.sena1);
    const view = await complaintsFolderView(client);
    expect(view.getAttribute('data-page')).toBe('denied');
    expect(view.textContent).toContain('Access denied');
  });

  it('assignment action then reload shows the assigned officer', async () => {
    const client = await loginAs('complaints1', DEMO_PASSWORDS.complaints1);
    let view = await complaintsFolderView(client, (fresh) => {
      view = fresh;
    });

    // D0001 is the demo's still-unassigned complaint.
    const row = view.querySelector('tr[data-dispute="D0001"]')!;
    expect(row.textContent).toContain('Filed');
    const pick = row.querySelector('select[data-role="officer-pick"]') as HTMLSelectElement;
    expect(pick.options.length).toBeGreaterThan(0);
    const button = row.querySelector('button')!;
    button.click();

    // The click fires an async action; wait for the re-fetched view.
    await new Promise((resolve) => setTimeout(resolve, 300));
    const refreshed = view.querySelector('tr[data-dispute="D0001"]')!;
    expect(refreshed.textContent).toContain('AssignedToSena');
    expect(
      refreshed.querySelector('[data-role="assigned-officer"]')?.textContent,
    ).toBe('sena1');
  });
});

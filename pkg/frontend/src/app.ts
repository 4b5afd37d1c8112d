// Hash-routed single-page shell over the docketd API. The server decides
// every authorization question; this shell only hides pages that would be
// denied anyway and re-fetches after each mutation.

import { ApiClient, ApiError, Session } from './api';
import { clear, el } from './dom';
import { caseMaintenanceView } from './pages/cases';
import { complaintsFolderView } from './pages/complaints';
import { renderAccessDenied } from './pages/denied';
import { reportsView } from './pages/reports';
import { senaListView } from './pages/sena';
import { publicTrackerView, renderTrackerSearch } from './pages/tracker';

const client = new ApiClient('');
let session: Session | null = null;

const PAGES_BY_ROLE: Record<string, string[]> = {
  ComplaintOfficer: ['complaints'],
  SenaOfficer: ['sena'],
  LaborArbiter: ['cases', 'reports'],
  ArbitrationAssociate: ['cases', 'reports'],
  ExecutiveLaborArbiter: ['cases', 'reports', 'audit'],
};

function navigation(): HTMLElement {
  const links: HTMLElement[] = [el('a', { href: '#/track' }, ['Track a case'])];
  if (session) {
    for (const page of PAGES_BY_ROLE[session.role] ?? []) {
      const labels: Record<string, string> = {
        complaints: 'Complaints Folder',
        sena: 'SEnA',
        cases: 'Case Maintenance',
        reports: 'Reports',
        audit: 'Audit Log',
      };
      links.push(el('a', { href: `#/${page}` }, [labels[page]]));
    }
    const logout = el('a', { href: '#/login' }, [`Sign out (${session.username})`]);
    logout.addEventListener('click', () => {
      session = null;
      client.setToken(null);
    });
    links.push(logout);
  } else {
    links.push(el('a', { href: '#/login' }, ['Staff sign-in']));
  }
  return el('nav', {}, links);
}

function loginView(): HTMLElement {
  const username = el('input', { placeholder: 'Username', autocomplete: 'username' });
  const password = el('input', {
    placeholder: 'Password',
    type: 'password',
    autocomplete: 'current-password',
  });
  const message = el('p', { class: 'login-message' }, ['']);
  const form = el('form', { class: 'login-form' }, [
    username,
    password,
    el('button', { type: 'submit' }, ['Sign in']),
    message,
  ]);
  form.addEventListener('submit', async (event) => {
    event.preventDefault();
    try {
      session = await client.login(username.value, password.value);
      const [first] = PAGES_BY_ROLE[session.role] ?? ['track'];
      window.location.hash = `#/${first}`;
    } catch (error) {
      message.textContent =
        error instanceof ApiError ? error.message : 'sign-in failed';
    }
  });
  return el('section', { class: 'card', 'data-page': 'login' }, [
    el('h2', {}, ['Staff sign-in']),
    form,
  ]);
}

async function auditView(): Promise<HTMLElement> {
  try {
    const response = await fetch('/api/audit', {
      headers: session ? { Authorization: `Bearer ${session.token}` } : {},
    });
    if (!response.ok) return renderAccessDenied(`audit log (${response.status})`);
    const events: Array<Record<string, unknown>> = await response.json();
    const rows = events.map((event) =>
      el('tr', {}, [
        el('td', {}, [String(event.seq)]),
        el('td', {}, [String(event.action)]),
        el('td', {}, [String(event.dispute_id)]),
        el('td', {}, [`${event.before ?? ''} → ${event.after ?? ''}`]),
        el('td', {}, [new Date(Number(event.at) * 1000).toISOString()]),
      ]),
    );
    return el('section', { class: 'card', 'data-page': 'audit' }, [
      el('h2', {}, ['Audit Log']),
      el('table', {}, [
        el('thead', {}, [
          el('tr', {}, [
            ...['Seq', 'Action', 'Dispute', 'Change', 'At'].map((h) => el('th', {}, [h])),
          ]),
        ]),
        el('tbody', {}, rows),
      ]),
    ]);
  } catch {
    return renderAccessDenied('audit log');
  }
}

async function pageFor(route: string): Promise<HTMLElement> {
  const mount = (view: HTMLElement) => {
    const main = document.querySelector('main');
    if (main) {
      clear(main as HTMLElement);
      main.append(view);
    }
  };
  if (route.startsWith('#/track/')) {
    return publicTrackerView(client, decodeURIComponent(route.slice('#/track/'.length)));
  }
  switch (route) {
    case '#/track':
      return renderTrackerSearch((caseNumber) => {
        window.location.hash = `#/track/${encodeURIComponent(caseNumber)}`;
      });
    case '#/complaints':
      return complaintsFolderView(client, mount);
    case '#/sena':
      return senaListView(client, mount);
    case '#/cases': {
      const executive = session?.role === 'ExecutiveLaborArbiter';
      const office = executive ? undefined : session?.office_id ?? undefined;
      if (!session) return renderAccessDenied('sign in first');
      return caseMaintenanceView(client, office, executive, mount);
    }
    case '#/reports':
      return reportsView(client, {
        executive: session?.role === 'ExecutiveLaborArbiter',
        officeId: session?.office_id ?? null,
      });
    case '#/audit':
      return auditView();
    case '#/login':
      return loginView();
    default:
      return renderTrackerSearch((caseNumber) => {
        window.location.hash = `#/track/${encodeURIComponent(caseNumber)}`;
      });
  }
}

async function route(): Promise<void> {
  const view = await pageFor(window.location.hash || '#/track');
  const main = document.querySelector('main');
  const nav = document.querySelector('header nav');
  if (nav) nav.replaceWith(navigation());
  if (main) {
    clear(main as HTMLElement);
    main.append(view);
  }
}

export function start(): void {
  window.addEventListener('hashchange', () => {
    void route();
  });
  void route();
}

if (typeof window !== 'undefined' && document.querySelector('main')) {
  start();
}

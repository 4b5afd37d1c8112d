// Typed client for the docketd HTTP API. The server stays authoritative for
// every decision; this module only moves JSON.

export interface Party {
  full_name: string;
  address: string;
  contact: string;
}

export interface Complaint {
  dispute_id: string;
  complainant: Party;
  respondent: Party;
  nature: string;
  filed_on: string;
  assigned_sena_officer: string | null;
  stage_status: 'Filed' | 'AssignedToSena';
}

export interface Minute {
  recorded_on: number;
  author: string;
  text: string;
}

export interface SenaCase {
  dispute_id: string;
  administering_officer: string;
  conferences: Minute[];
  outcome: string | null;
  complaint?: Complaint;
}

export interface RaffleEntry {
  office_id: number;
  at: number;
  reason: string;
}

export interface LaborCase {
  case_number: string;
  dispute_id: string;
  office_id: number;
  case_type: 'Regular' | 'OFW';
  status: string;
  minutes: Minute[];
  raffle_history: RaffleEntry[];
  legal_next_statuses: string[];
  complaint?: Complaint;
}

export interface Office {
  office_id: number;
  arbiter_name: string;
  is_executive: boolean;
  active: boolean;
}

export interface OfficerRef {
  user_id: string;
  username: string;
}

export interface TrackResult {
  case_number: string;
  complainant: string;
  respondent: string;
  status: string;
  last_update: string;
}

export interface Session {
  token: string;
  user_id: string;
  username: string;
  role: string;
  office_id: number | null;
}

export interface ReportParams {
  case_type: 'Regular' | 'OFW';
  remark: string;
  from: string;
  to: string;
  office: number | 'ALL';
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function parseError(response: Response): Promise<never> {
  let message = `request failed (${response.status})`;
  try {
    const body = await response.json();
    if (body && typeof body.error === 'string') message = body.error;
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(response.status, message);
}

export class ApiClient {
  constructor(private baseUrl = '', private token: string | null = null) {}

  setToken(token: string | null): void {
    this.token = token;
  }

  private headers(json: boolean): Record<string, string> {
    const headers: Record<string, string> = {};
    if (json) headers['Content-Type'] = 'application/json';
    if (this.token) headers['Authorization'] = `Bearer ${this.token}`;
    return headers;
  }

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.baseUrl + path, { headers: this.headers(false) });
    if (!response.ok) await parseError(response);
    return response.json() as Promise<T>;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: 'POST',
      headers: this.headers(true),
      body: JSON.stringify(body),
    });
    if (!response.ok) await parseError(response);
    return response.json() as Promise<T>;
  }

  async login(username: string, password: string): Promise<Session> {
    const session = await this.post<Session>('/api/login', { username, password });
    this.token = session.token;
    return session;
  }

  listComplaints(): Promise<Complaint[]> {
    return this.get('/api/complaints');
  }

  fileComplaint(input: {
    complainant: Party;
    respondent: Party;
    nature: string;
    filed_on: string;
  }): Promise<Complaint> {
    return this.post('/api/complaints', input);
  }

  assignComplaint(disputeId: string, officerId: string): Promise<{ complaint: Complaint }> {
    return this.post(`/api/complaints/${encodeURIComponent(disputeId)}/assign`, {
      officer: officerId,
    });
  }

  listOfficers(role = 'SenaOfficer'): Promise<OfficerRef[]> {
    return this.get(`/api/officers?role=${encodeURIComponent(role)}`);
  }

  mySena(): Promise<SenaCase[]> {
    return this.get('/api/sena?officer=me');
  }

  concludeSena(disputeId: string, outcome: string, minute: string): Promise<SenaCase> {
    return this.post(`/api/sena/${encodeURIComponent(disputeId)}/conclude`, {
      outcome,
      minute,
    });
  }

  docketCase(disputeId: string, caseType: 'Regular' | 'OFW'): Promise<LaborCase> {
    return this.post('/api/cases', { dispute_id: disputeId, case_type: caseType });
  }

  listCases(officeId?: number): Promise<LaborCase[]> {
    const suffix = officeId === undefined ? '' : `?office=${officeId}`;
    return this.get(`/api/cases${suffix}`);
  }

  updateStatus(caseNumber: string, status: string, minute: string): Promise<LaborCase> {
    return this.post(`/api/cases/${encodeURIComponent(caseNumber)}/status`, {
      status,
      minute,
    });
  }

  reRaffle(caseNumber: string, officeId: number, reason: string): Promise<LaborCase> {
    return this.post(`/api/cases/${encodeURIComponent(caseNumber)}/reraffle`, {
      office_id: officeId,
      reason,
    });
  }

  listOffices(): Promise<Office[]> {
    return this.get('/api/offices');
  }

  async downloadReport(params: ReportParams): Promise<Blob> {
    const response = await fetch(this.baseUrl + '/api/reports', {
      method: 'POST',
      headers: this.headers(true),
      body: JSON.stringify(params),
    });
    if (!response.ok) await parseError(response);
    return response.blob();
  }

  async track(caseNumber: string): Promise<TrackResult | null> {
    const response = await fetch(
      this.baseUrl + `/track/${encodeURIComponent(caseNumber)}`,
    );
    if (response.status === 404) return null;
    if (!response.ok) await parseError(response);
    return response.json() as Promise<TrackResult>;
  }
}

import { readFileSync } from 'node:fs';
import { join } from 'node:path';

import { ApiClient } from '../src/api';

export function baseUrl(): string {
  const infoPath = join(process.cwd(), 'tests', '.server.json');
  return JSON.parse(readFileSync(infoPath, 'utf-8')).baseUrl as string;
}

export async function loginAs(username: string, password: string): Promise<ApiClient> {
  const client = new ApiClient(baseUrl());
  await client.login(username, password);
  return client;
}

export function publicClient(): ApiClient {
  return new ApiClient(baseUrl());
}

// Demo accounts and names, mirroring the service's deterministic seed data.
export const DEMO_PASSWORDS: Record<string, string> = {
  ela: 'executive-2022',
  complaints1: 'front-desk-2022',
  sena1: 'single-entry-2022',
  arbiter2: 'arbiter-two-2022',
  arbiter3: 'arbiter-three-2022',
  laa2: 'associate-two-2022',
};

export const DEMO_FULL_NAMES = [
  'Juan Dela Cruz',
  'Acme Manufacturing Corporation',
  'Maria Clara Santos',
  'Golden Harvest Foods Incorporated',
  'Jose Protacio Mercado',
  'Horizon Logistics Corporation',
  'Andres Bonifacio',
  'Katipunan Textile Mills',
  'Gabriela Silang',
  'Ilocos Trading Company',
  'Emilio Jacinto',
  'Tondo Shipyard Services',
  'Melchora Aquino',
  'Balintawak Bakery Corporation',
  'Apolinario Mabini',
  'Laguna Copra Millers Incorporated',
];

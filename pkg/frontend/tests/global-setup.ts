// Boots one seeded docketd instance for the whole UI test run and records
// its base URL for the test files.

import { spawn, spawnSync, ChildProcess } from 'node:child_process';
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

const SERVER_INFO_PATH = join(process.cwd(), 'tests', '.server.json');

let child: ChildProcess | undefined;
let dataDir: string | undefined;

export default async function setup(): Promise<() => void> {
  dataDir = mkdtempSync(join(tmpdir(), 'docketd-ui-'));
  const env = {
    ...process.env,
    DOCKETD_DATA_DIR: dataDir,
    DOCKETD_XOR_KEY: '5eed5eed5eed5eed5eed5eed',
  };

  const seeded = spawnSync('python3', ['-m', 'docketd.cli', 'seed-demo'], { env });
  if (seeded.status !== 0) {
    throw new Error(`seed-demo failed: ${seeded.stderr?.toString()}`);
  }

  child = spawn('python3', ['-m', 'docketd.cli', 'serve', '--port', '0'], { env });
  const baseUrl = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error('server did not start')), 20_000);
    let buffered = '';
    child!.stdout!.on('data', (chunk: Buffer) => {
      buffered += chunk.toString();
      const match = buffered.match(/listening on (http:\/\/[\d.]+:\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]);
      }
    });
    child!.stderr!.on('data', (chunk: Buffer) => process.stderr.write(chunk));
    child!.on('exit', (code) => {
      clearTimeout(timer);
      reject(new Error(`server exited early (${code})`));
    });
  });

  writeFileSync(SERVER_INFO_PATH, JSON.stringify({ baseUrl }));

  return async () => {
    if (child && child.exitCode === null) {
      const gone = new Promise((resolve) => child!.once('exit', resolve));
      child.kill('SIGINT');
      await Promise.race([gone, new Promise((resolve) => setTimeout(resolve, 5_000))]);
    }
    if (dataDir) rmSync(dataDir, { recursive: true, force: true });
    rmSync(SERVER_INFO_PATH, { force: true });
  };
}

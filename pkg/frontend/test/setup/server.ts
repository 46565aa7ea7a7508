/** Boots the real session service for the duration of the test run, so
 *  every test exercises the genuine HTTP contract — no mocks. */

import { spawn, type ChildProcess } from 'node:child_process';

export const PORT = 8214;

let server: ChildProcess | undefined;

export async function setup(): Promise<void> {
  server = spawn(
    'python3',
    ['-m', 'uvicorn', 'puzzlebench.service:app', '--port', String(PORT)],
    { stdio: 'ignore' },
  );
  const deadline = Date.now() + 30_000;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`http://localhost:${PORT}/api/catalog`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error('session service did not come up on time');
}

export async function teardown(): Promise<void> {
  server?.kill('SIGTERM');
}

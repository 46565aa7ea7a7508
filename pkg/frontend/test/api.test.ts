import { describe, expect, it } from 'vitest';

import { ApiClient, ApiError } from '../src/api.js';
import type { CutWire } from '../src/types.js';
import { API_BASE } from './helpers.js';

describe('ApiClient against the live service', () => {
  it('walks a dissection session create/cut/hint round trip', async () => {
    const api = new ApiClient(API_BASE);
    const created = await api.createDissection({ shape: 'l-tromino', model: 'single-split' });
    expect(created.optimal_total).toBe(2);
    expect(created.cut_count).toBe(0);
    expect((await api.hint(created.id)).hint).toBe(2);

    const after = await api.cut(created.id, {
      target: 'p1', axis: 'H', line: 1, span: [0, 1],
    });
    expect(after.cut_count).toBe(1);
    expect(after.hint).toBe(1);
    expect(Object.keys(after.pieces)).toHaveLength(2);
  });

  it('surfaces rejected cuts as ApiError with the server legal cuts', async () => {
    const api = new ApiClient(API_BASE);
    const created = await api.createDissection({ shape: 'domino' });
    let caught: ApiError | undefined;
    try {
      await api.cut(created.id, { target: 'p1', axis: 'H', line: 1, span: [0, 2] });
    } catch (err) {
      caught = err as ApiError;
    }
    expect(caught).toBeInstanceOf(ApiError);
    expect(caught!.status).toBe(409);
    expect(caught!.body.legal_cuts).toEqual([
      { target: 'p1', axis: 'V', line: 1, span: [0, 1] },
    ]);
  });

  it('replays idempotency tokens without double-applying', async () => {
    const api = new ApiClient(API_BASE);
    const created = await api.createDissection({ shape: 'l-tromino' });
    const cut: CutWire = { target: 'p1', axis: 'H', line: 1, span: [0, 1] };
    const token = `ui-test-${Date.now()}`;
    const first = await api.cut(created.id, cut, token);
    const second = await api.cut(created.id, cut, token);
    expect(second).toEqual(first);
    expect((await api.getDissection(created.id)).cut_count).toBe(1);
  });

  it('logs every exchange with method, path, and status', async () => {
    const api = new ApiClient(API_BASE);
    await api.birthdayValue(23, 'approx');
    await api.catalog();
    expect(api.log.map((e) => [e.method, e.path, e.status])).toEqual([
      ['GET', '/api/birthday?n=23&formula=approx', 200],
      ['GET', '/api/catalog', 200],
    ]);
    const birthday = api.log[0].response as { probability: number };
    expect(birthday.probability).toBeCloseTo(0.500477, 6);
  });
});

import { beforeEach, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { DissectionScreen } from '../src/dissectionScreen.js';
import type { CutWire, DissectionView, ErrorBody } from '../src/types.js';
import { API_BASE, allByTestId, byTestId, maybeByTestId, setValue } from './helpers.js';

let container: HTMLElement;

beforeEach(() => {
  document.body.textContent = '';
  container = document.createElement('div');
  document.body.append(container);
});

function lastLoggedView(api: ApiClient): DissectionView {
  for (let i = api.log.length - 1; i >= 0; i--) {
    const entry = api.log[i];
    const body = entry.response as DissectionView;
    if (entry.status < 300 && body && typeof body === 'object' && 'cut_count' in body) {
      return body;
    }
  }
  throw new Error('no dissection view in the request log');
}

async function mountWithPreset(
  api: ApiClient, preset: string, model?: string,
): Promise<DissectionScreen> {
  const screen = new DissectionScreen(container, api);
  await screen.settled();
  if (model) setValue(byTestId(container, 'model-select') as HTMLSelectElement, model);
  setValue(byTestId(container, 'preset-select') as HTMLSelectElement, preset);
  byTestId(container, 'load-preset').click();
  await screen.settled();
  return screen;
}

describe('dissection screen', () => {
  it('completes an L-tromino in 2 cuts with the counter tracking the server', async () => {
    const api = new ApiClient(API_BASE);
    const screen = await mountWithPreset(api, 'l-tromino');

    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 0');
    byTestId(container, 'hint-button').click();
    await screen.settled();
    expect(byTestId(container, 'hint-readout').textContent).toBe('hint: 2 more cuts');

    byTestId(container, 'edge-p1-H-1-0').click();
    await screen.settled();
    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 1');
    expect(byTestId(container, 'cut-counter').textContent)
      .toBe(`cuts: ${lastLoggedView(api).cut_count}`);

    byTestId(container, 'edge-p2-V-1-0').click();
    await screen.settled();
    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 2');
    expect(byTestId(container, 'finish-banner').textContent).toBe('2 cuts (optimal 2)');
    expect(byTestId(container, 'score-note').textContent)
      .toBe(lastLoggedView(api).score_note);
  });

  it('renders server-provided legal cuts after an illegal attempt', async () => {
    const api = new ApiClient(API_BASE);
    const screen = await mountWithPreset(api, 'square-tetromino');

    byTestId(container, 'edge-p1-H-1-0').click();
    await screen.settled();

    // Counter unchanged, and the highlights are exactly the 409 payload.
    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 0');
    const rejected = api.log[api.log.length - 1];
    expect(rejected.status).toBe(409);
    const legal = (rejected.response as ErrorBody).legal_cuts!;
    const shown = allByTestId(container, 'legal-highlight')
      .map((node) => JSON.parse(node.dataset.cut!) as CutWire);
    expect(shown).toEqual(legal);
    expect(shown).toHaveLength(2);
    expect(maybeByTestId(container, 'error-banner')!.textContent).toContain('not legal');

    // Clicking a highlight applies that exact server-provided cut.
    allByTestId(container, 'legal-highlight')[0].click();
    await screen.settled();
    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 1');
    expect(Object.keys(screen.currentView()!.pieces)).toHaveLength(2);
  });

  it('plays the U-pentomino under full-line to a below-N-1 finish', async () => {
    const api = new ApiClient(API_BASE);
    const screen = await mountWithPreset(api, 'u-pentomino', 'full-line');

    byTestId(container, 'edge-p1-H-1-0').click();
    await screen.settled();
    const horizontal = allByTestId(container, 'legal-highlight')
      .find((node) => (JSON.parse(node.dataset.cut!) as CutWire).axis === 'H')!;
    horizontal.click();
    await screen.settled();
    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 1');
    expect(Object.keys(screen.currentView()!.pieces)).toHaveLength(3);

    byTestId(container, 'edge-p2-V-1-0').click();
    await screen.settled();
    byTestId(container, 'edge-p6-V-2-0').click();
    await screen.settled();

    expect(byTestId(container, 'finish-banner').textContent)
      .toBe('3 cuts (optimal 3, below N−1=4)');
  });

  it('handles global-line play through the GLOBAL target', async () => {
    const api = new ApiClient(API_BASE);
    const screen = await mountWithPreset(api, 'square-tetromino', 'global-line');

    byTestId(container, 'edge-GLOBAL-H-1-0').click();
    await screen.settled();
    const fullH = allByTestId(container, 'legal-highlight')
      .find((node) => (JSON.parse(node.dataset.cut!) as CutWire).axis === 'H')!;
    fullH.click();
    await screen.settled();
    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 1');

    byTestId(container, 'edge-GLOBAL-V-1-0').click();
    await screen.settled();
    const fullV = allByTestId(container, 'legal-highlight')
      .find((node) => (JSON.parse(node.dataset.cut!) as CutWire).axis === 'V');
    if (fullV) {
      fullV.click();
      await screen.settled();
    }
    expect(byTestId(container, 'finish-banner').textContent)
      .toBe('2 cuts (optimal 2, below N−1=3)');
  });

  it('creates a session from drawn cells', async () => {
    const api = new ApiClient(API_BASE);
    const screen = new DissectionScreen(container, api);
    await screen.settled();

    for (const [x, y] of [[0, 0], [1, 0], [0, 1]]) {
      byTestId(container, `draw-cell-${x}-${y}`).click();
    }
    byTestId(container, 'start-drawing').click();
    await screen.settled();

    expect(screen.currentView()!.optimal_total).toBe(2);
    expect(byTestId(container, 'cut-counter').textContent).toBe('cuts: 0');
  });

  it('rejects a disconnected drawing without leaving draw mode', async () => {
    const api = new ApiClient(API_BASE);
    const screen = new DissectionScreen(container, api);
    await screen.settled();

    byTestId(container, 'draw-cell-0-0').click();
    byTestId(container, 'draw-cell-2-0').click();
    byTestId(container, 'start-drawing').click();
    await screen.settled();

    expect(screen.currentView()).toBeNull();
    expect(maybeByTestId(container, 'error-banner')).not.toBeNull();
    expect(maybeByTestId(container, 'draw-cell-0-0')).not.toBeNull();
  });

  it('offers a retry after a network failure and recovers', async () => {
    const api = new ApiClient(API_BASE);
    const realFetch = api.fetchFn;
    api.fetchFn = () => Promise.reject(new TypeError('connection refused'));

    const screen = new DissectionScreen(container, api);
    await screen.settled();
    expect(maybeByTestId(container, 'error-banner')!.textContent)
      .toContain('network error');

    api.fetchFn = realFetch;
    byTestId(container, 'retry-button').click();
    await screen.settled();
    const presets = byTestId(container, 'preset-select') as HTMLSelectElement;
    expect(presets.options.length).toBeGreaterThan(0);
    expect(maybeByTestId(container, 'error-banner')).toBeNull();
  });

  it('never shows a counter value that did not come from the server', async () => {
    const api = new ApiClient(API_BASE);
    const screen = await mountWithPreset(api, 'p-pentomino');

    const seen: string[] = [];
    seen.push(byTestId(container, 'cut-counter').textContent!);
    while (!screen.currentView()!.finished) {
      const hitbox = container.querySelector('.edge-hitbox') as HTMLElement | null;
      if (!hitbox) throw new Error('no edge to click');
      hitbox.click();
      await screen.settled();
      const highlight = maybeByTestId(container, 'legal-highlight');
      if (highlight) {
        highlight.click();
        await screen.settled();
      }
      seen.push(byTestId(container, 'cut-counter').textContent!);
    }

    const served = new Set(
      api.log
        .filter((e) => e.status < 300 && (e.response as DissectionView).cut_count !== undefined)
        .map((e) => `cuts: ${(e.response as DissectionView).cut_count}`),
    );
    for (const text of seen) {
      expect(served.has(text)).toBe(true);
    }
  });
});

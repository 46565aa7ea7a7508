import { ApiClient, ApiError } from './api.js';
import type { CutWire, DissectionView, Model } from './types.js';

const CELL = 48;
const DRAW_SIZE = 8;
const PIECE_COLORS = [
  '#7fb3d5', '#f7dc6f', '#a3e4a0', '#f1948a', '#c39bd3',
  '#76d7c4', '#f0b27a', '#d7dbdd', '#85c1e9', '#f5b7b1',
];

/** Dissection play screen: draw or pick a shape, then cut it apart.
 *
 *  The server is authoritative throughout — the rendered layout, the cut
 *  counter, hints, and the legal-cut highlights shown after a rejected cut
 *  all come straight from server responses. The screen computes pixels,
 *  never rules. */
export class DissectionScreen {
  private mode: 'draw' | 'play' = 'draw';
  private drawn = new Set<string>();
  private model: Model = 'single-split';
  private presets: string[] = [];
  private view: DissectionView | null = null;
  private highlights: CutWire[] = [];
  private hintText = '';
  private errorText = '';
  private retryAction: (() => Promise<void>) | null = null;
  private busy = false;
  private inflight: Promise<void> = Promise.resolve();

  constructor(private container: HTMLElement, private api: ApiClient) {
    this.render();
    this.enqueue(async () => {
      const catalog = await this.api.catalog();
      this.presets = catalog.shapes.map((s) => s.name);
    });
  }

  /** Resolves once every queued server exchange has settled. */
  settled(): Promise<void> {
    return this.inflight;
  }

  currentView(): DissectionView | null {
    return this.view;
  }

  currentHighlights(): CutWire[] {
    return this.highlights;
  }

  private enqueue(work: () => Promise<void>): void {
    this.inflight = this.inflight.then(async () => {
      if (this.busy) return;
      this.busy = true;
      this.render();
      try {
        await work();
        this.errorText = '';
        this.retryAction = null;
      } catch (err) {
        if (err instanceof ApiError) {
          this.applyApiError(err);
        } else {
          // Network failure: keep state untouched, offer a retry.
          this.errorText = 'network error — the service did not answer';
          this.retryAction = work;
        }
      } finally {
        this.busy = false;
        this.render();
      }
    });
  }

  private applyApiError(err: ApiError): void {
    if (err.status === 409 && err.body.legal_cuts) {
      this.highlights = err.body.legal_cuts;
      this.errorText = 'that cut is not legal here — the legal cuts are highlighted';
    } else {
      this.errorText = `${err.body.error}: ${JSON.stringify(err.body.detail ?? '')}`;
    }
  }

  // --- session actions -------------------------------------------------------

  startFromPreset(name: string): void {
    this.enqueue(async () => {
      this.adoptView(await this.api.createDissection({ shape: name, model: this.model }));
    });
  }

  startFromDrawing(): void {
    const cells: [number, number][] = [];
    for (const key of this.drawn) {
      const [x, y] = key.split(',').map(Number);
      cells.push([x, y]);
    }
    this.enqueue(async () => {
      this.adoptView(await this.api.createDissection({ cells, model: this.model }));
    });
  }

  sendCut(cut: CutWire): void {
    this.enqueue(async () => {
      if (!this.view) return;
      this.adoptView(await this.api.cut(this.view.id, cut));
    });
  }

  requestHint(): void {
    this.enqueue(async () => {
      if (!this.view) return;
      const res = await this.api.hint(this.view.id);
      this.hintText = `hint: ${res.hint} more ${res.hint === 1 ? 'cut' : 'cuts'}`;
    });
  }

  backToDraw(): void {
    this.mode = 'draw';
    this.view = null;
    this.highlights = [];
    this.hintText = '';
    this.errorText = '';
    this.render();
  }

  private adoptView(view: DissectionView): void {
    this.view = view;
    this.mode = 'play';
    this.highlights = [];
    this.hintText = '';
  }

  // --- rendering -------------------------------------------------------------

  private render(): void {
    this.container.textContent = '';
    if (this.errorText) {
      const banner = el('div', 'banner error-banner', this.errorText);
      banner.dataset.testid = 'error-banner';
      if (this.retryAction) {
        const retry = el('button', '', 'retry');
        retry.dataset.testid = 'retry-button';
        const action = this.retryAction;
        retry.addEventListener('click', () => {
          this.errorText = '';
          this.retryAction = null;
          this.enqueue(action);
        });
        banner.append(' ', retry);
      }
      this.container.append(banner);
    }
    if (this.mode === 'draw') {
      this.renderDrawMode();
    } else {
      this.renderPlayMode();
    }
  }

  private renderDrawMode(): void {
    const controls = el('div', 'controls');
    const modelSelect = document.createElement('select');
    modelSelect.dataset.testid = 'model-select';
    for (const m of ['single-split', 'full-line', 'global-line'] as Model[]) {
      const opt = document.createElement('option');
      opt.value = m;
      opt.textContent = m;
      opt.selected = m === this.model;
      modelSelect.append(opt);
    }
    modelSelect.addEventListener('change', () => {
      this.model = modelSelect.value as Model;
    });

    const presetSelect = document.createElement('select');
    presetSelect.dataset.testid = 'preset-select';
    for (const name of this.presets) {
      const opt = document.createElement('option');
      opt.value = name;
      opt.textContent = name;
      presetSelect.append(opt);
    }
    const loadPreset = el('button', '', 'load preset');
    loadPreset.dataset.testid = 'load-preset';
    loadPreset.disabled = this.busy || this.presets.length === 0;
    loadPreset.addEventListener('click', () => this.startFromPreset(presetSelect.value));

    const start = el('button', '', 'start from drawing');
    start.dataset.testid = 'start-drawing';
    start.disabled = this.busy || this.drawn.size === 0;
    start.addEventListener('click', () => this.startFromDrawing());

    controls.append(modelSelect, presetSelect, loadPreset, start);
    this.container.append(controls);

    const grid = el('div', 'draw-grid');
    grid.style.width = `${DRAW_SIZE * CELL}px`;
    grid.style.height = `${DRAW_SIZE * CELL}px`;
    for (let row = 0; row < DRAW_SIZE; row++) {
      for (let col = 0; col < DRAW_SIZE; col++) {
        const x = col;
        const y = DRAW_SIZE - 1 - row;
        const key = `${x},${y}`;
        const cell = el('div', this.drawn.has(key) ? 'draw-cell on' : 'draw-cell');
        cell.dataset.testid = `draw-cell-${x}-${y}`;
        cell.style.left = `${col * CELL}px`;
        cell.style.top = `${row * CELL}px`;
        cell.style.width = `${CELL - 2}px`;
        cell.style.height = `${CELL - 2}px`;
        cell.addEventListener('click', () => {
          if (this.drawn.has(key)) this.drawn.delete(key);
          else this.drawn.add(key);
          this.render();
        });
        grid.append(cell);
      }
    }
    this.container.append(grid);
  }

  private renderPlayMode(): void {
    const view = this.view;
    if (!view) return;

    const pieceIds = Object.keys(view.pieces).sort();
    const allCells: [number, number][] = [];
    for (const pid of pieceIds) allCells.push(...view.pieces[pid]);
    const totalCells = allCells.length;
    const minX = Math.min(...allCells.map(([x]) => x));
    const maxX = Math.max(...allCells.map(([x]) => x));
    const minY = Math.min(...allCells.map(([, y]) => y));
    const maxY = Math.max(...allCells.map(([, y]) => y));

    const status = el('div', 'status');
    const counter = el('span', 'counter', `cuts: ${view.cut_count}`);
    counter.dataset.testid = 'cut-counter';
    const scoreNote = el('span', 'score-note', view.score_note);
    scoreNote.dataset.testid = 'score-note';
    status.append(counter, scoreNote);
    if (this.hintText) {
      const hintSpan = el('span', 'hint-readout', this.hintText);
      hintSpan.dataset.testid = 'hint-readout';
      status.append(hintSpan);
    }
    this.container.append(status);

    if (view.finished) {
      const below =
        view.optimal_total < totalCells - 1
          ? `, below N−1=${totalCells - 1}`
          : '';
      const banner = el(
        'div', 'banner finish-banner',
        `${view.cut_count} cuts (optimal ${view.optimal_total}${below})`,
      );
      banner.dataset.testid = 'finish-banner';
      this.container.append(banner);
    }

    const buttons = el('div', 'controls');
    const hintBtn = el('button', '', 'hint');
    hintBtn.dataset.testid = 'hint-button';
    hintBtn.disabled = this.busy || view.finished;
    hintBtn.addEventListener('click', () => this.requestHint());
    const back = el('button', '', 'new shape');
    back.dataset.testid = 'back-to-draw';
    back.addEventListener('click', () => this.backToDraw());
    buttons.append(hintBtn, back);
    this.container.append(buttons);

    const board = el('div', 'board');
    board.style.width = `${(maxX - minX + 1) * CELL}px`;
    board.style.height = `${(maxY - minY + 1) * CELL}px`;

    const colorOf = new Map<string, string>();
    pieceIds.forEach((pid, i) => colorOf.set(pid, PIECE_COLORS[i % PIECE_COLORS.length]));

    for (const pid of pieceIds) {
      for (const [x, y] of view.pieces[pid]) {
        const cell = el('div', 'piece-cell');
        cell.dataset.piece = pid;
        cell.style.background = colorOf.get(pid)!;
        cell.style.left = `${(x - minX) * CELL}px`;
        cell.style.top = `${(maxY - y) * CELL}px`;
        cell.style.width = `${CELL - 2}px`;
        cell.style.height = `${CELL - 2}px`;
        board.append(cell);
      }
    }

    if (!view.finished) {
      this.appendEdgeHitboxes(board, view, minX, maxY);
      for (const cut of this.highlights) {
        board.append(this.highlightOverlay(cut, minX, maxY));
      }
    }
    this.container.append(board);
  }

  /** One clickable strip per shared boundary inside each piece. Adjacency
   *  here is geometry for hit-testing only; whether a cut is legal is
   *  entirely the server's call. */
  private appendEdgeHitboxes(
    board: HTMLElement, view: DissectionView, minX: number, maxY: number,
  ): void {
    const isGlobal = view.model === 'GLOBAL_LINE';
    for (const [pid, cells] of Object.entries(view.pieces)) {
      const inPiece = new Set(cells.map(([x, y]) => `${x},${y}`));
      const target = isGlobal ? 'GLOBAL' : pid;
      for (const [x, y] of cells) {
        if (inPiece.has(`${x - 1},${y}`)) {
          const hit = el('div', 'edge-hitbox vertical');
          hit.dataset.testid = `edge-${target}-V-${x}-${y}`;
          hit.style.left = `${(x - minX) * CELL - 4}px`;
          hit.style.top = `${(maxY - y) * CELL}px`;
          hit.style.width = '8px';
          hit.style.height = `${CELL}px`;
          hit.addEventListener('click', () =>
            this.sendCut({ target, axis: 'V', line: x, span: [y, y + 1] }),
          );
          board.append(hit);
        }
        if (inPiece.has(`${x},${y - 1}`)) {
          const hit = el('div', 'edge-hitbox horizontal');
          hit.dataset.testid = `edge-${target}-H-${y}-${x}`;
          hit.style.left = `${(x - minX) * CELL}px`;
          hit.style.top = `${(maxY - y + 1) * CELL - 4}px`;
          hit.style.width = `${CELL}px`;
          hit.style.height = '8px';
          hit.addEventListener('click', () =>
            this.sendCut({ target, axis: 'H', line: y, span: [x, x + 1] }),
          );
          board.append(hit);
        }
      }
    }
  }

  /** A server-provided legal cut, rendered as a clickable highlight. */
  private highlightOverlay(cut: CutWire, minX: number, maxY: number): HTMLElement {
    const [lo, hi] = cut.span;
    const overlay = el('div', 'legal-highlight');
    overlay.dataset.testid = 'legal-highlight';
    overlay.dataset.cut = JSON.stringify(cut);
    if (cut.axis === 'V') {
      overlay.style.left = `${(cut.line - minX) * CELL - 4}px`;
      overlay.style.top = `${(maxY - (hi - 1)) * CELL}px`;
      overlay.style.width = '8px';
      overlay.style.height = `${(hi - lo) * CELL}px`;
    } else {
      overlay.style.left = `${(lo - minX) * CELL}px`;
      overlay.style.top = `${(maxY - cut.line + 1) * CELL - 4}px`;
      overlay.style.width = `${(hi - lo) * CELL}px`;
      overlay.style.height = '8px';
    }
    overlay.addEventListener('click', () => this.sendCut(cut));
    return overlay;
  }
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

import { ApiClient, ApiError } from './api.js';
import type { MontyStats, MontyStrategy, MontyView } from './types.js';

const REFERENCE: Record<MontyStrategy, number> = { SWITCH: 2 / 3, STAY: 1 / 3 };

/** Three-door game against the session service. Phases, reveals, and win
 *  tallies all come from the server; the reference lines at 1/3 and 2/3 are
 *  the only numbers the screen knows on its own. */
export class MontyScreen {
  private view: MontyView | null = null;
  private stats: MontyStats | null = null;
  private errorText = '';
  private busy = false;
  private inflight: Promise<void> = Promise.resolve();

  constructor(private container: HTMLElement, private api: ApiClient) {
    this.render();
    this.refreshStats();
  }

  settled(): Promise<void> {
    return this.inflight;
  }

  currentView(): MontyView | null {
    return this.view;
  }

  currentStats(): MontyStats | null {
    return this.stats;
  }

  private enqueue(work: () => Promise<void>): void {
    this.inflight = this.inflight.then(async () => {
      if (this.busy) return;
      this.busy = true;
      this.render();
      try {
        await work();
        this.errorText = '';
      } catch (err) {
        this.errorText =
          err instanceof ApiError
            ? `${err.body.error}: ${JSON.stringify(err.body.detail ?? '')}`
            : 'network error — the service did not answer';
      } finally {
        this.busy = false;
        this.render();
      }
    });
  }

  // --- game actions ----------------------------------------------------------

  newGame(seed?: number): void {
    this.enqueue(async () => {
      this.view = await this.api.createMonty(seed);
    });
  }

  /** Restore an existing game (e.g. after a page refresh) from the server. */
  loadGame(id: string): void {
    this.enqueue(async () => {
      this.view = await this.api.getMonty(id);
    });
  }

  pick(door: number): void {
    this.enqueue(async () => {
      if (!this.view) return;
      this.view = await this.api.pickDoor(this.view.id, door);
    });
  }

  decide(strategy: MontyStrategy): void {
    this.enqueue(async () => {
      if (!this.view) return;
      this.view = await this.api.decide(this.view.id, strategy);
      this.stats = await this.api.montyStats();
    });
  }

  refreshStats(): void {
    this.enqueue(async () => {
      this.stats = await this.api.montyStats();
    });
  }

  // --- rendering -------------------------------------------------------------

  private render(): void {
    this.container.textContent = '';
    if (this.errorText) {
      const banner = document.createElement('div');
      banner.className = 'banner error-banner';
      banner.dataset.testid = 'monty-error';
      banner.textContent = this.errorText;
      this.container.append(banner);
    }
    this.renderGame();
    this.renderTallies();
  }

  private renderGame(): void {
    const controls = document.createElement('div');
    controls.className = 'controls';
    const newBtn = document.createElement('button');
    newBtn.dataset.testid = 'new-game';
    newBtn.textContent = 'new game';
    newBtn.disabled = this.busy;
    newBtn.addEventListener('click', () => this.newGame());
    controls.append(newBtn);
    this.container.append(controls);

    const view = this.view;
    const doors = document.createElement('div');
    doors.className = 'doors';
    for (let door = 1; door <= 3; door++) {
      const btn = document.createElement('button');
      btn.className = 'door';
      btn.dataset.testid = `door-${door}`;
      btn.textContent = this.doorFace(door);
      if (view?.picked === door) btn.classList.add('picked');
      if (view?.revealed === door) btn.classList.add('revealed');
      if (view?.phase === 'RESOLVED' && view.final_door === door) {
        btn.classList.add('final');
      }
      btn.disabled = this.busy || !view || view.phase !== 'AWAIT_PICK';
      btn.addEventListener('click', () => this.pick(door));
      doors.append(btn);
    }
    this.container.append(doors);

    if (view?.phase === 'AWAIT_DECISION') {
      const decisionRow = document.createElement('div');
      decisionRow.className = 'controls';
      const note = document.createElement('span');
      note.dataset.testid = 'reveal-note';
      note.textContent = `the host opened door ${view.revealed} — stay or switch?`;
      decisionRow.append(note);
      for (const strategy of ['STAY', 'SWITCH'] as MontyStrategy[]) {
        const btn = document.createElement('button');
        btn.dataset.testid = `decide-${strategy.toLowerCase()}`;
        btn.textContent = strategy.toLowerCase();
        btn.disabled = this.busy;
        btn.addEventListener('click', () => this.decide(strategy));
        decisionRow.append(btn);
      }
      this.container.append(decisionRow);
    }

    if (view?.phase === 'RESOLVED') {
      const banner = document.createElement('div');
      banner.className = `banner ${view.won ? 'win-banner' : 'lose-banner'}`;
      banner.dataset.testid = 'result-banner';
      banner.textContent = `${view.won ? 'you won the car!' : 'a goat.'} ` +
        `(${view.strategy}, final door ${view.final_door}, car behind ${view.car_door})`;
      this.container.append(banner);
    }
  }

  private doorFace(door: number): string {
    const view = this.view;
    if (!view) return `door ${door}`;
    if (view.phase === 'RESOLVED' && view.car_door === door) return '\u{1F697}';
    if (view.revealed === door) return '\u{1F410}';
    if (view.phase === 'RESOLVED') return '\u{1F410}';
    return `door ${door}`;
  }

  private renderTallies(): void {
    const panel = document.createElement('div');
    panel.className = 'tallies';
    for (const strategy of ['SWITCH', 'STAY'] as MontyStrategy[]) {
      const tally = this.stats?.[strategy];
      const row = document.createElement('div');
      row.className = 'tally-row';

      const label = document.createElement('span');
      label.dataset.testid = `tally-${strategy.toLowerCase()}`;
      if (tally && tally.rate !== null) {
        label.textContent =
          `${strategy}: ${tally.wins}/${tally.games} (${(tally.rate * 100).toFixed(1)}%)`;
      } else {
        label.textContent = `${strategy}: no games yet`;
      }
      row.append(label);

      const track = document.createElement('div');
      track.className = 'tally-track';
      const bar = document.createElement('div');
      bar.className = 'tally-bar';
      bar.dataset.testid = `tally-bar-${strategy.toLowerCase()}`;
      bar.style.width = `${(tally?.rate ?? 0) * 100}%`;
      const ref = document.createElement('div');
      ref.className = 'reference-line';
      ref.dataset.testid = `reference-${strategy.toLowerCase()}`;
      ref.title = strategy === 'SWITCH' ? 'exact 2/3' : 'exact 1/3';
      ref.style.left = `${REFERENCE[strategy] * 100}%`;
      track.append(bar, ref);
      row.append(track);
      panel.append(row);
    }
    this.container.append(panel);
  }
}

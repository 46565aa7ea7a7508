import { ApiClient } from './api.js';
import { BirthdayScreen } from './birthdayScreen.js';
import { DissectionScreen } from './dissectionScreen.js';
import { MontyScreen } from './montyScreen.js';

const STYLES = `
body { font-family: system-ui, sans-serif; margin: 1rem; color: #1b2631; }
.tabs button { margin-right: 0.5rem; padding: 0.4rem 1rem; }
.tabs button.active { background: #1f618d; color: white; }
.screen { margin-top: 1rem; }
.controls { margin: 0.5rem 0; display: flex; gap: 0.5rem; align-items: center; }
.status { margin: 0.5rem 0; display: flex; gap: 1rem; font-weight: 600; }
.banner { padding: 0.5rem 1rem; margin: 0.5rem 0; border-radius: 4px; }
.error-banner { background: #fadbd8; }
.finish-banner, .win-banner { background: #d5f5e3; }
.lose-banner { background: #fdebd0; }
.draw-grid, .board { position: relative; }
.draw-cell { position: absolute; border: 1px solid #d5dbdb; cursor: pointer; }
.draw-cell.on { background: #7fb3d5; }
.piece-cell { position: absolute; border: 1px solid rgba(0,0,0,0.15); }
.edge-hitbox { position: absolute; cursor: crosshair; z-index: 2; }
.edge-hitbox:hover { background: rgba(31, 97, 141, 0.5); }
.legal-highlight { position: absolute; background: #e74c3c; cursor: pointer; z-index: 3; }
.doors { display: flex; gap: 1rem; margin: 1rem 0; }
.door { width: 90px; height: 130px; font-size: 1rem; }
.door.picked { outline: 3px solid #1f618d; }
.door.revealed { background: #fdebd0; }
.door.final { outline: 3px solid #27ae60; }
.tallies { margin-top: 1rem; max-width: 480px; }
.tally-row { margin: 0.5rem 0; }
.tally-track { position: relative; height: 14px; background: #eaecee; }
.tally-bar { height: 100%; background: #7fb3d5; }
.reference-line { position: absolute; top: -3px; width: 2px; height: 20px; background: #17202a; }
.readout { font-variant-numeric: tabular-nums; margin: 0.5rem 0; }
`;

/** Wires the three screens into a tabbed shell. */
export function mountApp(root: HTMLElement, baseUrl: string): void {
  const style = document.createElement('style');
  style.textContent = STYLES;
  document.head.append(style);

  const api = new ApiClient(baseUrl);
  const tabs = document.createElement('div');
  tabs.className = 'tabs';
  const screenHost = document.createElement('div');
  screenHost.className = 'screen';
  root.append(tabs, screenHost);

  const screens: Record<string, (host: HTMLElement) => void> = {
    dissection: (host) => void new DissectionScreen(host, api),
    monty: (host) => void new MontyScreen(host, api),
    birthday: (host) => void new BirthdayScreen(host, api),
  };

  const buttons = new Map<string, HTMLButtonElement>();
  const show = (name: string) => {
    for (const [n, b] of buttons) b.classList.toggle('active', n === name);
    screenHost.textContent = '';
    const host = document.createElement('div');
    screenHost.append(host);
    screens[name](host);
  };

  for (const name of Object.keys(screens)) {
    const btn = document.createElement('button');
    btn.textContent = name;
    btn.addEventListener('click', () => show(name));
    buttons.set(name, btn);
    tabs.append(btn);
  }
  show('dissection');
}

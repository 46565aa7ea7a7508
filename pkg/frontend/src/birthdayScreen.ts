import { ApiClient } from './api.js';

const N_MAX = 60;
const WIDTH = 600;
const HEIGHT = 300;
const SVG_NS = 'http://www.w3.org/2000/svg';

interface CurvePoint {
  exact: number;
  approx: number;
}

/** Slider-driven chart of collision probability for n people. Every value
 *  is fetched from the service once and cached; going offline degrades to
 *  the cached curve instead of computing anything locally. */
export class BirthdayScreen {
  private n = 23;
  private cache = new Map<number, CurvePoint>();
  private crossingN: number | null = null;
  private offline = false;
  private inflight: Promise<void> = Promise.resolve();

  constructor(private container: HTMLElement, private api: ApiClient) {
    this.render();
    this.inflight = this.loadRange();
  }

  settled(): Promise<void> {
    return this.inflight;
  }

  setN(n: number): void {
    this.n = n;
    this.render();
  }

  cachedPoint(n: number): CurvePoint | undefined {
    return this.cache.get(n);
  }

  private async loadRange(): Promise<void> {
    try {
      const threshold = await this.api.birthdayThreshold(0.5, 'exact');
      this.crossingN = threshold.n;
      for (let n = 1; n <= N_MAX; n++) {
        const [exact, approx] = await Promise.all([
          this.api.birthdayValue(n, 'exact'),
          this.api.birthdayValue(n, 'approx'),
        ]);
        this.cache.set(n, { exact: exact.probability, approx: approx.probability });
      }
      this.offline = false;
    } catch {
      this.offline = true;
    }
    this.render();
  }

  // --- rendering -------------------------------------------------------------

  private render(): void {
    this.container.textContent = '';
    if (this.offline) {
      const banner = document.createElement('div');
      banner.className = 'banner error-banner';
      banner.dataset.testid = 'offline-banner';
      banner.textContent = 'offline — showing cached values only';
      this.container.append(banner);
    }

    const controls = document.createElement('div');
    controls.className = 'controls';
    const slider = document.createElement('input');
    slider.type = 'range';
    slider.min = '1';
    slider.max = String(N_MAX);
    slider.value = String(this.n);
    slider.dataset.testid = 'n-slider';
    slider.addEventListener('input', () => this.setN(Number(slider.value)));
    const label = document.createElement('span');
    label.dataset.testid = 'n-label';
    label.textContent = `n = ${this.n}`;
    controls.append(slider, label);
    this.container.append(controls);

    const point = this.cache.get(this.n);
    const readout = document.createElement('div');
    readout.className = 'readout';
    readout.dataset.testid = 'readout';
    readout.textContent = point
      ? `exact ${point.exact.toFixed(6)} · approx ${point.approx.toFixed(6)}`
      : 'exact — · approx —';
    this.container.append(readout);

    this.container.append(this.renderChart());
  }

  private renderChart(): SVGSVGElement {
    const svg = document.createElementNS(SVG_NS, 'svg');
    svg.setAttribute('viewBox', `0 0 ${WIDTH} ${HEIGHT}`);
    svg.setAttribute('width', String(WIDTH));
    svg.setAttribute('height', String(HEIGHT));
    svg.dataset.testid = 'chart';

    const x = (n: number) => ((n - 1) / (N_MAX - 1)) * (WIDTH - 20) + 10;
    const y = (p: number) => HEIGHT - 20 - p * (HEIGHT - 40);

    const half = document.createElementNS(SVG_NS, 'line');
    half.setAttribute('x1', String(x(1)));
    half.setAttribute('x2', String(x(N_MAX)));
    half.setAttribute('y1', String(y(0.5)));
    half.setAttribute('y2', String(y(0.5)));
    half.setAttribute('class', 'half-line');
    half.setAttribute('stroke', '#999');
    half.setAttribute('stroke-dasharray', '4 4');
    svg.append(half);

    for (const [formula, color] of [['exact', '#1f618d'], ['approx', '#c0392b']] as const) {
      const points: string[] = [];
      for (let n = 1; n <= N_MAX; n++) {
        const point = this.cache.get(n);
        if (point) points.push(`${x(n)},${y(point[formula])}`);
      }
      if (points.length === 0) continue;
      const line = document.createElementNS(SVG_NS, 'polyline');
      line.setAttribute('points', points.join(' '));
      line.setAttribute('fill', 'none');
      line.setAttribute('stroke', color);
      line.dataset.testid = `curve-${formula}`;
      svg.append(line);
    }

    if (this.crossingN !== null) {
      const marker = document.createElementNS(SVG_NS, 'line');
      marker.setAttribute('x1', String(x(this.crossingN)));
      marker.setAttribute('x2', String(x(this.crossingN)));
      marker.setAttribute('y1', '10');
      marker.setAttribute('y2', String(HEIGHT - 10));
      marker.setAttribute('stroke', '#27ae60');
      marker.dataset.testid = 'crossing-marker';
      marker.dataset.n = String(this.crossingN);
      svg.append(marker);
      const text = document.createElementNS(SVG_NS, 'text');
      text.setAttribute('x', String(x(this.crossingN) + 4));
      text.setAttribute('y', '20');
      text.textContent = `n=${this.crossingN}`;
      svg.append(text);
    }

    const cursor = document.createElementNS(SVG_NS, 'line');
    cursor.setAttribute('x1', String(x(this.n)));
    cursor.setAttribute('x2', String(x(this.n)));
    cursor.setAttribute('y1', '10');
    cursor.setAttribute('y2', String(HEIGHT - 10));
    cursor.setAttribute('stroke', '#aab7b8');
    cursor.dataset.testid = 'cursor';
    svg.append(cursor);

    return svg;
  }
}

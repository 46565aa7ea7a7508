import type {
  BirthdayThreshold, BirthdayValue, Catalog, CutWire, DissectionView,
  ErrorBody, Model, MontyStats, MontyStrategy, MontyView,
} from './types.js';

/** One entry per HTTP exchange, kept so tests (and curious users) can trace
 *  every displayed number back to a server response. */
export interface LoggedExchange {
  method: string;
  path: string;
  status: number;
  response: unknown;
}

/** Thrown for any non-2xx response; carries the parsed error body. */
export class ApiError extends Error {
  constructor(readonly status: number, readonly body: ErrorBody) {
    super(`${status} ${body.error}`);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  readonly log: LoggedExchange[] = [];
  fetchFn: FetchLike;

  constructor(private baseUrl: string, fetchFn?: FetchLike) {
    this.fetchFn = fetchFn ?? ((url, init) => globalThis.fetch(url, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { 'content-type': 'application/json' };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchFn(this.baseUrl + path, init);
    const parsed: unknown = await res.json();
    this.log.push({ method, path, status: res.status, response: parsed });
    if (!res.ok) {
      throw new ApiError(res.status, parsed as ErrorBody);
    }
    return parsed as T;
  }

  // --- dissection sessions ---

  createDissection(req: {
    shape?: string;
    cells?: [number, number][];
    model?: Model;
    token?: string;
  }): Promise<DissectionView> {
    return this.request('POST', '/api/dissection', req);
  }

  getDissection(id: string): Promise<DissectionView> {
    return this.request('GET', `/api/dissection/${id}`);
  }

  cut(id: string, cut: CutWire, token?: string): Promise<DissectionView> {
    const body: Record<string, unknown> = { cut };
    if (token !== undefined) body.token = token;
    return this.request('POST', `/api/dissection/${id}/cut`, body);
  }

  hint(id: string): Promise<{ id: string; hint: number }> {
    return this.request('GET', `/api/dissection/${id}/hint`);
  }

  // --- monty sessions ---

  createMonty(seed?: number): Promise<MontyView> {
    return this.request('POST', '/api/monty', seed === undefined ? {} : { seed });
  }

  getMonty(id: string): Promise<MontyView> {
    return this.request('GET', `/api/monty/${id}`);
  }

  pickDoor(id: string, door: number): Promise<MontyView> {
    return this.request('POST', `/api/monty/${id}/pick`, { door });
  }

  decide(id: string, strategy: MontyStrategy): Promise<MontyView> {
    return this.request('POST', `/api/monty/${id}/decide`, {
      strategy: strategy.toLowerCase(),
    });
  }

  montyStats(): Promise<MontyStats> {
    return this.request('GET', '/api/monty/stats');
  }

  // --- compute endpoints ---

  birthdayValue(n: number, formula: 'exact' | 'approx'): Promise<BirthdayValue> {
    return this.request('GET', `/api/birthday?n=${n}&formula=${formula}`);
  }

  birthdayThreshold(p: number, formula: 'exact' | 'approx'): Promise<BirthdayThreshold> {
    return this.request('GET', `/api/birthday?threshold=${p}&formula=${formula}`);
  }

  catalog(): Promise<Catalog> {
    return this.request('GET', '/api/catalog');
  }
}

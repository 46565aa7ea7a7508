/** Wire types mirroring the session service's JSON contract. */

export type Axis = 'H' | 'V';
export type Model = 'single-split' | 'full-line' | 'global-line';

export interface CutWire {
  target: string;
  axis: Axis;
  line: number;
  span: [number, number];
}

export interface DissectionView {
  id: string;
  model: string;
  pieces: Record<string, [number, number][]>;
  cut_count: number;
  hint: number;
  optimal_total: number;
  finished: boolean;
  score_note: string;
  created_at: string;
  history: CutWire[];
}

export interface ErrorBody {
  error: string;
  detail?: unknown;
  legal_cuts?: CutWire[];
}

export type MontyPhase = 'AWAIT_PICK' | 'AWAIT_DECISION' | 'RESOLVED';
export type MontyStrategy = 'STAY' | 'SWITCH';

export interface MontyView {
  id: string;
  phase: MontyPhase;
  picked: number | null;
  revealed: number | null;
  strategy: MontyStrategy | null;
  won: boolean | null;
  car_door?: number;
  final_door?: number;
}

export interface StrategyTally {
  games: number;
  wins: number;
  rate: number | null;
}

export interface MontyStats {
  STAY: StrategyTally;
  SWITCH: StrategyTally;
}

export interface BirthdayValue {
  n: number;
  formula: string;
  probability: number;
}

export interface BirthdayThreshold {
  threshold: number;
  formula: string;
  n: number;
}

export interface CatalogEntry {
  name: string;
  cells: [number, number][];
}

export interface Catalog {
  shapes: CatalogEntry[];
}

// Shapes of the service's JSON payloads, mirrored verbatim: the UI
// renders only from these, never from locally simulated state.

export interface GroupView {
  color: number;
  representative: [number, number];
  cells: [number, number][];
}

export interface BoardView {
  id: string;
  width: number;
  height: number;
  remaining: number;
  rows: string[];
  groups: GroupView[];
  legal_moves: [number, number][];
  history_depth: number;
  solved: boolean;
}

export interface HintView {
  move: [number, number] | null;
  projected: number;
  exact: boolean;
}

export type Solvability = "yes" | "no" | "unknown";

export interface SolvabilityView {
  solvable: Solvability;
  method: string;
}

export interface PartitionRequest {
  target: number;
  elements: number[];
}

export interface SatRequest {
  num_vars: number;
  clauses: number[][];
}

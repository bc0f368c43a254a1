// Session state as pure data plus transition helpers.  Every board
// shown comes verbatim from a service response; the only derived pieces
// are the hint overlay (cleared whenever the board changes) and the
// click counter for the solved banner.

import type { BoardView, HintView, Solvability } from "./types.js";

export interface SessionState {
  view: BoardView;
  hint: HintView | null;
  solvability: Solvability | null;
  moveCount: number;
}

export function startSession(view: BoardView): SessionState {
  return { view, hint: null, solvability: null, moveCount: 0 };
}

export function applyClick(state: SessionState, view: BoardView): SessionState {
  return { view, hint: null, solvability: null, moveCount: state.moveCount + 1 };
}

export function applyUndo(state: SessionState, view: BoardView): SessionState {
  return {
    view,
    hint: null,
    solvability: null,
    moveCount: Math.max(0, state.moveCount - 1),
  };
}

export function applyHint(state: SessionState, hint: HintView): SessionState {
  return { ...state, hint };
}

export function applySolvability(
  state: SessionState,
  solvability: Solvability,
): SessionState {
  return { ...state, solvability };
}

export function canUndo(state: SessionState): boolean {
  return state.view.history_depth >= 2;
}

export function hintedCells(state: SessionState): [number, number][] {
  if (!state.hint || !state.hint.move) return [];
  const [col, row] = state.hint.move;
  for (const group of state.view.groups) {
    if (group.cells.some(([c, r]) => c === col && r === row)) {
      return group.cells;
    }
  }
  return [[col, row]];
}
